#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "ogan/stl/ast.hpp"
#include "ogan/stl/trace.hpp"

namespace ogan::stl {

// Declared range [lo, hi] of one signal component, lo < hi.
struct SignalRange {
  double lo;
  double hi;
};

inline void validate(const SignalRange& r) {
  if (!(r.lo < r.hi)) {
    throw std::invalid_argument("signal range needs lo < hi");
  }
}

using RangeMap = std::map<std::string, SignalRange>;

struct RobustnessResult {
  double value;         // traditional robustness
  double effective_lo;  // lower end of the effective range
  double effective_hi;  // upper end of the effective range
  double scaled;        // value / effective_hi clamped into [0, 1]
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HorizonError : public EvalError {
 public:
  using EvalError::EvalError;
};

// Boolean satisfaction at time index t under the inductive semantics.
// Throws HorizonError when the formula needs samples past the trace end and
// EvalError for signals missing from the trace.
bool eval_boolean(const FormulaPtr& f, const Trace& trace, std::size_t t);

// Traditional robustness plus the trace-dependent effective range and the
// scaled metric. Every referenced signal needs a declared range.
RobustnessResult eval_robustness(const FormulaPtr& f, const Trace& trace,
                                 const RangeMap& ranges, std::size_t t);

// Index offsets a temporal window covers on a concrete grid (bounds rounded
// to the nearest sample).
long interval_index(double bound, double time_step);

}  // namespace ogan::stl
