#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ogan::stl {

// Arithmetic expression over signal values at a fixed time index.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Signal, Constant, Abs, Sum, Difference, Scale };

  Kind kind;
  std::string name;    // Signal
  double value = 0.0;  // Constant; scale factor for Scale
  ExprPtr lhs;
  ExprPtr rhs;
};

ExprPtr signal_ref(std::string name);
ExprPtr constant(double value);
ExprPtr abs_of(ExprPtr e);
ExprPtr sum(ExprPtr a, ExprPtr b);
ExprPtr difference(ExprPtr a, ExprPtr b);
ExprPtr scale(double factor, ExprPtr e);

enum class Relation { Ge, Gt, Le, Lt };

// Temporal window in time units; converted to index offsets against a
// concrete trace at evaluation time.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind {
    True,
    Predicate,
    Not,
    And,
    Or,
    Implies,
    Until,
    Eventually,
    Always,
  };

  Kind kind;
  ExprPtr lhs;  // Predicate
  ExprPtr rhs;
  Relation rel = Relation::Ge;
  FormulaPtr left;   // unary/binary operands
  FormulaPtr right;  // binary second operand; Until right-hand formula
  Interval window;   // temporal operators
};

FormulaPtr truth();
FormulaPtr predicate(ExprPtr lhs, Relation rel, ExprPtr rhs);
FormulaPtr negation(FormulaPtr f);
FormulaPtr conjunction(FormulaPtr a, FormulaPtr b);
FormulaPtr disjunction(FormulaPtr a, FormulaPtr b);
FormulaPtr implication(FormulaPtr a, FormulaPtr b);
FormulaPtr until(Interval w, FormulaPtr a, FormulaPtr b);
FormulaPtr eventually(Interval w, FormulaPtr f);
FormulaPtr always(Interval w, FormulaPtr f);

std::string to_string(const ExprPtr& e);
std::string to_string(const FormulaPtr& f);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);
bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

// Time units the formula may look ahead of the evaluation time.
double time_horizon(const FormulaPtr& f);

// Names of all signals referenced anywhere in the formula (deduplicated).
std::vector<std::string> referenced_signals(const FormulaPtr& f);

// Identity transform. The robustness metric cannot distinguish strict from
// non-strict relations at exact equality: both evaluate to 0 and a scaled
// robustness of 0 is treated as a falsification candidate for either kind.
// Callers confirm candidates with eval_boolean before reporting them.
FormulaPtr strict_equality_fixup(const FormulaPtr& f);

}  // namespace ogan::stl
