#pragma once

// Random STL formulas and traces for property tests. The generator keeps a
// window budget in index units so every formula fits the trace horizon when
// evaluated at time 0.

#include <random>
#include <string>
#include <vector>

#include "ogan/stl/ast.hpp"
#include "ogan/stl/monitor.hpp"
#include "ogan/stl/trace.hpp"

namespace ogan::testgen {

struct FormulaOptions {
  int max_depth = 3;
  // Restrict predicates to forms that change by at most delta when every
  // signal sample changes by at most delta (signal-vs-constant shapes).
  bool lipschitz_predicates = false;
};

class RandomStl {
 public:
  RandomStl(std::mt19937_64& rng, std::vector<std::string> signals,
            stl::RangeMap ranges, double time_step)
      : rng_(rng),
        signals_(std::move(signals)),
        ranges_(std::move(ranges)),
        time_step_(time_step) {}

  stl::Trace trace(std::size_t length) {
    std::vector<std::vector<double>> columns;
    columns.reserve(signals_.size());
    for (const auto& name : signals_) {
      const auto r = ranges_.at(name);
      std::uniform_real_distribution<double> dist(r.lo, r.hi);
      std::vector<double> col(length);
      for (auto& v : col) v = dist(rng_);
      columns.push_back(std::move(col));
    }
    return stl::Trace(time_step_, signals_, std::move(columns));
  }

  stl::FormulaPtr formula(long index_budget, const FormulaOptions& opt) {
    return gen_formula(opt.max_depth, index_budget, opt);
  }

  const stl::RangeMap& ranges() const { return ranges_; }

 private:
  int pick(int n) {
    return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng_));
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  stl::Interval interval(long budget, long& used) {
    const long lo = std::uniform_int_distribution<long>(0, budget)(rng_);
    const long hi = std::uniform_int_distribution<long>(lo, budget)(rng_);
    used = hi;
    return stl::Interval{static_cast<double>(lo) * time_step_,
                         static_cast<double>(hi) * time_step_};
  }

  stl::ExprPtr gen_expr(int depth) {
    const auto& name = signals_[static_cast<std::size_t>(
        pick(static_cast<int>(signals_.size())))];
    const auto r = ranges_.at(name);
    if (depth == 0) {
      if (pick(3) == 0) return stl::constant(uniform(r.lo, r.hi));
      return stl::signal_ref(name);
    }
    switch (pick(6)) {
      case 0:
        return stl::abs_of(gen_expr(depth - 1));
      case 1:
        return stl::sum(gen_expr(depth - 1), gen_expr(depth - 1));
      case 2:
        return stl::difference(gen_expr(depth - 1), gen_expr(depth - 1));
      case 3:
        return stl::scale(uniform(-2.0, 2.0), gen_expr(depth - 1));
      default:
        return gen_expr(0);
    }
  }

  stl::FormulaPtr gen_predicate(const FormulaOptions& opt) {
    const stl::Relation rel = static_cast<stl::Relation>(pick(4));
    if (opt.lipschitz_predicates) {
      const auto& name = signals_[static_cast<std::size_t>(
          pick(static_cast<int>(signals_.size())))];
      const auto r = ranges_.at(name);
      auto lhs = stl::signal_ref(name);
      if (pick(3) == 0) lhs = stl::abs_of(std::move(lhs));
      // Thresholds a little beyond the declared range keep both verdicts
      // reachable.
      const double margin = 0.25 * (r.hi - r.lo);
      return stl::predicate(std::move(lhs), rel,
                            stl::constant(uniform(r.lo - margin,
                                                  r.hi + margin)));
    }
    return stl::predicate(gen_expr(pick(3)), rel, gen_expr(pick(3)));
  }

  stl::FormulaPtr gen_formula(int depth, long budget,
                              const FormulaOptions& opt) {
    if (depth == 0 || pick(4) == 0) {
      if (pick(16) == 0) return stl::truth();
      return gen_predicate(opt);
    }
    long used = 0;
    switch (pick(7)) {
      case 0:
        return stl::negation(gen_formula(depth - 1, budget, opt));
      case 1:
        return stl::conjunction(gen_formula(depth - 1, budget, opt),
                                gen_formula(depth - 1, budget, opt));
      case 2:
        return stl::disjunction(gen_formula(depth - 1, budget, opt),
                                gen_formula(depth - 1, budget, opt));
      case 3:
        return stl::implication(gen_formula(depth - 1, budget, opt),
                                gen_formula(depth - 1, budget, opt));
      case 4: {
        const auto w = interval(budget, used);
        return stl::eventually(w, gen_formula(depth - 1, budget - used, opt));
      }
      case 5: {
        const auto w = interval(budget, used);
        return stl::always(w, gen_formula(depth - 1, budget - used, opt));
      }
      default: {
        const auto w = interval(budget, used);
        return stl::until(w, gen_formula(depth - 1, budget - used, opt),
                          gen_formula(depth - 1, budget - used, opt));
      }
    }
  }

  std::mt19937_64& rng_;
  std::vector<std::string> signals_;
  stl::RangeMap ranges_;
  double time_step_;
};

}  // namespace ogan::testgen
