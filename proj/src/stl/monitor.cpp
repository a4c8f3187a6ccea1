#include "ogan/stl/monitor.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>
#include <vector>

namespace ogan::stl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Flat view of a formula: nodes indexed for memoization, signals resolved
// to trace columns once.
class Context {
 public:
  Context(const FormulaPtr& root, const Trace& trace, const RangeMap* ranges)
      : trace_(trace), ranges_(ranges) {
    index_formula(root);
  }

  const Trace& trace() const { return trace_; }

  std::size_t node_count() const { return order_.size(); }

  std::size_t index_of(const Formula* f) const { return ids_.at(f); }

  long to_index(double bound) const {
    return interval_index(bound, trace_.time_step());
  }

  const std::vector<double>& column(const std::string& name) const {
    if (!trace_.has_component(name)) {
      throw EvalError("unknown signal name: " + name);
    }
    return trace_.component(name);
  }

  SignalRange declared_range(const std::string& name) const {
    if (ranges_ == nullptr) {
      throw EvalError("no signal ranges declared");
    }
    auto it = ranges_->find(name);
    if (it == ranges_->end()) {
      throw EvalError("missing signal range for: " + name);
    }
    validate(it->second);
    return it->second;
  }

  void check_horizon(const FormulaPtr& root, std::size_t t) const {
    const long need = static_cast<long>(t) + horizon_indices(root);
    if (need >= static_cast<long>(trace_.length())) {
      throw HorizonError(
          "formula horizon overruns the trace: needs sample " +
          std::to_string(need) + " but trace ends at " +
          std::to_string(trace_.length() - 1));
    }
  }

 private:
  long horizon_indices(const FormulaPtr& f) const {
    switch (f->kind) {
      case Formula::Kind::True:
      case Formula::Kind::Predicate:
        return 0;
      case Formula::Kind::Not:
        return horizon_indices(f->left);
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Implies:
        return std::max(horizon_indices(f->left), horizon_indices(f->right));
      case Formula::Kind::Until:
        return to_index(f->window.hi) +
               std::max(horizon_indices(f->left), horizon_indices(f->right));
      case Formula::Kind::Eventually:
      case Formula::Kind::Always:
        return to_index(f->window.hi) + horizon_indices(f->left);
    }
    return 0;
  }

  void index_formula(const FormulaPtr& f) {
    ids_.emplace(f.get(), order_.size());
    order_.push_back(f.get());
    if (f->left) index_formula(f->left);
    if (f->right) index_formula(f->right);
  }

  const Trace& trace_;
  const RangeMap* ranges_;
  std::unordered_map<const Formula*, std::size_t> ids_;
  std::vector<const Formula*> order_;
};

double eval_expr(const ExprPtr& e, const Context& ctx, std::size_t t) {
  switch (e->kind) {
    case Expr::Kind::Signal:
      return ctx.column(e->name)[t];
    case Expr::Kind::Constant:
      return e->value;
    case Expr::Kind::Abs:
      return std::abs(eval_expr(e->lhs, ctx, t));
    case Expr::Kind::Sum:
      return eval_expr(e->lhs, ctx, t) + eval_expr(e->rhs, ctx, t);
    case Expr::Kind::Difference:
      return eval_expr(e->lhs, ctx, t) - eval_expr(e->rhs, ctx, t);
    case Expr::Kind::Scale:
      return e->value * eval_expr(e->lhs, ctx, t);
  }
  throw EvalError("unreachable expression kind");
}

struct Bounds {
  double lo;
  double hi;
};

// Interval arithmetic over declared signal ranges; time independent.
Bounds expr_bounds(const ExprPtr& e, const Context& ctx) {
  switch (e->kind) {
    case Expr::Kind::Signal: {
      const SignalRange r = ctx.declared_range(e->name);
      return {r.lo, r.hi};
    }
    case Expr::Kind::Constant:
      return {e->value, e->value};
    case Expr::Kind::Abs: {
      const Bounds b = expr_bounds(e->lhs, ctx);
      if (b.lo >= 0.0) return b;
      if (b.hi <= 0.0) return {-b.hi, -b.lo};
      return {0.0, std::max(-b.lo, b.hi)};
    }
    case Expr::Kind::Sum: {
      const Bounds a = expr_bounds(e->lhs, ctx);
      const Bounds b = expr_bounds(e->rhs, ctx);
      return {a.lo + b.lo, a.hi + b.hi};
    }
    case Expr::Kind::Difference: {
      const Bounds a = expr_bounds(e->lhs, ctx);
      const Bounds b = expr_bounds(e->rhs, ctx);
      return {a.lo - b.hi, a.hi - b.lo};
    }
    case Expr::Kind::Scale: {
      const Bounds b = expr_bounds(e->lhs, ctx);
      if (e->value >= 0.0) return {e->value * b.lo, e->value * b.hi};
      return {e->value * b.hi, e->value * b.lo};
    }
  }
  throw EvalError("unreachable expression kind");
}

// --- Boolean monitor ------------------------------------------------------
//
// Kept deliberately independent of the robustness path: it is the oracle the
// sign-consistency properties are checked against.

class BooleanMonitor {
 public:
  explicit BooleanMonitor(const Context& ctx)
      : ctx_(ctx),
        memo_(ctx.node_count(),
              std::vector<signed char>(ctx.trace().length(), -1)) {}

  bool eval(const FormulaPtr& f, std::size_t t) {
    signed char& slot = memo_[ctx_.index_of(f.get())][t];
    if (slot >= 0) return slot != 0;
    const bool v = compute(f, t);
    slot = v ? 1 : 0;
    return v;
  }

 private:
  bool compute(const FormulaPtr& f, std::size_t t) {
    switch (f->kind) {
      case Formula::Kind::True:
        return true;
      case Formula::Kind::Predicate: {
        const double a = eval_expr(f->lhs, ctx_, t);
        const double b = eval_expr(f->rhs, ctx_, t);
        switch (f->rel) {
          case Relation::Ge:
            return a >= b;
          case Relation::Gt:
            return a > b;
          case Relation::Le:
            return a <= b;
          case Relation::Lt:
            return a < b;
        }
        return false;
      }
      case Formula::Kind::Not:
        return !eval(f->left, t);
      case Formula::Kind::And:
        return eval(f->left, t) && eval(f->right, t);
      case Formula::Kind::Or:
        return eval(f->left, t) || eval(f->right, t);
      case Formula::Kind::Implies:
        return !eval(f->left, t) || eval(f->right, t);
      case Formula::Kind::Eventually: {
        const long a = ctx_.to_index(f->window.lo);
        const long b = ctx_.to_index(f->window.hi);
        for (long u = static_cast<long>(t) + a; u <= static_cast<long>(t) + b;
             ++u) {
          if (eval(f->left, static_cast<std::size_t>(u))) return true;
        }
        return false;
      }
      case Formula::Kind::Always: {
        const long a = ctx_.to_index(f->window.lo);
        const long b = ctx_.to_index(f->window.hi);
        for (long u = static_cast<long>(t) + a; u <= static_cast<long>(t) + b;
             ++u) {
          if (!eval(f->left, static_cast<std::size_t>(u))) return false;
        }
        return true;
      }
      case Formula::Kind::Until: {
        // exists t' in t+I with psi at t' and phi throughout [t, t'].
        const long a = ctx_.to_index(f->window.lo);
        const long b = ctx_.to_index(f->window.hi);
        bool phi_holds_so_far = true;
        long u = static_cast<long>(t);
        for (; u < static_cast<long>(t) + a; ++u) {
          if (!eval(f->left, static_cast<std::size_t>(u))) {
            phi_holds_so_far = false;
            break;
          }
        }
        if (!phi_holds_so_far) return false;
        for (; u <= static_cast<long>(t) + b; ++u) {
          if (!eval(f->left, static_cast<std::size_t>(u))) {
            // phi broke at u: psi must have held at some earlier point in
            // the window together with phi on [t, that point]; since phi
            // held through u-1, only points < u qualify and they were
            // already checked below.
            return false;
          }
          if (eval(f->right, static_cast<std::size_t>(u))) return true;
        }
        return false;
      }
    }
    return false;
  }

  const Context& ctx_;
  std::vector<std::vector<signed char>> memo_;
};

// --- Robustness monitor ----------------------------------------------------

struct RobEntry {
  double value;
  double lo;
  double hi;
};

class RobustnessMonitor {
 public:
  explicit RobustnessMonitor(const Context& ctx)
      : ctx_(ctx),
        memo_(ctx.node_count(),
              std::vector<RobEntry>(ctx.trace().length(),
                                    {std::numeric_limits<double>::quiet_NaN(),
                                     0.0, 0.0})) {}

  RobEntry eval(const FormulaPtr& f, std::size_t t) {
    RobEntry& slot = memo_[ctx_.index_of(f.get())][t];
    if (!std::isnan(slot.value)) return slot;
    slot = compute(f, t);
    return slot;
  }

 private:
  RobEntry compute(const FormulaPtr& f, std::size_t t) {
    switch (f->kind) {
      case Formula::Kind::True:
        return {kInf, kInf, kInf};
      case Formula::Kind::Predicate: {
        const double a = eval_expr(f->lhs, ctx_, t);
        const double b = eval_expr(f->rhs, ctx_, t);
        const Bounds ba = expr_bounds(f->lhs, ctx_);
        const Bounds bb = expr_bounds(f->rhs, ctx_);
        switch (f->rel) {
          case Relation::Ge:
          case Relation::Gt:
            return {a - b, ba.lo - bb.hi, ba.hi - bb.lo};
          case Relation::Le:
          case Relation::Lt:
            return {b - a, bb.lo - ba.hi, bb.hi - ba.lo};
        }
        throw EvalError("unreachable relation");
      }
      case Formula::Kind::Not: {
        const RobEntry r = eval(f->left, t);
        return {-r.value, -r.hi, -r.lo};
      }
      case Formula::Kind::And: {
        const RobEntry a = eval(f->left, t);
        const RobEntry b = eval(f->right, t);
        // Witness is the conjunct attaining the minimum, left on ties.
        return a.value <= b.value ? a : b;
      }
      case Formula::Kind::Or: {
        const RobEntry a = eval(f->left, t);
        const RobEntry b = eval(f->right, t);
        return a.value >= b.value ? a : b;
      }
      case Formula::Kind::Implies: {
        const RobEntry a = eval(f->left, t);
        const RobEntry na = RobEntry{-a.value, -a.hi, -a.lo};
        const RobEntry b = eval(f->right, t);
        return na.value >= b.value ? na : b;
      }
      case Formula::Kind::Eventually: {
        const long a = ctx_.to_index(f->window.lo);
        const long b = ctx_.to_index(f->window.hi);
        RobEntry best{-kInf, 0.0, 0.0};
        bool first = true;
        for (long u = static_cast<long>(t) + a; u <= static_cast<long>(t) + b;
             ++u) {
          const RobEntry r = eval(f->left, static_cast<std::size_t>(u));
          if (first || r.value > best.value) {
            best = r;
            first = false;
          }
        }
        return best;
      }
      case Formula::Kind::Always: {
        const long a = ctx_.to_index(f->window.lo);
        const long b = ctx_.to_index(f->window.hi);
        RobEntry best{kInf, 0.0, 0.0};
        bool first = true;
        for (long u = static_cast<long>(t) + a; u <= static_cast<long>(t) + b;
             ++u) {
          const RobEntry r = eval(f->left, static_cast<std::size_t>(u));
          if (first || r.value < best.value) {
            best = r;
            first = false;
          }
        }
        return best;
      }
      case Formula::Kind::Until:
        return compute_until(f, t);
    }
    throw EvalError("unreachable formula kind");
  }

  RobEntry compute_until(const FormulaPtr& f, std::size_t t) {
    const long a = ctx_.to_index(f->window.lo);
    const long b = ctx_.to_index(f->window.hi);
    // max over t' in t+I of min{ rho(psi, t'), min over [t, t'] of rho(phi) }
    // with the least witnessing indices on ties. The running minimum of phi
    // is maintained over the closed prefix [t, t'] so that the sign agrees
    // with the Boolean semantics.
    RobEntry run_min{kInf, kInf, kInf};
    RobEntry best{-kInf, 0.0, 0.0};
    bool have_best = false;
    for (long u = static_cast<long>(t); u <= static_cast<long>(t) + b; ++u) {
      const RobEntry phi = eval(f->left, static_cast<std::size_t>(u));
      if (phi.value < run_min.value) run_min = phi;
      if (u < static_cast<long>(t) + a) continue;
      const RobEntry psi = eval(f->right, static_cast<std::size_t>(u));
      // psi wins the branch on ties, matching the effective-range rule.
      const RobEntry cand = psi.value <= run_min.value ? psi : run_min;
      if (!have_best || cand.value > best.value) {
        best = cand;
        have_best = true;
      }
    }
    return best;
  }

  const Context& ctx_;
  std::vector<std::vector<RobEntry>> memo_;
};

double scale_value(const RobEntry& r) {
  if (r.value <= 0.0) return 0.0;
  if (std::isinf(r.value)) return 1.0;
  if (r.hi == 0.0) {
    throw EvalError(
        "degenerate effective range: upper bound 0 with positive robustness");
  }
  return r.value / r.hi;
}

}  // namespace

long interval_index(double bound, double time_step) {
  return std::lround(bound / time_step);
}

bool eval_boolean(const FormulaPtr& f, const Trace& trace, std::size_t t) {
  Context ctx(f, trace, nullptr);
  ctx.check_horizon(f, t);
  BooleanMonitor monitor(ctx);
  return monitor.eval(f, t);
}

RobustnessResult eval_robustness(const FormulaPtr& f, const Trace& trace,
                                 const RangeMap& ranges, std::size_t t) {
  Context ctx(f, trace, &ranges);
  ctx.check_horizon(f, t);
  RobustnessMonitor monitor(ctx);
  const RobEntry r = monitor.eval(f, t);
  return RobustnessResult{r.value, r.lo, r.hi, scale_value(r)};
}

}  // namespace ogan::stl
