#include "ogan/stl/ast.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ogan::stl {

namespace {

ExprPtr make_expr(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
FormulaPtr make_formula(Formula f) {
  return std::make_shared<const Formula>(std::move(f));
}

void check_interval(const Interval& w) {
  if (!(w.lo >= 0.0) || !(w.hi >= 0.0)) {
    throw std::invalid_argument("interval bounds must be nonnegative");
  }
  if (!(w.lo <= w.hi)) {
    throw std::invalid_argument("malformed interval: lo > hi");
  }
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

ExprPtr signal_ref(std::string name) {
  Expr e;
  e.kind = Expr::Kind::Signal;
  e.name = std::move(name);
  return make_expr(std::move(e));
}

ExprPtr constant(double value) {
  Expr e;
  e.kind = Expr::Kind::Constant;
  e.value = value;
  return make_expr(std::move(e));
}

ExprPtr abs_of(ExprPtr inner) {
  Expr e;
  e.kind = Expr::Kind::Abs;
  e.lhs = std::move(inner);
  return make_expr(std::move(e));
}

ExprPtr sum(ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = Expr::Kind::Sum;
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return make_expr(std::move(e));
}

ExprPtr difference(ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = Expr::Kind::Difference;
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return make_expr(std::move(e));
}

ExprPtr scale(double factor, ExprPtr inner) {
  Expr e;
  e.kind = Expr::Kind::Scale;
  e.value = factor;
  e.lhs = std::move(inner);
  return make_expr(std::move(e));
}

FormulaPtr truth() {
  Formula f;
  f.kind = Formula::Kind::True;
  return make_formula(std::move(f));
}

FormulaPtr predicate(ExprPtr lhs, Relation rel, ExprPtr rhs) {
  Formula f;
  f.kind = Formula::Kind::Predicate;
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  f.rel = rel;
  return make_formula(std::move(f));
}

FormulaPtr negation(FormulaPtr inner) {
  Formula f;
  f.kind = Formula::Kind::Not;
  f.left = std::move(inner);
  return make_formula(std::move(f));
}

FormulaPtr conjunction(FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = Formula::Kind::And;
  f.left = std::move(a);
  f.right = std::move(b);
  return make_formula(std::move(f));
}

FormulaPtr disjunction(FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = Formula::Kind::Or;
  f.left = std::move(a);
  f.right = std::move(b);
  return make_formula(std::move(f));
}

FormulaPtr implication(FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = Formula::Kind::Implies;
  f.left = std::move(a);
  f.right = std::move(b);
  return make_formula(std::move(f));
}

FormulaPtr until(Interval w, FormulaPtr a, FormulaPtr b) {
  check_interval(w);
  Formula f;
  f.kind = Formula::Kind::Until;
  f.window = w;
  f.left = std::move(a);
  f.right = std::move(b);
  return make_formula(std::move(f));
}

FormulaPtr eventually(Interval w, FormulaPtr inner) {
  check_interval(w);
  Formula f;
  f.kind = Formula::Kind::Eventually;
  f.window = w;
  f.left = std::move(inner);
  return make_formula(std::move(f));
}

FormulaPtr always(Interval w, FormulaPtr inner) {
  check_interval(w);
  Formula f;
  f.kind = Formula::Kind::Always;
  f.window = w;
  f.left = std::move(inner);
  return make_formula(std::move(f));
}

std::string to_string(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Signal:
      return e->name;
    case Expr::Kind::Constant:
      return format_number(e->value);
    case Expr::Kind::Abs:
      return "abs(" + to_string(e->lhs) + ")";
    case Expr::Kind::Sum:
      return "(" + to_string(e->lhs) + " + " + to_string(e->rhs) + ")";
    case Expr::Kind::Difference:
      return "(" + to_string(e->lhs) + " - " + to_string(e->rhs) + ")";
    case Expr::Kind::Scale:
      return "(" + format_number(e->value) + " * " + to_string(e->lhs) + ")";
  }
  throw std::logic_error("unreachable expression kind");
}

namespace {

std::string interval_str(const Interval& w) {
  return "[" + format_number(w.lo) + "," + format_number(w.hi) + "]";
}

std::string rel_str(Relation r) {
  switch (r) {
    case Relation::Ge:
      return ">=";
    case Relation::Gt:
      return ">";
    case Relation::Le:
      return "<=";
    case Relation::Lt:
      return "<";
  }
  throw std::logic_error("unreachable relation");
}

}  // namespace

std::string to_string(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::True:
      return "true";
    case Formula::Kind::Predicate:
      return "(" + to_string(f->lhs) + " " + rel_str(f->rel) + " " +
             to_string(f->rhs) + ")";
    case Formula::Kind::Not:
      return "(not " + to_string(f->left) + ")";
    case Formula::Kind::And:
      return "(" + to_string(f->left) + " and " + to_string(f->right) + ")";
    case Formula::Kind::Or:
      return "(" + to_string(f->left) + " or " + to_string(f->right) + ")";
    case Formula::Kind::Implies:
      return "(" + to_string(f->left) + " implies " + to_string(f->right) +
             ")";
    case Formula::Kind::Until:
      return "(" + to_string(f->left) + " until" + interval_str(f->window) +
             " " + to_string(f->right) + ")";
    case Formula::Kind::Eventually:
      return "(eventually" + interval_str(f->window) + " " +
             to_string(f->left) + ")";
    case Formula::Kind::Always:
      return "(always" + interval_str(f->window) + " " + to_string(f->left) +
             ")";
  }
  throw std::logic_error("unreachable formula kind");
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Signal:
      return a->name == b->name;
    case Expr::Kind::Constant:
      return a->value == b->value;
    case Expr::Kind::Abs:
      return structurally_equal(a->lhs, b->lhs);
    case Expr::Kind::Sum:
    case Expr::Kind::Difference:
      return structurally_equal(a->lhs, b->lhs) &&
             structurally_equal(a->rhs, b->rhs);
    case Expr::Kind::Scale:
      return a->value == b->value && structurally_equal(a->lhs, b->lhs);
  }
  return false;
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::Predicate:
      return a->rel == b->rel && structurally_equal(a->lhs, b->lhs) &&
             structurally_equal(a->rhs, b->rhs);
    case Formula::Kind::Not:
      return structurally_equal(a->left, b->left);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return structurally_equal(a->left, b->left) &&
             structurally_equal(a->right, b->right);
    case Formula::Kind::Until:
      return a->window.lo == b->window.lo && a->window.hi == b->window.hi &&
             structurally_equal(a->left, b->left) &&
             structurally_equal(a->right, b->right);
    case Formula::Kind::Eventually:
    case Formula::Kind::Always:
      return a->window.lo == b->window.lo && a->window.hi == b->window.hi &&
             structurally_equal(a->left, b->left);
  }
  return false;
}

double time_horizon(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::Predicate:
      return 0.0;
    case Formula::Kind::Not:
      return time_horizon(f->left);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return std::max(time_horizon(f->left), time_horizon(f->right));
    case Formula::Kind::Until:
      return f->window.hi +
             std::max(time_horizon(f->left), time_horizon(f->right));
    case Formula::Kind::Eventually:
    case Formula::Kind::Always:
      return f->window.hi + time_horizon(f->left);
  }
  throw std::logic_error("unreachable formula kind");
}

namespace {

void collect_signals(const ExprPtr& e, std::vector<std::string>& out) {
  switch (e->kind) {
    case Expr::Kind::Signal:
      if (std::find(out.begin(), out.end(), e->name) == out.end()) {
        out.push_back(e->name);
      }
      return;
    case Expr::Kind::Constant:
      return;
    case Expr::Kind::Abs:
    case Expr::Kind::Scale:
      collect_signals(e->lhs, out);
      return;
    case Expr::Kind::Sum:
    case Expr::Kind::Difference:
      collect_signals(e->lhs, out);
      collect_signals(e->rhs, out);
      return;
  }
}

void collect_signals(const FormulaPtr& f, std::vector<std::string>& out) {
  if (f->lhs) collect_signals(f->lhs, out);
  if (f->rhs) collect_signals(f->rhs, out);
  if (f->left) collect_signals(f->left, out);
  if (f->right) collect_signals(f->right, out);
}

}  // namespace

std::vector<std::string> referenced_signals(const FormulaPtr& f) {
  std::vector<std::string> names;
  collect_signals(f, names);
  return names;
}

FormulaPtr strict_equality_fixup(const FormulaPtr& f) { return f; }

}  // namespace ogan::stl
