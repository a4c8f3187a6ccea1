#include <cmath>
#include <vector>

#include "doctest.h"
#include "ogan/stl/monitor.hpp"
#include "ogan/stl/parser.hpp"

using namespace ogan::stl;

namespace {

// SPEED peaks at 5 within [0,10], RPM peaks at 1000 within [0,30].
Trace scaling_example_trace() {
  const double step = 0.01;
  const std::size_t n = 3001;
  std::vector<double> speed(n);
  std::vector<double> rpm(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * step;
    speed[i] = 5.0 - 0.1 * t;
    rpm[i] = 1000.0 * t / 30.0;
  }
  return Trace(step, {"SPEED", "RPM"}, {std::move(speed), std::move(rpm)});
}

const RangeMap kScalingRanges = {{"SPEED", {0.0, 120.0}},
                                 {"RPM", {0.0, 4800.0}}};

Trace constant_trace(const std::string& name, double value, std::size_t n,
                     double step) {
  return Trace(step, {name}, {std::vector<double>(n, value)});
}

}  // namespace

TEST_CASE("boolean semantics on simple windows") {
  const auto trace = constant_trace("SPEED", 100.0, 2101, 0.01);
  const auto f = parse_stl("always[0,20] (SPEED < 120)");
  CHECK(eval_boolean(f, trace, 0));

  const auto example = scaling_example_trace();
  CHECK(eval_boolean(parse_stl("always[0,10] (SPEED < 50)"), example, 0));
  CHECK_FALSE(
      eval_boolean(parse_stl("eventually[0,30] (RPM > 2700)"), example, 0));
}

TEST_CASE("scaled robustness uses the witnessing subformula's range") {
  const auto trace = scaling_example_trace();

  const auto left = parse_stl("always[0,10] (SPEED < 50)");
  const auto r_left = eval_robustness(left, trace, kScalingRanges, 0);
  CHECK(r_left.value == doctest::Approx(45.0).epsilon(1e-12));
  CHECK(r_left.effective_lo == doctest::Approx(-70.0));
  CHECK(r_left.effective_hi == doctest::Approx(50.0));

  const auto right = parse_stl("eventually[0,30] (RPM > 2700)");
  const auto r_right = eval_robustness(right, trace, kScalingRanges, 0);
  CHECK(r_right.value == doctest::Approx(-1700.0).epsilon(1e-12));
  CHECK(r_right.scaled == 0.0);

  const auto both = parse_stl(
      "(always[0,10] (SPEED < 50)) or (eventually[0,30] (RPM > 2700))");
  const auto r = eval_robustness(both, trace, kScalingRanges, 0);
  CHECK(r.value == doctest::Approx(45.0).epsilon(1e-12));
  CHECK(r.effective_lo == doctest::Approx(-70.0).epsilon(1e-12));
  CHECK(r.effective_hi == doctest::Approx(50.0).epsilon(1e-12));
  CHECK(r.scaled == doctest::Approx(0.9).epsilon(1e-12));
  // Scaling against the merged predicate ranges would report ~0.0214.
  CHECK(std::abs(r.scaled - 45.0 / 2100.0) > 0.8);
}

TEST_CASE("negation flips the value and mirrors the range") {
  const auto trace = scaling_example_trace();
  const auto inner = parse_stl("always[0,10] (SPEED < 50)");
  const auto outer = parse_stl("not (always[0,10] (SPEED < 50))");
  const auto ri = eval_robustness(inner, trace, kScalingRanges, 0);
  const auto ro = eval_robustness(outer, trace, kScalingRanges, 0);
  CHECK(ro.value == -ri.value);
  CHECK(ro.effective_lo == -ri.effective_hi);
  CHECK(ro.effective_hi == -ri.effective_lo);
  CHECK(ro.scaled == 0.0);
}

TEST_CASE("robustness cannot separate strict and non-strict at equality") {
  const auto trace = constant_trace("X", 3.0, 5, 1.0);
  const RangeMap ranges = {{"X", {0.0, 10.0}}};

  const auto ge = eval_robustness(parse_stl("X >= 3"), trace, ranges, 0);
  CHECK(ge.value == 0.0);
  CHECK(ge.scaled == 0.0);  // counted as a falsification candidate
  CHECK(eval_boolean(parse_stl("X >= 3"), trace, 0));
  CHECK_FALSE(eval_boolean(parse_stl("X > 3"), trace, 0));

  const auto gt = eval_robustness(parse_stl("X > 2"), trace, ranges, 0);
  CHECK(gt.value == 1.0);
  CHECK(gt.scaled == doctest::Approx(1.0 / 8.0));  // range [-2, 8]

  const auto lt = eval_robustness(parse_stl("X < 3"), trace, ranges, 0);
  CHECK(lt.value == 0.0);
  CHECK(lt.scaled == 0.0);

  const auto fixed = strict_equality_fixup(parse_stl("X >= 3"));
  CHECK(structurally_equal(fixed, parse_stl("X >= 3")));
}

TEST_CASE("until follows the max-min semantics with closed prefix") {
  // x: 2 1 -1 4, y: -3 -2 5 1, step 1
  Trace trace(1.0, {"x", "y"}, {{2.0, 1.0, -1.0, 4.0}, {-3.0, -2.0, 5.0, 1.0}});
  const RangeMap ranges = {{"x", {-10.0, 10.0}}, {"y", {-10.0, 10.0}}};
  const auto f = parse_stl("(x > 0) until[0,3] (y > 0)");

  // t'=0: min(-3, 2) = -3; t'=1: min(-2, min(2,1)) = -2;
  // t'=2: min(5, min(2,1,-1)) = -1; t'=3: min(1, -1) = -1.  max = -1.
  const auto r = eval_robustness(f, trace, ranges, 0);
  CHECK(r.value == -1.0);
  CHECK_FALSE(eval_boolean(f, trace, 0));

  // Restrict the window so the witness is t'=1 before x dips negative.
  Trace ok(1.0, {"x", "y"}, {{2.0, 1.0, -1.0, 4.0}, {-3.0, 2.0, 5.0, 1.0}});
  const auto r2 = eval_robustness(f, ok, ranges, 0);
  CHECK(r2.value == 1.0);  // t'=1: min(2, min(2,1)) = 1
  CHECK(eval_boolean(f, ok, 0));
}

TEST_CASE("boolean until needs the left operand through the witness") {
  // psi true immediately but phi already false at t: not satisfied.
  Trace trace(1.0, {"x", "y"}, {{-1.0, 5.0}, {5.0, 5.0}});
  const auto f = parse_stl("(x > 0) until[0,1] (y > 0)");
  CHECK_FALSE(eval_boolean(f, trace, 0));
  const RangeMap ranges = {{"x", {-10.0, 10.0}}, {"y", {-10.0, 10.0}}};
  CHECK(eval_robustness(f, trace, ranges, 0).value < 0.0);
}

TEST_CASE("horizon overflow and missing declarations are reported") {
  const auto trace = constant_trace("x", 1.0, 10, 1.0);
  const RangeMap ranges = {{"x", {0.0, 2.0}}};

  CHECK_THROWS_AS(eval_boolean(parse_stl("always[0,20] (x < 2)"), trace, 0),
                  HorizonError);
  CHECK_THROWS_AS(
      eval_robustness(parse_stl("always[0,5] (x < 2)"), trace, ranges, 7),
      HorizonError);
  CHECK_THROWS_AS(eval_boolean(parse_stl("y < 1"), trace, 0), EvalError);
  CHECK_THROWS_AS(eval_robustness(parse_stl("x < 2"), trace, RangeMap{}, 0),
                  EvalError);
}

TEST_CASE("true has an infinite effective range that is never divided by") {
  const auto trace = constant_trace("x", 1.0, 4, 1.0);
  const RangeMap ranges = {{"x", {0.0, 2.0}}};

  const auto top = eval_robustness(parse_stl("true"), trace, ranges, 0);
  CHECK(std::isinf(top.value));
  CHECK(top.scaled == 1.0);

  // min against the true branch always selects the finite side.
  const auto conj =
      eval_robustness(parse_stl("true and x > 0"), trace, ranges, 0);
  CHECK(conj.value == 1.0);
  CHECK(conj.effective_hi == 2.0);
  CHECK(conj.scaled == doctest::Approx(0.5));

  const auto neg = eval_robustness(parse_stl("not true"), trace, ranges, 0);
  CHECK(std::isinf(neg.value));
  CHECK(neg.value < 0.0);
  CHECK(neg.scaled == 0.0);
}

TEST_CASE("intervals in time units are rounded to the sample grid") {
  // step 0.1: [0, 0.19] covers indices 0..2 (0.19/0.1 rounds to 2).
  Trace trace(0.1, {"x"}, {{1.0, 2.0, 3.0, 9.0}});
  const RangeMap ranges = {{"x", {0.0, 10.0}}};
  const auto f = parse_stl("always[0,0.19] (x < 5)");
  CHECK(eval_robustness(f, trace, ranges, 0).value == 2.0);
  CHECK(eval_boolean(f, trace, 0));
}
