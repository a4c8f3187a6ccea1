#include <random>

#include "doctest.h"
#include "ogan/input_space.hpp"

using namespace ogan;
using namespace ogan::input;

TEST_CASE("normalize endpoints and midpoint") {
  CHECK(normalize(50.0, {0.0, 100.0}) == doctest::Approx(0.0));
  CHECK(normalize(0.0, {0.0, 100.0}) == doctest::Approx(-1.0));
  CHECK(normalize(325.0, {0.0, 325.0}) == doctest::Approx(1.0));
}

TEST_CASE("denormalize endpoints and midpoint") {
  CHECK(denormalize(0.0, {0.0, 100.0}) == doctest::Approx(50.0));
  CHECK(denormalize(1.0, {0.0, 325.0}) == doctest::Approx(325.0));
  CHECK(denormalize(-1.0, {50.0, 90.0}) == doctest::Approx(50.0));
}

TEST_CASE("normalize and denormalize are mutually inverse") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> lo_d(-100.0, 100.0);
  std::uniform_real_distribution<double> width(0.5, 400.0);
  for (int i = 0; i < 2000; ++i) {
    const double lo = lo_d(rng);
    const stl::SignalRange r{lo, lo + width(rng)};
    const double x = unit(rng);
    CHECK(normalize(denormalize(x, r), r) == doctest::Approx(x).epsilon(1e-12));
    const double v = denormalize(unit(rng), r);
    CHECK(denormalize(normalize(v, r), r) ==
          doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("single constant channel expands to the full grid") {
  InputSpec spec;
  spec.channels = {{"u", {0.0, 100.0}, 1, false}};
  spec.duration = 30.0;
  spec.period = 0.01;
  const auto trace = to_signals({{0.0}}, spec);
  CHECK(trace.length() == 3001);
  CHECK(trace.time_step() == 0.01);
  for (double v : trace.component("u")) CHECK(v == doctest::Approx(50.0));
}

TEST_CASE("two scalar channels become two constant components") {
  InputSpec spec;
  spec.channels = {{"p", {-1.0, 1.0}, 1, true}, {"q", {0.0, 4.0}, 1, true}};
  spec.duration = 1.0;
  spec.period = 1.0;
  CHECK(spec.dimension() == 2);
  CHECK(spec.is_vector_input());
  const auto trace = to_signals({{0.5, -0.5}}, spec);
  CHECK(trace.length() == 2);
  CHECK(trace.component("p")[0] == doctest::Approx(0.5));
  CHECK(trace.component("q")[1] == doctest::Approx(1.0));
}

TEST_CASE("six segments of five time units each") {
  InputSpec spec;
  spec.channels = {{"THROTTLE", {0.0, 100.0}, 6, false}};
  spec.duration = 30.0;
  spec.period = 0.01;
  CHECK(spec.dimension() == 6);
  TestInput t{{-1.0, -0.6, -0.2, 0.2, 0.6, 1.0}};
  const auto trace = to_signals(t, spec);
  CHECK(trace.length() == 3001);
  const auto& u = trace.component("THROTTLE");
  // Piece boundaries at 5 time units = 500 samples.
  CHECK(u[0] == doctest::Approx(0.0));
  CHECK(u[499] == doctest::Approx(0.0));
  CHECK(u[500] == doctest::Approx(20.0));
  CHECK(u[2999] == doctest::Approx(100.0));
  CHECK(u[3000] == doctest::Approx(100.0));  // right endpoint joins last piece
  for (int seg = 0; seg < 6; ++seg) {
    const std::size_t base = static_cast<std::size_t>(seg) * 500;
    for (std::size_t i = base; i < base + 500; ++i) {
      if (u[i] != u[base]) {
        CAPTURE(seg);
        CAPTURE(i);
        CHECK(u[i] == u[base]);
        break;
      }
    }
  }
}

TEST_CASE("dimension mismatch is rejected") {
  InputSpec spec;
  spec.channels = {{"u", {0.0, 1.0}, 3, false}};
  spec.duration = 3.0;
  spec.period = 0.5;
  CHECK_THROWS_AS(to_signals({{0.0, 0.0}}, spec), std::invalid_argument);
}
