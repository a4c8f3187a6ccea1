#pragma once

#include <array>

#include "ogan/sut/sut.hpp"

namespace ogan::sut {

// SUT-A: plain vector input u in [-1,1]^3, constant scalar output
// y = |u - center|. Paired with `always[0,1] (y > radius)`, so the
// falsifying set is the closed ball around `center` with a known volume
// fraction of (4/3) pi r^3 / 8.
SutDescriptor sut_quadratic_basin(const std::array<double, 3>& center,
                                  double radius);

// SUT-B: throttle signal (6 pieces, range [0,100], 30 time units) driving
// v' = 0.05 u - 0.01 v. Paired with `always[0,30] (v < 120)`; only
// near-maximal sustained throttle escapes past 120.
SutDescriptor sut_first_order_speed();

// SUT-C: same input shape as SUT-B with faster first-order dynamics
// v' = 0.25 u - 0.05 v (steady state still 5 u). Paired with
// `not (always[10,30] (v >= 50 and v <= 60))`: falsifying it means holding
// v inside the band for 20 time units, which needs coordinated segment
// values and is nearly invisible to random search.
SutDescriptor sut_deceptive_ridge();

// Built-in benchmarks addressable from configuration files:
// sut-a, sut-b, sut-c.
const SutDescriptor& find_sut(const std::string& name);
std::vector<std::string> registry_names();

}  // namespace ogan::sut
