#include "ogan/sut/benchmarks.hpp"

#include <cmath>
#include <stdexcept>

#include "ogan/sut/ode.hpp"

namespace ogan::sut {

SutDescriptor sut_quadratic_basin(const std::array<double, 3>& center,
                                  double radius) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("basin radius must be positive");
  }
  for (double c : center) {
    if (std::abs(c) + radius > 1.0) {
      throw std::invalid_argument(
          "basin ball must lie inside the unit cube");
    }
  }

  SutDescriptor sut;
  sut.name = "sut-a";
  sut.input_spec.channels = {
      {"u1", {-1.0, 1.0}, 1, true},
      {"u2", {-1.0, 1.0}, 1, true},
      {"u3", {-1.0, 1.0}, 1, true},
  };
  sut.input_spec.duration = 1.0;
  sut.input_spec.period = 1.0;
  sut.output_ranges = {{"y", {0.0, 4.0}}};
  {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "always[0,1] (y > %.17g)", radius);
    sut.default_requirement = buf;
  }

  const auto spec = sut.input_spec;
  sut.run = [spec, center](const input::TestInput& test) {
    const stl::Trace inputs = input::to_signals(test, spec);
    double dist2 = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double d = test.coords[i] - center[i];
      dist2 += d * d;
    }
    const double y = std::sqrt(dist2);
    const stl::Trace out(spec.period, {"y"},
                         {std::vector<double>(inputs.length(), y)});
    return inputs.merged_with(out);
  };
  return sut;
}

namespace {

SutDescriptor first_order_throttle_sut(std::string name, double gain,
                                       double decay, double input_cap,
                                       double output_hi,
                                       std::string requirement) {
  SutDescriptor sut;
  sut.name = std::move(name);
  sut.input_spec.channels = {{"THROTTLE", {0.0, 100.0}, 6, false}};
  sut.input_spec.duration = 30.0;
  sut.input_spec.period = 0.01;
  sut.output_ranges = {{"v", {0.0, output_hi}}};
  sut.default_requirement = std::move(requirement);

  const auto spec = sut.input_spec;
  sut.run = [spec, gain, decay, input_cap](const input::TestInput& test) {
    const stl::Trace inputs = input::to_signals(test, spec);
    OdeSystem system;
    system.state_dim = 1;
    system.state_names = {"v"};
    system.initial_state = {0.0};
    system.derivative = [gain, decay, input_cap](const double* state,
                                                 const double* input, double,
                                                 double* deriv) {
      const double u = std::min(input[0], input_cap);
      deriv[0] = gain * u - decay * state[0];
    };
    const stl::Trace out = integrate_rk4(system, inputs, spec.duration);
    return inputs.merged_with(out);
  };
  return sut;
}

}  // namespace

SutDescriptor sut_first_order_speed() {
  return first_order_throttle_sut("sut-b", 0.05, 0.01, 100.0, 130.0,
                                  "always[0,30] (v < 120)");
}

SutDescriptor sut_deceptive_ridge() {
  // Sharper engine than sut-b with the actuator saturating at 30: reaching
  // the band by t=10 takes a strong two-segment climb, and staying inside
  // needs small nonzero refills on every later segment. Reachable speeds
  // stay within [0, 180].
  return first_order_throttle_sut(
      "sut-c", 0.25, 1.0 / 60.0, 30.0, 180.0,
      "not (always[10,30] (v >= 50 and v <= 60))");
}

const SutDescriptor& find_sut(const std::string& name) {
  static const SutDescriptor a =
      sut_quadratic_basin({0.3, -0.2, 0.4}, 0.15);
  static const SutDescriptor b = sut_first_order_speed();
  static const SutDescriptor c = sut_deceptive_ridge();
  if (name == "sut-a") return a;
  if (name == "sut-b") return b;
  if (name == "sut-c") return c;
  throw std::invalid_argument("unknown SUT: " + name);
}

std::vector<std::string> registry_names() { return {"sut-a", "sut-b", "sut-c"}; }

}  // namespace ogan::sut
