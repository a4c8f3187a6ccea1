#include "ogan/sut/ode.hpp"

#include <cmath>
#include <stdexcept>

namespace ogan::sut {

stl::Trace integrate_rk4(const OdeSystem& system, const stl::Trace& input,
                         double duration) {
  if (system.state_dim == 0 || !system.derivative) {
    throw std::invalid_argument("ode system is not fully specified");
  }
  if (system.initial_state.size() != system.state_dim ||
      system.state_names.size() != system.state_dim) {
    throw std::invalid_argument("ode system state sizes disagree");
  }
  const double h = input.time_step();
  const std::size_t samples =
      static_cast<std::size_t>(std::floor(duration / h)) + 1;
  if (samples > input.length()) {
    throw std::invalid_argument("input trace does not cover the duration");
  }

  const std::size_t ncols = input.component_count();
  const std::size_t dim = system.state_dim;

  std::vector<std::vector<double>> states(dim, std::vector<double>(samples));
  std::vector<double> x = system.initial_state;
  std::vector<double> u(ncols);
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t d = 0; d < dim; ++d) {
      if (!std::isfinite(x[d])) {
        throw std::runtime_error(
            "ode state became non-finite at t = " +
            std::to_string(static_cast<double>(i) * h));
      }
      states[d][i] = x[d];
    }
    if (i + 1 == samples) break;

    const double t = static_cast<double>(i) * h;
    for (std::size_t c = 0; c < ncols; ++c) u[c] = input.column(c)[i];

    system.derivative(x.data(), u.data(), t, k1.data());
    for (std::size_t d = 0; d < dim; ++d) tmp[d] = x[d] + 0.5 * h * k1[d];
    system.derivative(tmp.data(), u.data(), t + 0.5 * h, k2.data());
    for (std::size_t d = 0; d < dim; ++d) tmp[d] = x[d] + 0.5 * h * k2[d];
    system.derivative(tmp.data(), u.data(), t + 0.5 * h, k3.data());
    for (std::size_t d = 0; d < dim; ++d) tmp[d] = x[d] + h * k3[d];
    system.derivative(tmp.data(), u.data(), t + h, k4.data());
    for (std::size_t d = 0; d < dim; ++d) {
      x[d] += h / 6.0 * (k1[d] + 2.0 * k2[d] + 2.0 * k3[d] + k4[d]);
    }
  }

  return stl::Trace(h, system.state_names, std::move(states));
}

}  // namespace ogan::sut
