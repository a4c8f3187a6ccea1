#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ogan/stl/trace.hpp"

namespace ogan::sut {

struct OdeSystem {
  std::size_t state_dim = 0;
  std::vector<std::string> state_names;
  // deriv(state, inputs, t, out); inputs follow the input trace column order.
  std::function<void(const double* state, const double* inputs, double t,
                     double* deriv)>
      derivative;
  std::vector<double> initial_state;
};

// Classical fixed-step RK4 on the input trace grid. Inputs are held
// piecewise constant across each step. The result holds only the state
// components; callers merge the input trace themselves.
stl::Trace integrate_rk4(const OdeSystem& system, const stl::Trace& input,
                         double duration);

}  // namespace ogan::sut
