#pragma once

#include <string>
#include <vector>

#include "ogan/stl/monitor.hpp"
#include "ogan/stl/trace.hpp"

namespace ogan::input {

// One input channel: a piecewise-constant signal with `segments` pieces of
// equal length, or a plain scalar when `vector_input` is set.
struct ChannelSpec {
  std::string name;
  stl::SignalRange range;
  int segments = 1;
  bool vector_input = false;
};

struct InputSpec {
  std::vector<ChannelSpec> channels;
  double duration = 0.0;  // time units
  double period = 0.01;   // sampling period, seconds

  int dimension() const;
  // True when every channel is a plain vector component (no time structure).
  bool is_vector_input() const;
  void validate() const;
};

// Point of the normalized search space [-1, 1]^D.
struct TestInput {
  std::vector<double> coords;
};

// x -> (-2x + A + B)/(A - B); maps A to -1, B to 1.
double normalize(double value, const stl::SignalRange& range);
double denormalize(double x, const stl::SignalRange& range);

// Expand a normalized test vector into the piecewise-constant input signals
// sampled on the spec grid. Channels appear in spec order; a channel's
// coordinates are consecutive in the test vector.
stl::Trace to_signals(const TestInput& test, const InputSpec& spec);

}  // namespace ogan::input
