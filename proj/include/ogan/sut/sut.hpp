#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ogan/input_space.hpp"
#include "ogan/stl/monitor.hpp"
#include "ogan/stl/trace.hpp"

namespace ogan::sut {

// A deterministic input -> trace map together with its input
// parametrization and declared output ranges.
struct SutDescriptor {
  std::string name;
  input::InputSpec input_spec;
  std::vector<std::pair<std::string, stl::SignalRange>> output_ranges;
  std::function<stl::Trace(const input::TestInput&)> run;
  // Requirement paired with the benchmark; used when a configuration does
  // not spell one out.
  std::string default_requirement;
};

// Validates the test dimension and produces the execution trace (input and
// output components on one grid).
stl::Trace execute(const SutDescriptor& sut, const input::TestInput& test);

// Declared ranges of every input and output component.
stl::RangeMap signal_ranges(const SutDescriptor& sut);

}  // namespace ogan::sut
