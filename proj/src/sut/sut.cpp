#include "ogan/sut/sut.hpp"

#include <stdexcept>

namespace ogan::sut {

stl::Trace execute(const SutDescriptor& sut, const input::TestInput& test) {
  const int dim = sut.input_spec.dimension();
  if (static_cast<int>(test.coords.size()) != dim) {
    throw std::invalid_argument(
        "test dimension " + std::to_string(test.coords.size()) +
        " does not match SUT `" + sut.name + "` dimension " +
        std::to_string(dim));
  }
  if (!sut.run) {
    throw std::logic_error("SUT `" + sut.name + "` has no execution function");
  }
  return sut.run(test);
}

stl::RangeMap signal_ranges(const SutDescriptor& sut) {
  stl::RangeMap ranges;
  for (const auto& ch : sut.input_spec.channels) {
    ranges.emplace(ch.name, ch.range);
  }
  for (const auto& [name, range] : sut.output_ranges) {
    ranges.emplace(name, range);
  }
  return ranges;
}

}  // namespace ogan::sut
