#include "ogan/input_space.hpp"

#include <cmath>
#include <stdexcept>

namespace ogan::input {

int InputSpec::dimension() const {
  int d = 0;
  for (const auto& ch : channels) d += ch.segments;
  return d;
}

bool InputSpec::is_vector_input() const {
  if (channels.empty()) return false;
  for (const auto& ch : channels) {
    if (!ch.vector_input) return false;
  }
  return true;
}

void InputSpec::validate() const {
  if (channels.empty()) {
    throw std::invalid_argument("input spec needs at least one channel");
  }
  for (const auto& ch : channels) {
    stl::validate(ch.range);
    if (ch.segments < 1) {
      throw std::invalid_argument("channel `" + ch.name +
                                  "` needs segments >= 1");
    }
    if (ch.vector_input && ch.segments != 1) {
      throw std::invalid_argument("vector channel `" + ch.name +
                                  "` must have exactly one segment");
    }
  }
  if (!(duration > 0.0)) {
    throw std::invalid_argument("input spec duration must be positive");
  }
  if (!(period > 0.0)) {
    throw std::invalid_argument("input spec period must be positive");
  }
}

double normalize(double value, const stl::SignalRange& range) {
  return (-2.0 * value + range.lo + range.hi) / (range.lo - range.hi);
}

double denormalize(double x, const stl::SignalRange& range) {
  return (range.lo + range.hi - x * (range.lo - range.hi)) / 2.0;
}

stl::Trace to_signals(const TestInput& test, const InputSpec& spec) {
  spec.validate();
  const int dim = spec.dimension();
  if (static_cast<int>(test.coords.size()) != dim) {
    throw std::invalid_argument(
        "test dimension " + std::to_string(test.coords.size()) +
        " does not match input spec dimension " + std::to_string(dim));
  }

  const std::size_t samples =
      static_cast<std::size_t>(std::floor(spec.duration / spec.period)) + 1;

  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  names.reserve(spec.channels.size());
  columns.reserve(spec.channels.size());

  std::size_t offset = 0;
  for (const auto& ch : spec.channels) {
    std::vector<double> col(samples);
    for (std::size_t i = 0; i < samples; ++i) {
      // Sample i belongs to segment floor(i * period * segments / duration),
      // clamped to the last segment at the right endpoint.
      long seg = static_cast<long>(std::floor(
          static_cast<double>(i) * spec.period * ch.segments / spec.duration));
      if (seg >= ch.segments) seg = ch.segments - 1;
      col[i] = denormalize(test.coords[offset + seg], ch.range);
    }
    names.push_back(ch.name);
    columns.push_back(std::move(col));
    offset += static_cast<std::size_t>(ch.segments);
  }

  return stl::Trace(spec.period, std::move(names), std::move(columns));
}

}  // namespace ogan::input
