#pragma once

#include <cstdint>
#include <random>

namespace ogan::engine {

// Stream seeds derived from one master seed via splitmix64 so sampling,
// latent draws, weight init, and the exploration coin stay independent and
// replayable.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1) with 53 bits, independent of the standard-library distribution
  // implementation.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ogan::engine
