#include "ogan/engine/rng.hpp"

namespace ogan::engine {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 on master + stream * golden gamma
  std::uint64_t z = master + stream * 0x9e3779b97f4a7c15ULL;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t RngStream::below(std::uint64_t n) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = ~0ULL - ~0ULL % n;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

}  // namespace ogan::engine
