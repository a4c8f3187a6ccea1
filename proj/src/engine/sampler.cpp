#include "ogan/engine/sampler.hpp"

#include <numeric>
#include <stdexcept>

namespace ogan::engine {

SamplerKind sampler_from_name(const std::string& name) {
  if (name == "uniform") return SamplerKind::Uniform;
  if (name == "latin-hypercube" || name == "lhs") {
    return SamplerKind::LatinHypercube;
  }
  throw std::invalid_argument("unknown sampler: " + name);
}

std::string sampler_name(SamplerKind kind) {
  return kind == SamplerKind::Uniform ? "uniform" : "latin-hypercube";
}

std::vector<input::TestInput> sample_uniform(int dim, int n, RngStream& rng) {
  if (n < 0) throw std::invalid_argument("sample count must be nonnegative");
  std::vector<input::TestInput> out(static_cast<std::size_t>(n));
  for (auto& t : out) {
    t.coords.resize(static_cast<std::size_t>(dim));
    for (auto& c : t.coords) c = rng.uniform(-1.0, 1.0);
  }
  return out;
}

std::vector<input::TestInput> sample_lhs(int dim, int n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("LHS needs at least one point");
  std::vector<input::TestInput> out(static_cast<std::size_t>(n));
  for (auto& t : out) t.coords.resize(static_cast<std::size_t>(dim));

  std::vector<int> strata(static_cast<std::size_t>(n));
  for (int d = 0; d < dim; ++d) {
    std::iota(strata.begin(), strata.end(), 0);
    // Fisher-Yates with the shared stream.
    for (int i = n - 1; i > 0; --i) {
      const auto j =
          static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(strata[static_cast<std::size_t>(i)],
                strata[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < n; ++i) {
      const double within = rng.uniform01();
      const double pos =
          (static_cast<double>(strata[static_cast<std::size_t>(i)]) + within) /
          static_cast<double>(n);
      out[static_cast<std::size_t>(i)].coords[static_cast<std::size_t>(d)] =
          -1.0 + 2.0 * pos;
    }
  }
  return out;
}

std::vector<input::TestInput> sample(SamplerKind kind, int dim, int n,
                                     RngStream& rng) {
  if (kind == SamplerKind::LatinHypercube && n > 1) {
    return sample_lhs(dim, n, rng);
  }
  return sample_uniform(dim, n, rng);
}

}  // namespace ogan::engine
