#pragma once

#include <vector>

#include "ogan/engine/rng.hpp"
#include "ogan/input_space.hpp"

namespace ogan::engine {

enum class SamplerKind { Uniform, LatinHypercube };

SamplerKind sampler_from_name(const std::string& name);
std::string sampler_name(SamplerKind kind);

// n i.i.d. points with every coordinate uniform on [-1, 1].
std::vector<input::TestInput> sample_uniform(int dim, int n, RngStream& rng);

// Latin hypercube: per dimension the n points occupy the n equal strata of
// [-1, 1] exactly once, with an independent uniform permutation per
// dimension and uniform placement within each stratum.
std::vector<input::TestInput> sample_lhs(int dim, int n, RngStream& rng);

// Dispatch by kind; a Latin hypercube of one point is a uniform draw.
std::vector<input::TestInput> sample(SamplerKind kind, int dim, int n,
                                     RngStream& rng);

}  // namespace ogan::engine
