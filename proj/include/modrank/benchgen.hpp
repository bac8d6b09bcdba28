#pragma once

#include <cstdint>
#include <functional>

#include "modrank/graph.hpp"
#include "modrank/module_space.hpp"
#include "modrank/vertex_set.hpp"

namespace modrank {

// Scale-free graph by preferential attachment: starting from a single vertex,
// each new vertex attaches min(m, existing) edges to distinct existing
// vertices drawn with probability proportional to degree + 1. Connected and
// simple by construction; deterministic given the seed.
Graph generate_ba_graph(int n, int m, std::uint64_t rng_seed);

// Connected module of size k grown from a uniformly random start vertex by
// repeatedly adding a uniformly random neighbor of the current set.
VertexSet sample_module(const Graph& g, int k, std::uint64_t rng_seed);

// Same growth process, but the start vertex is drawn with probability
// proportional to degree^bias_exponent. bias_exponent = 0 reproduces
// sample_module draw for draw.
VertexSet sample_module_nonuniform(const Graph& g, int k, double bias_exponent,
                                   std::uint64_t rng_seed);

using ModuleSampler = std::function<VertexSet(const Graph&, int, std::uint64_t)>;

// Empirical module prior from repeated sampler draws, with mass proportional
// to observed frequency. Draw i uses a seed derived from (rng_seed, i).
ModulePrior empirical_prior_from_sampler(const Graph& g, int k, const ModuleSampler& sampler,
                                         int draws, std::uint64_t rng_seed);

}  // namespace modrank
