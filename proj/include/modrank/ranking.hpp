#pragma once

#include <vector>

#include "modrank/graph.hpp"
#include "modrank/vertex_set.hpp"

namespace modrank {

// A ranking is a permutation of 0..n-1; earlier positions rank higher.
using Ranking = std::vector<int>;

bool is_permutation_of_vertices(const Ranking& r, int n);

// AUC of a ranking against a known module:
//   sum_i (1 - |r_{1..i} \ M| / |V \ M|) * [r_i in M] / |M|.
// When M = V no false positive is possible and the score is 1 by convention.
// The module must be nonempty.
double auc(const Ranking& r, const VertexSet& module, const Graph& g);

// True iff every ranking prefix induces a connected subgraph.
bool is_connectivity_monotonous(const Graph& g, const Ranking& r);

}  // namespace modrank
