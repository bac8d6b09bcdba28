#pragma once

#include <cstdint>
#include <vector>

#include "modrank/graph.hpp"
#include "modrank/mwcs.hpp"
#include "modrank/ranking.hpp"
#include "modrank/semiheuristic.hpp"

namespace modrank {

// Rank by weight ascending (smaller p-value-like weight = higher rank), ties
// by vertex id. Generally not connectivity-monotonous.
Ranking weight_order_ranking(const std::vector<double>& weights);

// BioNet-style combined ranking: solve an unconstrained MWCS at `thresholds`
// score offsets equally spaced from the maximum down to the minimum vertex
// score (scores adjusted by subtracting each threshold), then rank the module
// of the most stringent threshold first, followed by whatever each later
// module adds, with leftover vertices last. Within a chunk, original score
// descending, then id.
Ranking bionet_like_ranking(const Graph& g, const std::vector<double>& scores,
                            int thresholds = 10,
                            std::uint64_t budget_per_solve = kDefaultNodeBudget,
                            RefineStats* stats = nullptr);

}  // namespace modrank
