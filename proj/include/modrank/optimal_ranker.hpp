#pragma once

#include <cstddef>
#include <vector>

#include "modrank/connected_sets.hpp"
#include "modrank/graph.hpp"
#include "modrank/module_space.hpp"
#include "modrank/ranking.hpp"

namespace modrank {

struct OptimalResult {
    Ranking ranking;
    double expected_auc = 0.0;
};

// Dynamic program over the connected-set family: for every set in D, the best
// expected AUC achievable by a connectivity-monotonous ranking of that set,
// extended one vertex at a time. The per-step AUC increment depends only on
// the prefix set and the appended vertex, which makes the DP exact. Returns
// the optimal connectivity-monotonous ranking of V and its expected AUC.
// Ties between predecessors are broken toward the smaller appended vertex id.
OptimalResult optimal_ranking(const Graph& g, const ConnectedSetIndex& idx,
                              const ModulePosterior& posterior);

// Convenience entry: enumerates D (may throw BudgetExceeded), computes the
// posterior from the weights and prior, and runs the DP.
OptimalResult optimal_ranking(const Graph& g, const std::vector<double>& weights, double alpha,
                              const ModulePrior& prior,
                              std::size_t cap = kDefaultEnumerationCap);

}  // namespace modrank
