#pragma once

#include <utility>
#include <vector>

#include "modrank/connected_sets.hpp"
#include "modrank/graph.hpp"
#include "modrank/ranking.hpp"
#include "modrank/vertex_set.hpp"

namespace modrank {

// Prior over candidate modules: either uniform over the whole connected-set
// family D, or an explicit empirical distribution on a subset of D.
struct ModulePrior {
    enum class Kind { UniformOverIndex, Empirical };

    Kind kind = Kind::UniformOverIndex;
    std::vector<std::pair<VertexSet, double>> support;  // empirical only

    static ModulePrior uniform() { return {}; }
    static ModulePrior empirical(std::vector<std::pair<VertexSet, double>> support);
};

// Normalized posterior P(M|w) over a ConnectedSetIndex.
struct ModulePosterior {
    const ConnectedSetIndex* index = nullptr;
    std::vector<double> log_post;  // normalized; -inf where mass is zero
    std::vector<double> post;      // sums to 1

    int universe_size() const { return index->universe_size(); }
};

// Bayes posterior: post[i] proportional to P(D[i]) * prod_{v in D[i]} alpha*w(v)^(alpha-1)
// (the uniform noise factor is 1). Computed in log space with max-shift
// normalization. alpha in (0,1]; empirical priors must be supported on the index.
ModulePosterior compute_posterior(const ConnectedSetIndex& idx, const ModulePrior& prior,
                                  const std::vector<double>& weights, double alpha);

// Posterior-weighted AUC of a full ranking: sum_M post(M) * AUC(r|M).
double expected_auc(const Ranking& r, const ModulePosterior& post, const Graph& g);

// The summand contributed by ranking position |prefix| (prefix already
// includes v): sum over modules containing v of
// (1 - |prefix \ M| / |V \ M|) * post(M) / |M|. Summing these along a ranking
// telescopes to expected_auc.
double expected_auc_increment(const VertexSet& prefix, int v, const ModulePosterior& post);

}  // namespace modrank
