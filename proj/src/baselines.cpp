#include "modrank/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace modrank {

Ranking weight_order_ranking(const std::vector<double>& weights) {
    Ranking r(weights.size());
    std::iota(r.begin(), r.end(), 0);
    std::stable_sort(r.begin(), r.end(), [&](int a, int b) {
        return weights[static_cast<std::size_t>(a)] < weights[static_cast<std::size_t>(b)];
    });
    return r;
}

Ranking bionet_like_ranking(const Graph& g, const std::vector<double>& scores, int thresholds,
                            std::uint64_t budget_per_solve, RefineStats* stats) {
    if (thresholds < 1) throw std::invalid_argument("bionet_like_ranking: thresholds must be >= 1");
    int n = g.vertex_count();
    double smax = *std::max_element(scores.begin(), scores.end());
    double smin = *std::min_element(scores.begin(), scores.end());

    std::vector<int> chunk_of(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < thresholds; ++j) {
        double tau = thresholds == 1
                         ? smax
                         : smax - (smax - smin) * j / (thresholds - 1);
        MwcsInstance inst;
        inst.graph = &g;
        inst.scores = scores;
        for (double& s : inst.scores) s -= tau;
        inst.node_budget = budget_per_solve;
        MwcsSolution sol = solve(inst);
        if (stats) {
            ++stats->solves;
            if (sol.proven_optimal) ++stats->proven;
            stats->nodes += sol.nodes_expanded;
        }
        sol.vertices.for_each([&](int v) {
            if (chunk_of[static_cast<std::size_t>(v)] < 0)
                chunk_of[static_cast<std::size_t>(v)] = j;
        });
    }

    // Vertices never captured by any module come last.
    for (int v = 0; v < n; ++v)
        if (chunk_of[static_cast<std::size_t>(v)] < 0)
            chunk_of[static_cast<std::size_t>(v)] = thresholds;

    Ranking r(static_cast<std::size_t>(n));
    std::iota(r.begin(), r.end(), 0);
    std::stable_sort(r.begin(), r.end(), [&](int a, int b) {
        int ca = chunk_of[static_cast<std::size_t>(a)], cb = chunk_of[static_cast<std::size_t>(b)];
        if (ca != cb) return ca < cb;
        double sa = scores[static_cast<std::size_t>(a)], sb = scores[static_cast<std::size_t>(b)];
        if (sa != sb) return sa > sb;
        return a < b;
    });
    return r;
}

}  // namespace modrank
