#include "modrank/semiheuristic.hpp"

#include <cassert>

#include "modrank/bum.hpp"

namespace modrank {

std::vector<int> refine_ranking(const Graph& g, const std::vector<double>& scores,
                                const VertexSet& anchors, const VertexSet& candidates,
                                std::uint64_t budget_per_solve, RefineStats* stats) {
    assert(anchors.empty() || is_connected(g, anchors));
    assert(is_connected(g, anchors | candidates));

    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(candidates.count()));
    VertexSet ranked = anchors;
    VertexSet pool = candidates;

    while (!pool.empty()) {
        std::vector<int> chunk;
        if (pool.count() == 1) {
            chunk.push_back(pool.first());
        } else {
            MwcsInstance inst;
            inst.graph = &g;
            inst.scores = scores;
            inst.anchors = ranked;
            inst.candidates = pool;
            inst.restrict_to_union = true;
            inst.node_budget = budget_per_solve;
            MwcsSolution sol = solve_constrained(inst);
            if (stats) {
                ++stats->solves;
                if (sol.proven_optimal) ++stats->proven;
                stats->nodes += sol.nodes_expanded;
            }
            VertexSet chosen = sol.vertices & pool;
            if (chosen.count() > 1) {
                chunk = refine_ranking(g, scores, ranked, chosen, budget_per_solve, stats);
            } else {
                chunk.push_back(chosen.first());
            }
        }
        for (int v : chunk) {
            out.push_back(v);
            ranked.set(v);
            pool.reset(v);
        }
    }
    return out;
}

Ranking semiheuristic_ranking(const Graph& g, const std::vector<double>& weights, double alpha,
                              std::uint64_t budget_per_solve, RefineStats* stats) {
    std::vector<double> scores = scores_from_weights(weights, alpha);
    return refine_ranking(g, scores, VertexSet(g.vertex_count()), g.full_set(),
                          budget_per_solve, stats);
}

}  // namespace modrank
