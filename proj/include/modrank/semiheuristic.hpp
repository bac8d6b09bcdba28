#pragma once

#include <cstdint>
#include <vector>

#include "modrank/graph.hpp"
#include "modrank/mwcs.hpp"
#include "modrank/ranking.hpp"
#include "modrank/vertex_set.hpp"

namespace modrank {

// Aggregate counters over the constrained solves of one ranking run.
struct RefineStats {
    std::size_t solves = 0;
    std::size_t proven = 0;
    std::uint64_t nodes = 0;

    bool all_proven() const { return proven == solves; }
};

// Recursive refinement: repeatedly split the candidate set C by a constrained
// MWCS solve anchored at the already-ranked set R, rank the chosen chunk
// recursively, then continue on the remainder. Returns an ordering of C such
// that R plus any output prefix induces a connected subgraph. Each constrained
// solve receives the full per-solve node budget.
std::vector<int> refine_ranking(const Graph& g, const std::vector<double>& scores,
                                const VertexSet& anchors, const VertexSet& candidates,
                                std::uint64_t budget_per_solve = kDefaultNodeBudget,
                                RefineStats* stats = nullptr);

// Full ranking of a connected graph from vertex weights: scores the vertices
// under Beta(alpha,1) signal vs U(0,1) noise and refines starting from an
// empty anchor set and C = V. Output is connectivity-monotonous and
// deterministic for a fixed budget.
Ranking semiheuristic_ranking(const Graph& g, const std::vector<double>& weights, double alpha,
                              std::uint64_t budget_per_solve = kDefaultNodeBudget,
                              RefineStats* stats = nullptr);

}  // namespace modrank
