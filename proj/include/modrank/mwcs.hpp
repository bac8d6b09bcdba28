#pragma once

#include <cstdint>
#include <vector>

#include "modrank/graph.hpp"
#include "modrank/vertex_set.hpp"

namespace modrank {

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000;

// One Maximum-Weight Connected Subgraph instance. anchors (R) are
// already-ranked vertices acting as zero-cost connectors; candidates (C) are
// the vertices being scored. solve() ignores R/C and maximizes over all
// vertices; solve_constrained() requires R ∩ S nonempty (when R is nonempty)
// and 1 <= |S ∩ C| < |C|, counting only candidate scores in the objective.
struct MwcsInstance {
    const Graph* graph = nullptr;
    std::vector<double> scores;
    VertexSet anchors;
    VertexSet candidates;
    bool restrict_to_union = true;        // solutions may not leave R ∪ C
    std::uint64_t node_budget = kDefaultNodeBudget;  // search-node count, deterministic
    double wall_clock_cap_seconds = 0.0;  // 0 = none; nondeterministic extra abort
};

struct MwcsSolution {
    VertexSet vertices;
    double total_score = 0.0;
    bool proven_optimal = false;
    std::uint64_t nodes_expanded = 0;
};

// Unconstrained solve over the whole (connected) graph: the nonempty connected
// vertex set with maximal total score; when every score is nonpositive, the
// single best vertex. Branch and bound over frontier inclusion/exclusion after
// contracting adjacent positive pairs and stripping nonpositive leaves.
// Budget expiry returns the incumbent with proven_optimal = false.
MwcsSolution solve(const MwcsInstance& inst);

// Constrained variant used by ranking refinement. Preconditions: R ∩ C empty,
// R connected or empty, R ∪ C connected, |C| >= 1. With |C| = 1 the single
// candidate is returned unconditionally. Equal-score optima are resolved
// toward the lexicographically smallest vertex set among those encountered.
MwcsSolution solve_constrained(const MwcsInstance& inst);

}  // namespace modrank
