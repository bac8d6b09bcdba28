#include <doctest.h>

#include "modrank/baselines.hpp"
#include "modrank/bum.hpp"
#include "modrank/ranking.hpp"
#include "modrank/rng.hpp"
#include "oracles.hpp"

using namespace modrank;

TEST_CASE("weight_order_ranking sorts ascending with id tie-break") {
    CHECK(weight_order_ranking({0.5, 0.1, 0.9}) == Ranking{1, 0, 2});
    CHECK(weight_order_ranking({0.4, 0.4, 0.4}) == Ranking{0, 1, 2});
    CHECK(weight_order_ranking({0.1, 0.2, 0.3}) == Ranking{0, 1, 2});
}

TEST_CASE("bionet ranking degenerates to score order when all scores are equal") {
    Graph g = oracles::random_connected_graph(8, 0.3, 2);
    std::vector<double> scores(8, 1.25);
    Ranking r = bionet_like_ranking(g, scores);
    CHECK(r == Ranking{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("bionet single-edge example ranks the positive vertex first") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    Ranking r = bionet_like_ranking(g, {2.0, -1.0});
    CHECK(r == Ranking{0, 1});
}

TEST_CASE("bionet output is a permutation with monotone chunk structure") {
    Rng rng(81);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng.next_below(20));
        Graph g = oracles::random_connected_graph(n, 0.2, rng.next());
        std::vector<double> w(static_cast<std::size_t>(n));
        for (auto& x : w) x = rng.next_unit_open();
        std::vector<double> scores = scores_from_weights(w, 0.3);
        Ranking r = bionet_like_ranking(g, scores);
        CHECK(is_permutation_of_vertices(r, n));
    }
}

TEST_CASE("bionet respects the threshold-order combining rule") {
    // Chunks are assigned by the first (most stringent) module that captures a
    // vertex, so stringent-module vertices always precede later-only vertices.
    Graph g = oracles::random_connected_graph(10, 0.3, 5);
    Rng rng(6);
    std::vector<double> w(10);
    for (auto& x : w) x = rng.next_unit_open();
    std::vector<double> scores = scores_from_weights(w, 0.25);
    Ranking r = bionet_like_ranking(g, scores);

    // recompute the chunk of each vertex straight from the definition
    double smax = *std::max_element(scores.begin(), scores.end());
    double smin = *std::min_element(scores.begin(), scores.end());
    std::vector<int> chunk(10, 10);
    for (int j = 0; j < 10; ++j) {
        double tau = smax - (smax - smin) * j / 9;
        MwcsInstance inst;
        inst.graph = &g;
        inst.scores = scores;
        for (double& s : inst.scores) s -= tau;
        MwcsSolution sol = solve(inst);
        sol.vertices.for_each([&](int v) {
            if (chunk[static_cast<std::size_t>(v)] == 10) chunk[static_cast<std::size_t>(v)] = j;
        });
    }
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        CHECK(chunk[static_cast<std::size_t>(r[i])] <=
              chunk[static_cast<std::size_t>(r[i + 1])]);
}
