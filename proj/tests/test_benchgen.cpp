#include <doctest.h>

#include <cmath>

#include "modrank/benchgen.hpp"
#include "modrank/rng.hpp"

using namespace modrank;

TEST_CASE("m=1 attachment yields a connected tree") {
    Graph g = generate_ba_graph(10, 1, 4);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 9);
    CHECK(is_connected(g));
}

TEST_CASE("generated graphs are connected and simple for larger m") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = generate_ba_graph(60, 3, seed);
        CHECK(is_connected(g));
        // simple: edge count bounded by the attachment schedule
        CHECK(g.edge_count() <= 3 * 59);
        for (auto [u, v] : g.edges()) CHECK(u != v);
    }
}

TEST_CASE("generation is reproducible per seed") {
    Graph a = generate_ba_graph(200, 2, 99);
    Graph b = generate_ba_graph(200, 2, 99);
    CHECK(a.edges() == b.edges());
    Graph c = generate_ba_graph(200, 2, 100);
    CHECK(a.edges() != c.edges());
}

TEST_CASE("preferential attachment produces heavy-tailed degrees") {
    // max degree >= 10 for n=1000 trees in at least 95 of 100 seeds
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = generate_ba_graph(1000, 1, seed);
        int dmax = 0;
        for (int v = 0; v < g.vertex_count(); ++v) dmax = std::max(dmax, g.degree(v));
        if (dmax >= 10) ++hits;
    }
    CHECK(hits >= 95);
}

TEST_CASE("sampled modules are connected with the requested size") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = generate_ba_graph(40, 2, rng.next());
        int k = 1 + static_cast<int>(rng.next_below(40));
        VertexSet m = sample_module(g, k, rng.next());
        CHECK(m.count() == k);
        CHECK(is_connected(g, m));
    }
}

TEST_CASE("k = n exhausts the graph") {
    Graph g = generate_ba_graph(15, 1, 3);
    CHECK(sample_module(g, 15, 8) == g.full_set());
}

TEST_CASE("k = 1 is uniform over the vertices") {
    // chi-square against uniform over a 10-vertex graph, 10000 draws
    Graph g = generate_ba_graph(10, 1, 11);
    std::vector<int> counts(10, 0);
    const int draws = 10000;
    for (int i = 0; i < draws; ++i)
        ++counts[static_cast<std::size_t>(sample_module(g, 1, Rng::derive(5, i)).first())];
    double chi2 = 0.0;
    double expected = draws / 10.0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 < 21.67);  // chi-square 9 dof, p = 0.01
}

TEST_CASE("bias 0 reduces the nonuniform sampler to the uniform one") {
    Graph g = generate_ba_graph(30, 2, 21);
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(sample_module_nonuniform(g, 6, 0.0, seed) == sample_module(g, 6, seed));
}

TEST_CASE("bias 1 picks the star center proportionally to degree") {
    Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const int draws = 20000;
    int center = 0;
    for (int i = 0; i < draws; ++i)
        if (sample_module_nonuniform(star, 1, 1.0, Rng::derive(31, i)).test(0)) ++center;
    // deg(center)/sum(deg) = 4/8
    CHECK(static_cast<double>(center) / draws == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("empirical prior frequencies on the single edge") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    ModuleSampler sampler = [](const Graph& gg, int k, std::uint64_t seed) {
        return sample_module(gg, k, seed);
    };
    ModulePrior prior = empirical_prior_from_sampler(g, 1, sampler, 10000, 77);
    REQUIRE(prior.support.size() == 2);
    double total = 0.0;
    for (const auto& [s, p] : prior.support) {
        CHECK(p == doctest::Approx(0.5).epsilon(0.05));  // 0.5 +- 0.02ish
        total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("single draw gives a point mass") {
    Graph g = generate_ba_graph(12, 1, 2);
    ModuleSampler sampler = [](const Graph& gg, int k, std::uint64_t seed) {
        return sample_module(gg, k, seed);
    };
    ModulePrior prior = empirical_prior_from_sampler(g, 4, sampler, 1, 5);
    REQUIRE(prior.support.size() == 1);
    CHECK(prior.support[0].second == doctest::Approx(1.0));
}
