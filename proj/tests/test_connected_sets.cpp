#include <doctest.h>

#include <algorithm>

#include "modrank/connected_sets.hpp"
#include "modrank/rng.hpp"
#include "oracles.hpp"

using namespace modrank;

TEST_CASE("triangle has seven connected sets") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    ConnectedSetIndex idx = enumerate_connected_sets(g);
    REQUIRE(idx.size() == 7);
    CHECK(idx.set_at(0).count() == 1);
    CHECK(idx.set_at(6).count() == 3);
}

TEST_CASE("path has six connected sets") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    ConnectedSetIndex idx = enumerate_connected_sets(g);
    REQUIRE(idx.size() == 6);
    CHECK_FALSE(idx.position(VertexSet::of(3, {0, 2})).has_value());
}

TEST_CASE("single vertex graph has one set") {
    Graph g = Graph::from_edges(1, {});
    ConnectedSetIndex idx = enumerate_connected_sets(g);
    REQUIRE(idx.size() == 1);
    CHECK(idx.set_at(0) == VertexSet::of(1, {0}));
}

TEST_CASE("enumeration matches the brute-force family on random graphs") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(11));  // up to 12
        Graph g = oracles::random_connected_graph(n, 0.25, rng.next());
        ConnectedSetIndex idx = enumerate_connected_sets(g);
        auto expected = oracles::brute_force_connected_sets(g);
        REQUIRE(idx.size() == expected.size());
        std::vector<std::vector<int>> got;
        for (std::size_t i = 0; i < idx.size(); ++i) got.push_back(idx.set_at(i).members());
        std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        CHECK(got == expected);
    }
}

TEST_CASE("sets are ordered by size and positions round-trip") {
    Graph g = oracles::random_connected_graph(9, 0.3, 77);
    ConnectedSetIndex idx = enumerate_connected_sets(g);
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        CHECK(idx.set_at(i).count() <= idx.set_at(i + 1).count());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        auto pos = idx.position(idx.set_at(i));
        REQUIRE(pos.has_value());
        CHECK(*pos == i);
    }
}

TEST_CASE("max_size truncates the family") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    ConnectedSetIndex idx = enumerate_connected_sets(g, 2);
    CHECK(idx.size() == 6);  // K3 minus the full triple
}

TEST_CASE("cap overflow raises a budget error with the partial count") {
    Graph g = oracles::random_connected_graph(10, 0.4, 5);
    try {
        enumerate_connected_sets(g, std::nullopt, 20);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.partial_count == 20);
    }
}
