#include <doctest.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "modrank/harness.hpp"
#include "modrank/bum.hpp"
#include "modrank/io.hpp"
#include "modrank/rng.hpp"
#include "oracles.hpp"

using namespace modrank;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        static std::atomic<int> counter{0};
        auto tick = std::chrono::steady_clock::now().time_since_epoch().count();
        path = std::filesystem::temp_directory_path() /
               ("modrank_test_" + std::to_string(tick) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("weight files round-trip and clamp zeros") {
    Graph g = load_graph("a\tb\nb\tc");
    std::istringstream in("a\t0.25\nb\t0\nc\t1\n");
    auto w = parse_weights(in, g);
    CHECK(w[0] == 0.25);
    CHECK(w[1] == kMinWeight);
    CHECK(w[2] == 1.0);

    std::istringstream bad("a\t0.25\nb\t1.5\nc\t1\n");
    CHECK_THROWS_AS(parse_weights(bad, g), ParseError);
    std::istringstream missing("a\t0.25\nb\t0.5\n");
    CHECK_THROWS_AS(parse_weights(missing, g), ParseError);
}

TEST_CASE("format_double round-trips doubles exactly") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        double x = rng.next_range(-5.0, 5.0);
        CHECK(std::stod(format_double(x)) == x);
    }
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("graph, module and ranking files round-trip through disk") {
    TempDir dir;
    Graph g = oracles::random_connected_graph(12, 0.2, 33);
    write_graph_file(dir.file("g.tsv"), g);
    Graph g2 = load_graph_file(dir.file("g.tsv"));
    CHECK(g2.vertex_count() == g.vertex_count());
    CHECK(g2.edges() == g.edges());

    VertexSet module = VertexSet::of(12, {1, 4, 7});
    write_module_file(dir.file("m.txt"), g, module);
    CHECK(load_module_file(dir.file("m.txt"), g2) == module);

    Ranking r{3, 2, 1, 0, 4, 5, 6, 7, 8, 9, 10, 11};
    write_ranking_file(dir.file("r.txt"), g, r);
    CHECK(load_ranking_file(dir.file("r.txt"), g2) == r);

    std::ofstream(dir.file("bad.txt")) << "3\n3\n";
    CHECK_THROWS_AS(load_ranking_file(dir.file("bad.txt"), g2), ParseError);
}

TEST_CASE("prior files parse comma-separated support sets") {
    Graph g = load_graph("a\tb\nb\tc");
    std::istringstream in("a,b\t0.75\nc\t0.25\n");
    ModulePrior prior = parse_prior(in, g);
    REQUIRE(prior.support.size() == 2);
    CHECK(prior.support[0].first == VertexSet::of(3, {0, 1}));
    CHECK(prior.support[0].second == doctest::Approx(0.75));
}

TEST_CASE("config parsing and defaults") {
    std::istringstream in(
        "n = 12\n"
        "graphs = 3\n"
        "# comment\n"
        "module_size_min = 2\n"
        "module_size_max = 5\n"
        "alpha = 0.3\n"
        "methods = semiheuristic,weight-order\n"
        "budget = 1000\n");
    TrialConfig cfg = parse_trial_config(in);
    CHECK(cfg.n == 12);
    CHECK(cfg.graphs == 3);
    CHECK(cfg.module_size_min == 2);
    CHECK(cfg.module_size_max == 5);
    CHECK(cfg.alpha_min == 0.3);
    CHECK(cfg.alpha_max == 0.3);
    CHECK(cfg.methods == std::vector<std::string>{"semiheuristic", "weight-order"});
    CHECK(cfg.budget == 1000);

    std::istringstream bad("nonsense = 1\n");
    CHECK_THROWS_AS(parse_trial_config(bad), ParseError);
}

TEST_CASE("run_trial produces one row per trial and method, deterministically") {
    TrialConfig cfg;
    cfg.graphs = 4;
    cfg.n = 12;
    cfg.module_size_min = cfg.module_size_max = 3;
    cfg.alpha_min = 0.1;
    cfg.alpha_max = 0.4;
    cfg.methods = {"optimal", "semiheuristic", "bionet", "weight-order"};
    cfg.budget = 10000;

    auto results = run_trial(cfg, 2024);
    REQUIRE(results.size() == 16);
    for (std::size_t i = 0; i < results.size(); ++i) {
        CHECK(results[i].trial_id == static_cast<int>(i / 4));
        CHECK_FALSE(results[i].skipped);
        CHECK(results[i].auc >= 0.0);
        CHECK(results[i].auc <= 1.0);
        CHECK(results[i].module_size == 3);
    }

    auto again = run_trial(cfg, 2024);
    for (std::size_t i = 0; i < results.size(); ++i) {
        CHECK(results[i].auc == again[i].auc);
        CHECK(results[i].alpha == again[i].alpha);
    }

    // jobs > 1 must not change anything but timing
    cfg.jobs = 3;
    auto parallel = run_trial(cfg, 2024);
    for (std::size_t i = 0; i < results.size(); ++i) {
        CHECK(results[i].auc == parallel[i].auc);
        CHECK(results[i].method == parallel[i].method);
    }
}

TEST_CASE("run_trial can rank a fixed graph from a file") {
    TempDir dir;
    Graph g = oracles::random_connected_graph(15, 0.2, 88);
    write_graph_file(dir.file("fixed.tsv"), g);

    TrialConfig cfg;
    cfg.graph_file = dir.file("fixed.tsv");
    cfg.graphs = 3;
    cfg.module_size_min = 2;
    cfg.module_size_max = 4;
    cfg.alpha_min = cfg.alpha_max = 0.25;
    cfg.methods = {"semiheuristic", "weight-order"};
    cfg.budget = 5000;

    auto results = run_trial(cfg, 11);
    REQUIRE(results.size() == 6);
    for (const auto& r : results) {
        CHECK(r.n == 15);
        CHECK(r.m_edges == g.edge_count());
        CHECK(r.alpha == 0.25);
    }
}

TEST_CASE("infeasible optimal runs are recorded as skipped") {
    TrialConfig cfg;
    cfg.graphs = 1;
    cfg.n = 40;
    cfg.attach_m = 2;
    cfg.module_size_min = cfg.module_size_max = 4;
    cfg.alpha_min = cfg.alpha_max = 0.3;
    cfg.methods = {"optimal", "weight-order"};
    cfg.cap = 100;  // far too small for n=40

    auto results = run_trial(cfg, 7);
    REQUIRE(results.size() == 2);
    CHECK(results[0].skipped);
    CHECK_FALSE(results[1].skipped);

    std::ostringstream csv;
    write_results_csv(csv, results);
    CHECK(csv.str().find(",,skipped") != std::string::npos);
    CHECK(csv.str().rfind("trial_id,n,m_edges,module_size,alpha,method,auc,runtime_ms,optimal_flag",
                          0) == 0);
}
