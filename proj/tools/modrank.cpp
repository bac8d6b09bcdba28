// modrank command-line toolkit: generate synthetic instances, rank vertices,
// solve MWCS instances, fit the weight model, evaluate rankings and run batch
// experiments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modrank/baselines.hpp"
#include "modrank/benchgen.hpp"
#include "modrank/bum.hpp"
#include "modrank/connected_sets.hpp"
#include "modrank/graph.hpp"
#include "modrank/harness.hpp"
#include "modrank/io.hpp"
#include "modrank/module_space.hpp"
#include "modrank/mwcs.hpp"
#include "modrank/optimal_ranker.hpp"
#include "modrank/ranking.hpp"
#include "modrank/rng.hpp"
#include "modrank/semiheuristic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitIo = 3;

struct GenerateArgs {
    int n = 100;
    int m = 1;
    int module_size = 10;
    double alpha = 0.2;
    double bias_exponent = 0.0;
    std::uint64_t seed = 1;
    std::string out_prefix;
};

int run_generate(const GenerateArgs& a) {
    modrank::Graph g = modrank::generate_ba_graph(a.n, a.m, modrank::Rng::derive(a.seed, 1));
    modrank::VertexSet module =
        a.bias_exponent > 0.0
            ? modrank::sample_module_nonuniform(g, a.module_size, a.bias_exponent,
                                                modrank::Rng::derive(a.seed, 2))
            : modrank::sample_module(g, a.module_size, modrank::Rng::derive(a.seed, 2));
    std::vector<double> weights =
        modrank::sample_weights(g, module, a.alpha, modrank::Rng::derive(a.seed, 3));
    modrank::write_graph_file(a.out_prefix + "graph.tsv", g);
    modrank::write_weights_file(a.out_prefix + "weights.tsv", g, weights);
    modrank::write_module_file(a.out_prefix + "module.txt", g, module);
    return kExitOk;
}

struct RankArgs {
    std::string graph_file;
    std::string weights_file;
    std::string method;
    double alpha = 0.0;
    bool fit_alpha = false;
    std::string prior_file;
    std::uint64_t budget = modrank::kDefaultNodeBudget;
    std::size_t cap = modrank::kDefaultEnumerationCap;
    int thresholds = 10;
    std::string out_file;
};

int run_rank(const RankArgs& a) {
    modrank::Graph g = modrank::load_graph_file(a.graph_file);
    if (a.method != "weight-order" && !modrank::is_connected(g)) {
        std::cerr << "error: graph is not connected\n";
        return kExitInfeasible;
    }
    std::vector<double> weights = modrank::load_weights_file(a.weights_file, g);
    double alpha = a.alpha;
    if (a.fit_alpha) {
        alpha = modrank::fit_bum(weights).alpha;
        std::cerr << "fitted alpha=" << modrank::format_double(alpha) << "\n";
    }
    // alpha = 1 (no detectable signal) degenerates every score to zero but
    // still yields valid rankings, so the closed boundary is accepted here.
    if (!(alpha > 0.0) || alpha > 1.0) {
        std::cerr << "error: alpha must be in (0,1]; pass --alpha or --fit-alpha\n";
        return kExitUsage;
    }

    modrank::Ranking r;
    if (a.method == "optimal") {
        modrank::ModulePrior prior = a.prior_file.empty()
                                         ? modrank::ModulePrior::uniform()
                                         : modrank::load_prior_file(a.prior_file, g);
        try {
            r = modrank::optimal_ranking(g, weights, alpha, prior, a.cap).ranking;
        } catch (const modrank::BudgetExceeded& e) {
            std::cerr << "error: " << e.what()
                      << "; the optimal method is infeasible at this size, raise --cap or use "
                         "--method semiheuristic\n";
            return kExitInfeasible;
        }
    } else if (a.method == "semiheuristic") {
        r = modrank::semiheuristic_ranking(g, weights, alpha, a.budget);
    } else if (a.method == "bionet") {
        r = modrank::bionet_like_ranking(g, modrank::scores_from_weights(weights, alpha),
                                         a.thresholds, a.budget);
    } else if (a.method == "weight-order") {
        r = modrank::weight_order_ranking(weights);
    } else {
        std::cerr << "error: unknown method '" << a.method << "'\n";
        return kExitUsage;
    }
    modrank::write_ranking_file(a.out_file, g, r);
    return kExitOk;
}

struct MwcsArgs {
    std::string graph_file;
    std::string scores_file;
    std::string anchors_file;
    std::string candidates_file;
    std::uint64_t budget = modrank::kDefaultNodeBudget;
};

int run_mwcs(const MwcsArgs& a) {
    modrank::Graph g = modrank::load_graph_file(a.graph_file);
    modrank::MwcsInstance inst;
    inst.graph = &g;
    inst.scores = modrank::load_scores_file(a.scores_file, g);
    inst.node_budget = a.budget;

    modrank::MwcsSolution sol;
    if (a.candidates_file.empty()) {
        if (!a.anchors_file.empty()) {
            std::cerr << "error: --anchors requires --candidates\n";
            return kExitUsage;
        }
        sol = modrank::solve(inst);
    } else {
        inst.candidates = modrank::load_module_file(a.candidates_file, g);
        inst.anchors = a.anchors_file.empty()
                           ? modrank::VertexSet(g.vertex_count())
                           : modrank::load_module_file(a.anchors_file, g);
        sol = modrank::solve_constrained(inst);
    }
    std::cout << "score=" << modrank::format_double(sol.total_score) << "\n"
              << "optimal=" << (sol.proven_optimal ? "true" : "false") << "\n";
    sol.vertices.for_each([&](int v) { std::cout << g.label(v) << "\n"; });
    return kExitOk;
}

int run_fit_bum(const std::string& weights_file) {
    // The weight file is read against its own label universe: build a stub
    // graph is unnecessary, parse labels directly.
    std::ifstream in(weights_file);
    if (!in) throw modrank::IoError("cannot open '" + weights_file + "'");
    std::vector<double> w;
    std::string label;
    double x;
    while (in >> label >> x) {
        if (x < 0.0 || x > 1.0) throw modrank::ParseError("weights must lie in [0,1]");
        w.push_back(x == 0.0 ? modrank::kMinWeight : x);
    }
    modrank::BumParams p = modrank::fit_bum(w);
    std::cout << "alpha=" << modrank::format_double(p.alpha)
              << " lambda=" << modrank::format_double(p.lambda) << "\n";
    return kExitOk;
}

struct EvaluateArgs {
    std::string graph_file;
    std::string ranking_file;
    std::string module_file;
};

int run_evaluate(const EvaluateArgs& a) {
    modrank::Graph g = modrank::load_graph_file(a.graph_file);
    modrank::Ranking r = modrank::load_ranking_file(a.ranking_file, g);
    modrank::VertexSet module = modrank::load_module_file(a.module_file, g);
    if (module.empty()) {
        std::cerr << "error: module file is empty\n";
        return kExitIo;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", modrank::auc(r, module, g));
    std::cout << "auc=" << buf
              << " monotonous=" << (modrank::is_connectivity_monotonous(g, r) ? "true" : "false")
              << "\n";
    return kExitOk;
}

struct ExperimentArgs {
    std::string config_file;
    std::uint64_t seed = 1;
    std::string out_file;
    int jobs = 0;  // 0: take from config
};

int run_experiment(const ExperimentArgs& a) {
    modrank::TrialConfig cfg = modrank::load_trial_config(a.config_file);
    if (a.jobs > 0) cfg.jobs = a.jobs;
    std::vector<modrank::TrialResult> results = modrank::run_trial(cfg, a.seed);
    std::ofstream out(a.out_file, std::ios::binary);
    if (!out) throw modrank::IoError("cannot write '" + a.out_file + "'");
    modrank::write_results_csv(out, results);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connectivity-monotonous vertex ranking toolkit for active module recovery"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cgen = app.add_subcommand("generate", "Generate a synthetic benchmark instance");
    cgen->add_option("--n", gen.n, "vertex count")->required();
    cgen->add_option("--m", gen.m, "edges attached per new vertex");
    cgen->add_option("--module-size", gen.module_size, "planted module size")->required();
    cgen->add_option("--alpha", gen.alpha, "signal beta parameter in (0,1)")->required();
    cgen->add_option("--bias-exponent", gen.bias_exponent,
                     "degree bias for the module seed vertex (0 = uniform)");
    cgen->add_option("--seed", gen.seed, "rng seed")->required();
    cgen->add_option("--out-prefix", gen.out_prefix, "output path prefix")->required();

    RankArgs rank;
    auto* crank = app.add_subcommand("rank", "Rank the vertices of a weighted graph");
    crank->add_option("--graph", rank.graph_file, "edge list TSV")->required();
    crank->add_option("--weights", rank.weights_file, "vertex weight TSV")->required();
    crank->add_option("--method", rank.method, "optimal|semiheuristic|bionet|weight-order")
        ->required();
    crank->add_option("--alpha", rank.alpha, "signal beta parameter in (0,1)");
    crank->add_flag("--fit-alpha", rank.fit_alpha, "estimate alpha from the weights");
    crank->add_option("--prior", rank.prior_file, "empirical module prior TSV (optimal only)");
    crank->add_option("--budget", rank.budget, "search-node budget per MWCS solve");
    crank->add_option("--cap", rank.cap, "connected-set enumeration cap (optimal only)");
    crank->add_option("--thresholds", rank.thresholds, "threshold count (bionet only)");
    crank->add_option("--out", rank.out_file, "output ranking file")->required();

    MwcsArgs mw;
    auto* cmw = app.add_subcommand("mwcs", "Solve a maximum-weight connected subgraph instance");
    cmw->add_option("--graph", mw.graph_file, "edge list TSV")->required();
    cmw->add_option("--scores", mw.scores_file, "vertex score TSV")->required();
    cmw->add_option("--anchors", mw.anchors_file, "anchor vertex file (constrained variant)");
    cmw->add_option("--candidates", mw.candidates_file,
                    "candidate vertex file (constrained variant)");
    cmw->add_option("--budget", mw.budget, "search-node budget");

    std::string fit_weights_file;
    auto* cfit = app.add_subcommand("fit-bum", "Fit the beta-uniform mixture to vertex weights");
    cfit->add_option("--weights", fit_weights_file, "vertex weight TSV")->required();

    EvaluateArgs ev;
    auto* cev = app.add_subcommand("evaluate", "Score a ranking against a known module");
    cev->add_option("--graph", ev.graph_file, "edge list TSV")->required();
    cev->add_option("--ranking", ev.ranking_file, "ranking file")->required();
    cev->add_option("--module", ev.module_file, "module file")->required();

    ExperimentArgs ex;
    auto* cex = app.add_subcommand("experiment", "Run a batch ranking experiment");
    cex->add_option("--config", ex.config_file, "key = value config file")->required();
    cex->add_option("--seed", ex.seed, "master rng seed")->required();
    cex->add_option("--out", ex.out_file, "results CSV path")->required();
    cex->add_option("--jobs", ex.jobs, "concurrent trials (overrides config)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cgen->parsed()) return run_generate(gen);
        if (crank->parsed()) return run_rank(rank);
        if (cmw->parsed()) return run_mwcs(mw);
        if (cfit->parsed()) return run_fit_bum(fit_weights_file);
        if (cev->parsed()) return run_evaluate(ev);
        if (cex->parsed()) return run_experiment(ex);
    } catch (const modrank::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const modrank::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const modrank::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
