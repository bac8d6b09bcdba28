#include "modrank/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "modrank/baselines.hpp"
#include "modrank/benchgen.hpp"
#include "modrank/bum.hpp"
#include "modrank/io.hpp"
#include "modrank/optimal_ranker.hpp"
#include "modrank/ranking.hpp"
#include "modrank/rng.hpp"
#include "modrank/semiheuristic.hpp"

namespace modrank {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct TrialContext {
    const TrialConfig& cfg;
    const Graph* shared_graph;  // loaded from file, or null when generating
};

ModuleSampler pick_sampler(const TrialConfig& cfg) {
    if (cfg.module_sampler == "uniform")
        return [](const Graph& g, int k, std::uint64_t seed) { return sample_module(g, k, seed); };
    if (cfg.module_sampler == "nonuniform") {
        double bias = cfg.bias_exponent;
        return [bias](const Graph& g, int k, std::uint64_t seed) {
            return sample_module_nonuniform(g, k, bias, seed);
        };
    }
    throw std::invalid_argument("unknown module_sampler '" + cfg.module_sampler + "'");
}

std::vector<TrialResult> one_trial(const TrialContext& ctx, int trial, std::uint64_t seed) {
    const TrialConfig& cfg = ctx.cfg;
    Graph generated;
    const Graph* g = ctx.shared_graph;
    if (g == nullptr) {
        generated = generate_ba_graph(cfg.n, cfg.attach_m, Rng::derive(seed, 1));
        g = &generated;
    }
    int n = g->vertex_count();

    Rng rng(Rng::derive(seed, 2));
    int k = cfg.module_size_min;
    if (cfg.module_size_max > cfg.module_size_min)
        k += static_cast<int>(
            rng.next_below(static_cast<std::uint64_t>(cfg.module_size_max - cfg.module_size_min + 1)));
    double alpha = cfg.alpha_min == cfg.alpha_max
                       ? cfg.alpha_min
                       : rng.next_range(cfg.alpha_min, cfg.alpha_max);
    alpha = std::clamp(alpha, 1e-6, 1.0 - 1e-9);

    ModuleSampler sampler = pick_sampler(cfg);
    VertexSet module = sampler(*g, k, Rng::derive(seed, 3));
    std::vector<double> weights = sample_weights(*g, module, alpha, Rng::derive(seed, 4));
    std::vector<double> scores = scores_from_weights(weights, alpha);

    std::vector<TrialResult> out;
    for (const std::string& method : cfg.methods) {
        TrialResult res;
        res.trial_id = trial;
        res.n = n;
        res.m_edges = g->edge_count();
        res.module_size = k;
        res.alpha = alpha;
        res.method = method;
        auto t0 = Clock::now();
        try {
            if (method == "optimal") {
                ModulePrior prior =
                    cfg.prior == "empirical"
                        ? empirical_prior_from_sampler(*g, k, sampler, cfg.empirical_draws,
                                                       Rng::derive(seed, 5))
                        : ModulePrior::uniform();
                OptimalResult opt = optimal_ranking(*g, weights, alpha, prior, cfg.cap);
                res.auc = auc(opt.ranking, module, *g);
                res.optimal_flag = true;
            } else if (method == "semiheuristic") {
                RefineStats stats;
                Ranking r = semiheuristic_ranking(*g, weights, alpha, cfg.budget, &stats);
                res.auc = auc(r, module, *g);
                res.optimal_flag = stats.all_proven();
            } else if (method == "bionet") {
                RefineStats stats;
                Ranking r = bionet_like_ranking(*g, scores, cfg.thresholds, cfg.budget, &stats);
                res.auc = auc(r, module, *g);
                res.optimal_flag = stats.all_proven();
            } else if (method == "weight-order") {
                Ranking r = weight_order_ranking(weights);
                res.auc = auc(r, module, *g);
                res.optimal_flag = true;
            } else {
                throw std::invalid_argument("unknown method '" + method + "'");
            }
        } catch (const BudgetExceeded&) {
            res.skipped = true;
        }
        res.runtime_ms = ms_since(t0);
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace

std::vector<TrialResult> run_trial(const TrialConfig& config, std::uint64_t rng_seed) {
    Graph loaded;
    TrialContext ctx{config, nullptr};
    if (!config.graph_file.empty()) {
        loaded = load_graph_file(config.graph_file);
        ctx.shared_graph = &loaded;
    }
    int trials = config.graphs;
    std::vector<std::vector<TrialResult>> per_trial(static_cast<std::size_t>(trials));

    int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        for (int t = 0; t < trials; ++t)
            per_trial[static_cast<std::size_t>(t)] =
                one_trial(ctx, t, Rng::derive(rng_seed, static_cast<std::uint64_t>(t)));
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j)
            workers.emplace_back([&]() {
                for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1))
                    per_trial[static_cast<std::size_t>(t)] =
                        one_trial(ctx, t, Rng::derive(rng_seed, static_cast<std::uint64_t>(t)));
            });
        for (auto& w : workers) w.join();
    }

    std::vector<TrialResult> out;
    for (auto& batch : per_trial)
        for (auto& r : batch) out.push_back(std::move(r));
    return out;
}

TrialConfig parse_trial_config(std::istream& in) {
    TrialConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config: missing '=' on line " + std::to_string(lineno));
        auto trim = [](std::string s) {
            auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
            while (!s.empty() && is_space(s.front())) s.erase(s.begin());
            while (!s.empty() && is_space(s.back())) s.pop_back();
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "graph_file") cfg.graph_file = value;
            else if (key == "graphs") cfg.graphs = std::stoi(value);
            else if (key == "n") cfg.n = std::stoi(value);
            else if (key == "m") cfg.attach_m = std::stoi(value);
            else if (key == "module_size_min") cfg.module_size_min = std::stoi(value);
            else if (key == "module_size_max") cfg.module_size_max = std::stoi(value);
            else if (key == "alpha_min") cfg.alpha_min = std::stod(value);
            else if (key == "alpha_max") cfg.alpha_max = std::stod(value);
            else if (key == "alpha") cfg.alpha_min = cfg.alpha_max = std::stod(value);
            else if (key == "methods") {
                cfg.methods.clear();
                std::istringstream split(value);
                std::string one;
                while (std::getline(split, one, ','))
                    if (!one.empty()) cfg.methods.push_back(one);
            } else if (key == "prior") cfg.prior = value;
            else if (key == "module_sampler") cfg.module_sampler = value;
            else if (key == "bias_exponent") cfg.bias_exponent = std::stod(value);
            else if (key == "empirical_draws") cfg.empirical_draws = std::stoi(value);
            else if (key == "budget") cfg.budget = std::stoull(value);
            else if (key == "cap") cfg.cap = std::stoull(value);
            else if (key == "thresholds") cfg.thresholds = std::stoi(value);
            else if (key == "jobs") cfg.jobs = std::stoi(value);
            else throw ParseError("config: unknown key '" + key + "'");
        } catch (const std::logic_error&) {  // stoi/stod/stoull rejections
            throw ParseError("config: bad value for '" + key + "' on line " +
                             std::to_string(lineno));
        }
    }
    if (cfg.module_size_max < cfg.module_size_min)
        throw ParseError("config: module_size_max < module_size_min");
    return cfg;
}

TrialConfig load_trial_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return parse_trial_config(in);
}

void write_results_csv(std::ostream& out, const std::vector<TrialResult>& results) {
    out << "trial_id,n,m_edges,module_size,alpha,method,auc,runtime_ms,optimal_flag\n";
    char buf[64];
    for (const TrialResult& r : results) {
        out << r.trial_id << ',' << r.n << ',' << r.m_edges << ',' << r.module_size << ',';
        std::snprintf(buf, sizeof buf, "%.10g", r.alpha);
        out << buf << ',' << r.method << ',';
        if (r.skipped) {
            out << ",,skipped\n";
            continue;
        }
        std::snprintf(buf, sizeof buf, "%.10g", r.auc);
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.3f", r.runtime_ms);
        out << buf << ',' << (r.optimal_flag ? 1 : 0) << '\n';
    }
}

}  // namespace modrank
