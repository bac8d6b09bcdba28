#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "modrank/connected_sets.hpp"
#include "modrank/graph.hpp"
#include "modrank/mwcs.hpp"

namespace modrank {

// Batch experiment description. Parsed from a flat "key = value" config file;
// see parse_trial_config for the key list.
struct TrialConfig {
    std::string graph_file;  // empty: generate one graph per trial
    int graphs = 32;
    int n = 18;
    int attach_m = 1;
    int module_size_min = 4;
    int module_size_max = 4;
    double alpha_min = 0.0;  // alpha ~ U(alpha_min, alpha_max); equal bounds pin it
    double alpha_max = 0.5;
    std::vector<std::string> methods{"optimal", "semiheuristic", "bionet", "weight-order"};
    std::string prior = "uniform";           // uniform | empirical
    std::string module_sampler = "uniform";  // uniform | nonuniform
    double bias_exponent = 1.0;
    int empirical_draws = 10000;
    std::uint64_t budget = kDefaultNodeBudget;
    std::size_t cap = kDefaultEnumerationCap;
    int thresholds = 10;
    int jobs = 1;
};

struct TrialResult {
    int trial_id = 0;
    int n = 0;
    std::size_t m_edges = 0;
    int module_size = 0;
    double alpha = 0.0;
    std::string method;
    double auc = 0.0;
    double runtime_ms = 0.0;
    bool optimal_flag = false;
    bool skipped = false;  // method infeasible on this instance
};

// Runs every configured method on `graphs` sampled instances; trial t derives
// all of its randomness from (rng_seed, t), so results are reproducible for
// any job count and arrive ordered by trial then method. Infeasible
// method/instance combinations (enumeration over cap) are recorded as skipped.
std::vector<TrialResult> run_trial(const TrialConfig& config, std::uint64_t rng_seed);

TrialConfig parse_trial_config(std::istream& in);
TrialConfig load_trial_config(const std::string& path);

// CSV with header trial_id,n,m_edges,module_size,alpha,method,auc,runtime_ms,optimal_flag.
// Skipped rows leave auc/runtime empty and flag "skipped".
void write_results_csv(std::ostream& out, const std::vector<TrialResult>& results);

}  // namespace modrank
