#include "modrank/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "modrank/rng.hpp"

namespace modrank {

Graph generate_ba_graph(int n, int m, std::uint64_t rng_seed) {
    if (n < 2) throw std::invalid_argument("generate_ba_graph: n must be >= 2");
    if (m < 1 || m >= n) throw std::invalid_argument("generate_ba_graph: need 1 <= m < n");
    Rng rng(rng_seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<int> targets;
    for (int t = 1; t < n; ++t) {
        int want = std::min(m, t);
        targets.clear();
        while (static_cast<int>(targets.size()) < want) {
            // total attachment mass over existing vertices, degree + 1 each
            std::int64_t total = 0;
            for (int v = 0; v < t; ++v) total += degree[static_cast<std::size_t>(v)] + 1;
            std::int64_t x = static_cast<std::int64_t>(
                rng.next_below(static_cast<std::uint64_t>(total)));
            int pick = t - 1;
            for (int v = 0; v < t; ++v) {
                x -= degree[static_cast<std::size_t>(v)] + 1;
                if (x < 0) {
                    pick = v;
                    break;
                }
            }
            if (std::find(targets.begin(), targets.end(), pick) != targets.end()) continue;
            targets.push_back(pick);
        }
        for (int v : targets) {
            edges.emplace_back(v, t);
            ++degree[static_cast<std::size_t>(v)];
            ++degree[static_cast<std::size_t>(t)];
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

VertexSet grow_module(const Graph& g, int k, int start, Rng& rng) {
    int n = g.vertex_count();
    VertexSet module(n);
    module.set(start);
    std::vector<int> frontier;  // distinct neighbors of the module, ascending
    VertexSet in_frontier(n);
    auto absorb = [&](int v) {
        for (int u : g.neighbors(v)) {
            if (!module.test(u) && !in_frontier.test(u)) {
                in_frontier.set(u);
                frontier.push_back(u);
            }
        }
    };
    absorb(start);
    while (module.count() < k) {
        std::size_t at = static_cast<std::size_t>(rng.next_below(frontier.size()));
        int v = frontier[at];
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(at));
        in_frontier.reset(v);
        module.set(v);
        absorb(v);
    }
    return module;
}

}  // namespace

VertexSet sample_module_nonuniform(const Graph& g, int k, double bias_exponent,
                                   std::uint64_t rng_seed) {
    int n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("sample_module: need 1 <= k <= n");
    if (bias_exponent < 0.0)
        throw std::invalid_argument("sample_module: bias_exponent must be >= 0");
    Rng rng(rng_seed);
    double total = 0.0;
    std::vector<double> mass(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        mass[static_cast<std::size_t>(v)] = std::pow(static_cast<double>(g.degree(v)),
                                                     bias_exponent);
        total += mass[static_cast<std::size_t>(v)];
    }
    double x = rng.next_unit() * total;
    int start = n - 1;
    for (int v = 0; v < n; ++v) {
        x -= mass[static_cast<std::size_t>(v)];
        if (x < 0.0) {
            start = v;
            break;
        }
    }
    return grow_module(g, k, start, rng);
}

VertexSet sample_module(const Graph& g, int k, std::uint64_t rng_seed) {
    return sample_module_nonuniform(g, k, 0.0, rng_seed);
}

ModulePrior empirical_prior_from_sampler(const Graph& g, int k, const ModuleSampler& sampler,
                                         int draws, std::uint64_t rng_seed) {
    if (draws < 1) throw std::invalid_argument("empirical prior needs at least one draw");
    std::map<std::vector<int>, int> counts;  // ordered key keeps the support deterministic
    for (int i = 0; i < draws; ++i) {
        VertexSet m = sampler(g, k, Rng::derive(rng_seed, static_cast<std::uint64_t>(i)));
        ++counts[m.members()];
    }
    std::vector<std::pair<VertexSet, double>> support;
    support.reserve(counts.size());
    for (const auto& [members, c] : counts) {
        VertexSet s(g.vertex_count());
        for (int v : members) s.set(v);
        support.emplace_back(std::move(s), static_cast<double>(c) / draws);
    }
    return ModulePrior::empirical(std::move(support));
}

}  // namespace modrank
