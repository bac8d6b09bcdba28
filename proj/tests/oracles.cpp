#include "oracles.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "modrank/rng.hpp"

namespace oracles {

bool bfs_connected(const modrank::Graph& g, const std::vector<int>& members) {
    if (members.empty()) return true;
    std::vector<bool> in_set(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : members) in_set[static_cast<std::size_t>(v)] = true;
    std::vector<bool> visited(static_cast<std::size_t>(g.vertex_count()), false);
    std::queue<int> q;
    q.push(members[0]);
    visited[static_cast<std::size_t>(members[0])] = true;
    std::size_t seen = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            if (in_set[static_cast<std::size_t>(u)] && !visited[static_cast<std::size_t>(u)]) {
                visited[static_cast<std::size_t>(u)] = true;
                q.push(u);
                ++seen;
            }
        }
    }
    return seen == members.size();
}

std::vector<std::vector<int>> brute_force_connected_sets(const modrank::Graph& g, int max_size) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint64_t{1} << v)) members.push_back(v);
        if (max_size > 0 && static_cast<int>(members.size()) > max_size) continue;
        if (bfs_connected(g, members)) out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

double auc_formula(const modrank::Ranking& r, const std::vector<int>& module, int n) {
    std::vector<bool> in_module(static_cast<std::size_t>(n), false);
    for (int v : module) in_module[static_cast<std::size_t>(v)] = true;
    int m = static_cast<int>(module.size());
    int outside = n - m;
    double sum = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!in_module[static_cast<std::size_t>(r[i])]) continue;
        int fp = 0;
        for (std::size_t j = 0; j <= i; ++j)
            if (!in_module[static_cast<std::size_t>(r[j])]) ++fp;
        double frac = outside == 0 ? 0.0 : static_cast<double>(fp) / outside;
        sum += (1.0 - frac) / m;
    }
    return sum;
}

double expected_auc_formula(const modrank::Ranking& r, const modrank::ModulePosterior& post) {
    double e = 0.0;
    for (std::size_t i = 0; i < post.post.size(); ++i) {
        if (post.post[i] == 0.0) continue;
        e += post.post[i] *
             auc_formula(r, post.index->set_at(i).members(), post.index->universe_size());
    }
    return e;
}

namespace {

void cm_rankings_rec(const modrank::Graph& g, modrank::Ranking& prefix,
                     std::vector<bool>& used,
                     const std::function<void(const modrank::Ranking&)>& visit) {
    int n = g.vertex_count();
    if (static_cast<int>(prefix.size()) == n) {
        visit(prefix);
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        bool attached = prefix.empty();
        if (!attached)
            for (int u : g.neighbors(v))
                if (used[static_cast<std::size_t>(u)]) {
                    attached = true;
                    break;
                }
        if (!attached) continue;
        used[static_cast<std::size_t>(v)] = true;
        prefix.push_back(v);
        cm_rankings_rec(g, prefix, used, visit);
        prefix.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
}

}  // namespace

void for_each_cm_ranking(const modrank::Graph& g,
                         const std::function<void(const modrank::Ranking&)>& visit) {
    modrank::Ranking prefix;
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    cm_rankings_rec(g, prefix, used, visit);
}

BruteMwcs brute_force_mwcs(const modrank::Graph& g, const std::vector<double>& scores) {
    BruteMwcs best;
    best.score = -std::numeric_limits<double>::infinity();
    for (const auto& members : brute_force_connected_sets(g)) {
        double s = 0.0;
        for (int v : members) s += scores[static_cast<std::size_t>(v)];
        if (s > best.score) {
            best.score = s;
            best.vertices = members;
        }
    }
    return best;
}

BruteMwcs brute_force_mwcs_constrained(const modrank::Graph& g,
                                       const std::vector<double>& scores,
                                       const modrank::VertexSet& anchors,
                                       const modrank::VertexSet& candidates,
                                       bool restrict_to_union) {
    BruteMwcs best;
    best.score = -std::numeric_limits<double>::infinity();
    int c_total = candidates.count();
    for (const auto& members : brute_force_connected_sets(g)) {
        bool hits_anchor = anchors.empty();
        bool inside_union = true;
        int c_count = 0;
        double s = 0.0;
        for (int v : members) {
            if (anchors.test(v)) hits_anchor = true;
            if (candidates.test(v)) {
                ++c_count;
                s += scores[static_cast<std::size_t>(v)];
            }
            if (!anchors.test(v) && !candidates.test(v)) inside_union = false;
        }
        if ((restrict_to_union && !inside_union) || !hits_anchor) continue;
        if (c_count < 1 || c_count >= c_total) continue;
        if (s > best.score) {
            best.score = s;
            best.vertices = members;
        }
    }
    return best;
}

modrank::Graph random_connected_graph(int n, double extra_edge_prob, std::uint64_t seed) {
    modrank::Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v))), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < extra_edge_prob) edges.emplace_back(u, v);
    return modrank::Graph::from_edges(n, edges);
}

}  // namespace oracles
