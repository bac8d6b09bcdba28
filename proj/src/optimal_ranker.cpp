#include "modrank/optimal_ranker.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace modrank {

namespace {

// The expected-AUC increment for appending v to a prefix S of size k is
//   sum_{M contains v} (1 - (k - |S∩M|)/(n-|M|)) * post(M)/|M|
// which separates into a per-(v,k) constant plus a sum of pair terms
// Q(v,u) over the prefix members u. Both tables are built in one pass over
// the posterior, so each DP transition costs O(|S|) instead of O(|D|).
struct IncrementTables {
    int n;
    std::vector<double> ta;  // ta[v*(n+1)+k]
    std::vector<double> qw;  // qw[v*n+u]

    IncrementTables(const ConnectedSetIndex& idx, const ModulePosterior& posterior)
        : n(idx.universe_size()),
          ta(static_cast<std::size_t>(n) * (n + 1), 0.0),
          qw(static_cast<std::size_t>(n) * n, 0.0) {
        // per_size[s*n+v] = sum over modules of size s containing v of post/|M|
        std::vector<double> per_size(static_cast<std::size_t>(n + 1) * n, 0.0);
        double full_set_term = 0.0;
        std::vector<int> members;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            double p = posterior.post[i];
            if (p == 0.0) continue;
            members = idx.set_at(i).members();
            int s = static_cast<int>(members.size());
            double p_over_s = p / s;
            if (s == n) {
                full_set_term = p_over_s;  // the M = V term never sees a false positive
                continue;
            }
            double pair_term = p_over_s / (n - s);
            for (int v : members) {
                per_size[static_cast<std::size_t>(s) * n + v] += p_over_s;
                double* row = &qw[static_cast<std::size_t>(v) * n];
                for (int u : members) row[u] += pair_term;
            }
        }
        for (int v = 0; v < n; ++v) {
            for (int k = 1; k <= n; ++k) {
                double t = full_set_term;
                for (int s = 1; s < n; ++s) {
                    double a = per_size[static_cast<std::size_t>(s) * n + v];
                    if (a != 0.0) t += (1.0 - static_cast<double>(k) / (n - s)) * a;
                }
                ta[static_cast<std::size_t>(v) * (n + 1) + k] = t;
            }
        }
    }

    double increment(const std::vector<int>& prefix_members, int v) const {
        double sum = ta[static_cast<std::size_t>(v) * (n + 1) +
                        static_cast<std::size_t>(prefix_members.size())];
        const double* row = &qw[static_cast<std::size_t>(v) * n];
        for (int u : prefix_members) sum += row[u];
        return sum;
    }
};

}  // namespace

OptimalResult optimal_ranking(const Graph& g, const ConnectedSetIndex& idx,
                              const ModulePosterior& posterior) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("optimal_ranking: empty graph");
    if (posterior.index != &idx)
        throw std::invalid_argument("optimal_ranking: posterior built over a different index");
    const std::size_t count = idx.size();
    if (count == 0 || idx.set_at(count - 1).count() != n)
        throw std::invalid_argument("optimal_ranking: index does not contain the full vertex set");

    IncrementTables tables(idx, posterior);

    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    std::vector<double> dp_auc(count, kNegInf);
    std::vector<std::size_t> dp_pred(count, 0);
    std::vector<int> dp_vertex(count, -1);

    std::vector<int> members;
    for (std::size_t i = 0; i < count; ++i) {
        const VertexSet& s = idx.set_at(i);
        members = s.members();
        if (members.size() == 1) {
            dp_auc[i] = tables.increment(members, members[0]);
            dp_vertex[i] = members[0];
            continue;
        }
        for (int v : members) {
            VertexSet pred = s;
            pred.reset(v);
            if (!is_connected(g, pred)) continue;
            auto j = idx.position(pred);
            if (!j) throw std::logic_error("optimal_ranking: predecessor missing from index");
            double cand = dp_auc[*j] + tables.increment(members, v);
            if (cand > dp_auc[i]) {  // ascending v iteration keeps the smaller id on ties
                dp_auc[i] = cand;
                dp_pred[i] = *j;
                dp_vertex[i] = v;
            }
        }
        if (dp_auc[i] == kNegInf)
            throw std::logic_error("optimal_ranking: connected set with no removable vertex");
    }

    OptimalResult out;
    out.expected_auc = dp_auc[count - 1];
    out.ranking.resize(static_cast<std::size_t>(n));
    std::size_t at = count - 1;
    for (int pos = n - 1; pos >= 0; --pos) {
        out.ranking[static_cast<std::size_t>(pos)] = dp_vertex[at];
        at = dp_pred[at];
    }
    return out;
}

OptimalResult optimal_ranking(const Graph& g, const std::vector<double>& weights, double alpha,
                              const ModulePrior& prior, std::size_t cap) {
    ConnectedSetIndex idx = enumerate_connected_sets(g, std::nullopt, cap);
    ModulePosterior posterior = compute_posterior(idx, prior, weights, alpha);
    return optimal_ranking(g, idx, posterior);
}

}  // namespace modrank
