#include "modrank/ranking.hpp"

#include <stdexcept>

namespace modrank {

bool is_permutation_of_vertices(const Ranking& r, int n) {
    if (static_cast<int>(r.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : r) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

double auc(const Ranking& r, const VertexSet& module, const Graph& g) {
    int n = g.vertex_count();
    int m = module.count();
    if (m == 0) throw std::invalid_argument("auc: module must be nonempty");
    int outside = n - m;
    int false_positives = 0;
    double sum = 0.0;
    for (int v : r) {
        if (module.test(v)) {
            double fp_fraction =
                outside == 0 ? 0.0 : static_cast<double>(false_positives) / outside;
            sum += (1.0 - fp_fraction) / m;
        } else {
            ++false_positives;
        }
    }
    return sum;
}

bool is_connectivity_monotonous(const Graph& g, const Ranking& r) {
    if (r.empty()) return true;
    VertexSet prefix(g.vertex_count());
    prefix.set(r[0]);
    for (std::size_t i = 1; i < r.size(); ++i) {
        bool attached = false;
        for (int u : g.neighbors(r[i])) {
            if (prefix.test(u)) {
                attached = true;
                break;
            }
        }
        if (!attached) return false;
        prefix.set(r[i]);
    }
    return true;
}

}  // namespace modrank
