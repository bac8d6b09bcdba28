#include "modrank/connected_sets.hpp"

#include <algorithm>

namespace modrank {

namespace {

// Recursive extension step. S was just emitted; ext holds the vertices that
// may extend it (neighbors of S greater than the root, minus siblings already
// expanded at outer levels), closed = S plus every neighbor of S seen so far.
// Each extension vertex spawns one branch, and its exclusive neighbors (those
// not in closed) join the extension list of that branch only, so every
// connected set is generated from exactly one parent.
struct Enumerator {
    const Graph& g;
    int max_size;  // 0 = unbounded
    std::size_t cap;
    std::vector<VertexSet> out;

    void record(const VertexSet& s) {
        if (out.size() >= cap) throw BudgetExceeded(out.size());
        out.push_back(s);
    }

    void extend(const VertexSet& s, int size, const std::vector<int>& ext,
                const VertexSet& closed, int root) {
        for (std::size_t i = 0; i < ext.size(); ++i) {
            int w = ext[i];
            VertexSet grown = s;
            grown.set(w);
            record(grown);
            if (max_size > 0 && size + 1 >= max_size) continue;
            VertexSet closed_grown = closed;
            std::vector<int> ext_grown(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                       ext.end());
            for (int u : g.neighbors(w)) {
                if (u > root && !closed_grown.test(u)) ext_grown.push_back(u);
                closed_grown.set(u);
            }
            extend(grown, size + 1, ext_grown, closed_grown, root);
        }
    }

    void run() {
        int n = g.vertex_count();
        for (int root = 0; root < n; ++root) {
            VertexSet s(n);
            s.set(root);
            record(s);
            if (max_size == 1) continue;
            VertexSet closed(n);
            closed.set(root);
            std::vector<int> ext;
            for (int u : g.neighbors(root)) {
                closed.set(u);
                if (u > root) ext.push_back(u);
            }
            extend(s, 1, ext, closed, root);
        }
    }
};

}  // namespace

ConnectedSetIndex enumerate_connected_sets(const Graph& g, std::optional<int> max_size,
                                           std::size_t cap) {
    if (cap == 0) throw std::invalid_argument("enumeration cap must be positive");
    Enumerator e{g, max_size.value_or(0), cap, {}};
    e.run();
    std::sort(e.out.begin(), e.out.end(),
              [](const VertexSet& a, const VertexSet& b) { return size_lex_less(a, b); });
    ConnectedSetIndex idx;
    idx.universe_ = g.vertex_count();
    idx.sets_ = std::move(e.out);
    idx.position_.reserve(idx.sets_.size());
    for (std::size_t i = 0; i < idx.sets_.size(); ++i) idx.position_.emplace(idx.sets_[i], i);
    return idx;
}

}  // namespace modrank
