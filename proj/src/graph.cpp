#include "modrank/graph.hpp"

#include <algorithm>
#include <sstream>

namespace modrank {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    g.labels_.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        g.labels_.push_back(std::to_string(v));
        g.label_to_id_.emplace(g.labels_.back(), v);
    }
    for (auto [u, v] : edges) {
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range");
        if (g.has_edge(u, v)) continue;
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    return g;
}

Graph Graph::from_labeled_edges(
    const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    auto intern = [&g](const std::string& label) {
        auto it = g.label_to_id_.find(label);
        if (it != g.label_to_id_.end()) return it->second;
        int id = static_cast<int>(g.labels_.size());
        g.labels_.push_back(label);
        g.label_to_id_.emplace(label, id);
        g.adjacency_.emplace_back();
        return id;
    };
    for (const auto& [lu, lv] : edges) {
        if (lu == lv) throw ParseError("self-loop at vertex '" + lu + "'");
        int u = intern(lu);
        int v = intern(lv);
        if (g.has_edge(u, v)) continue;
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& adj = adjacency_[static_cast<std::size_t>(u)];
    return std::find(adj.begin(), adj.end(), v) != adj.end();
}

int Graph::vertex_by_label(const std::string& label) const {
    auto it = label_to_id_.find(label);
    return it == label_to_id_.end() ? -1 : it->second;
}

VertexSet Graph::full_set() const {
    VertexSet s(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) s.set(v);
    return s;
}

Graph load_graph(const std::string& edge_list_text) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(edge_list_text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string u, v, extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw ParseError("malformed edge line " + std::to_string(lineno) + ": '" + line + "'");
        edges.emplace_back(std::move(u), std::move(v));
    }
    return Graph::from_labeled_edges(edges);
}

bool is_connected(const Graph& g, const VertexSet& s) {
    int start = s.first();
    if (start < 0) return true;  // empty set counts as connected
    VertexSet visited(s.universe_size());
    visited.set(start);
    std::vector<int> stack{start};
    int seen = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (s.test(u) && !visited.test(u)) {
                visited.set(u);
                stack.push_back(u);
                ++seen;
            }
        }
    }
    return seen == s.count();
}

bool is_connected(const Graph& g) {
    return g.vertex_count() == 0 || is_connected(g, g.full_set());
}

bool member_lex_less(const VertexSet& a, const VertexSet& b) {
    std::vector<int> ma = a.members(), mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace modrank
