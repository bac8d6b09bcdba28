#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modrank/vertex_set.hpp"

namespace modrank {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph over dense vertex ids 0..n-1. Vertices in
// input files may carry arbitrary labels; the original labels are kept so that
// outputs can be written back in terms of them.
class Graph {
public:
    Graph() = default;

    // Edges over already-dense ids; labels default to the decimal ids.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Edges over labeled vertices; dense ids are assigned by first appearance.
    static Graph from_labeled_edges(
        const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(int u, int v) const;

    // Edge list in construction order, u < v within each pair.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    // Dense id for a label, or -1 when unknown.
    int vertex_by_label(const std::string& label) const;

    VertexSet full_set() const;

private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> label_to_id_;
};

// Parses edge-list text: one edge per line as "u<TAB>v" (any run of blanks
// accepted), lines starting with '#' ignored. Self-loops are rejected,
// duplicate edges collapsed.
Graph load_graph(const std::string& edge_list_text);

// True iff the subgraph induced by s is connected. The empty set and
// singletons count as connected.
bool is_connected(const Graph& g, const VertexSet& s);

// Whole-graph connectivity.
bool is_connected(const Graph& g);

}  // namespace modrank
