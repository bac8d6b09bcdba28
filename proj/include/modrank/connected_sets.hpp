#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "modrank/graph.hpp"
#include "modrank/vertex_set.hpp"

namespace modrank {

inline constexpr std::size_t kDefaultEnumerationCap = 5'000'000;

// Raised when enumeration would exceed its set-count cap; carries the count
// reached so far so callers can report how far the graph blew the budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::size_t partial)
        : std::runtime_error("connected-set enumeration exceeded its cap after " +
                             std::to_string(partial) + " sets"),
          partial_count(partial) {}
    std::size_t partial_count;
};

// The family D of all vertex sets inducing connected subgraphs, ordered by
// nondecreasing cardinality, with constant-time position lookup.
class ConnectedSetIndex {
public:
    std::size_t size() const { return sets_.size(); }
    const VertexSet& set_at(std::size_t i) const { return sets_[i]; }
    int universe_size() const { return universe_; }

    // Index of a set in the family, or nullopt when absent.
    std::optional<std::size_t> position(const VertexSet& s) const {
        auto it = position_.find(s);
        if (it == position_.end()) return std::nullopt;
        return it->second;
    }

private:
    friend ConnectedSetIndex enumerate_connected_sets(const Graph&, std::optional<int>,
                                                      std::size_t);
    int universe_ = 0;
    std::vector<VertexSet> sets_;
    std::unordered_map<VertexSet, std::size_t, VertexSetHash> position_;
};

// Enumerates every vertex set of cardinality 1..max_size (all sizes when
// nullopt) that induces a connected subgraph. Throws BudgetExceeded when the
// family would exceed cap.
ConnectedSetIndex enumerate_connected_sets(const Graph& g,
                                           std::optional<int> max_size = std::nullopt,
                                           std::size_t cap = kDefaultEnumerationCap);

}  // namespace modrank
