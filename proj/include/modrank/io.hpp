#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "modrank/graph.hpp"
#include "modrank/module_space.hpp"
#include "modrank/ranking.hpp"
#include "modrank/vertex_set.hpp"

namespace modrank {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File formats, all TSV-ish with '#' comment lines:
//   graph:   "u<TAB>v" per edge
//   weights: "label<TAB>weight" with weight in [0,1]; 0 clamped to 1e-12 with
//            a warning on stderr
//   scores:  "label<TAB>score" with any real score
//   module:  one vertex label per line
//   ranking: one vertex label per line, rank order
//   prior:   "comma-separated labels<TAB>probability" per support set

Graph load_graph_file(const std::string& path);
std::vector<double> load_weights_file(const std::string& path, const Graph& g);
std::vector<double> load_scores_file(const std::string& path, const Graph& g);
VertexSet load_module_file(const std::string& path, const Graph& g);
Ranking load_ranking_file(const std::string& path, const Graph& g);
ModulePrior load_prior_file(const std::string& path, const Graph& g);

std::vector<double> parse_weights(std::istream& in, const Graph& g);
ModulePrior parse_prior(std::istream& in, const Graph& g);

void write_graph_file(const std::string& path, const Graph& g);
void write_weights_file(const std::string& path, const Graph& g,
                        const std::vector<double>& weights);
void write_module_file(const std::string& path, const Graph& g, const VertexSet& module);
void write_ranking_file(const std::string& path, const Graph& g, const Ranking& r);

// Shortest decimal form that round-trips a double.
std::string format_double(double x);

}  // namespace modrank
