#include "modrank/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "modrank/bum.hpp"

namespace modrank {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    return out;
}

int require_vertex(const Graph& g, const std::string& label, const std::string& context) {
    int v = g.vertex_by_label(label);
    if (v < 0) throw ParseError(context + ": unknown vertex label '" + label + "'");
    return v;
}

double parse_number(const std::string& token, const std::string& context) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(token, &used);
    } catch (const std::exception&) {
        throw ParseError(context + ": bad number '" + token + "'");
    }
    if (used != token.size()) throw ParseError(context + ": bad number '" + token + "'");
    return x;
}

// label<TAB>number lines into a dense per-vertex vector; every vertex must
// appear exactly once.
std::vector<double> parse_vertex_values(std::istream& in, const Graph& g,
                                        const std::string& context) {
    std::vector<double> values(static_cast<std::size_t>(g.vertex_count()));
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string label, token, extra;
        if (!(fields >> label >> token) || (fields >> extra))
            throw ParseError(context + ": malformed line " + std::to_string(lineno));
        int v = require_vertex(g, label, context);
        if (seen[static_cast<std::size_t>(v)])
            throw ParseError(context + ": duplicate entry for '" + label + "'");
        seen[static_cast<std::size_t>(v)] = true;
        values[static_cast<std::size_t>(v)] = parse_number(token, context);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw ParseError(context + ": no entry for vertex '" + g.label(v) + "'");
    return values;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, x);
        if (std::stod(buf) == x) break;
    }
    return buf;
}

Graph load_graph_file(const std::string& path) { return load_graph(slurp(path)); }

std::vector<double> parse_weights(std::istream& in, const Graph& g) {
    std::vector<double> w = parse_vertex_values(in, g, "weights");
    for (int v = 0; v < g.vertex_count(); ++v) {
        double& x = w[static_cast<std::size_t>(v)];
        if (x < 0.0 || x > 1.0)
            throw ParseError("weights: value for '" + g.label(v) + "' outside [0,1]");
        if (x == 0.0) {
            std::cerr << "warning: weight 0 for vertex '" << g.label(v) << "' clamped to "
                      << kMinWeight << "\n";
            x = kMinWeight;
        }
    }
    return w;
}

std::vector<double> load_weights_file(const std::string& path, const Graph& g) {
    std::istringstream in(slurp(path));
    return parse_weights(in, g);
}

std::vector<double> load_scores_file(const std::string& path, const Graph& g) {
    std::istringstream in(slurp(path));
    return parse_vertex_values(in, g, "scores");
}

VertexSet load_module_file(const std::string& path, const Graph& g) {
    std::istringstream in(slurp(path));
    VertexSet module(g.vertex_count());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string label, extra;
        if (!(fields >> label) || (fields >> extra))
            throw ParseError("module: malformed line '" + line + "'");
        module.set(require_vertex(g, label, "module"));
    }
    return module;
}

Ranking load_ranking_file(const std::string& path, const Graph& g) {
    std::istringstream in(slurp(path));
    Ranking r;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string label, extra;
        if (!(fields >> label) || (fields >> extra))
            throw ParseError("ranking: malformed line '" + line + "'");
        r.push_back(require_vertex(g, label, "ranking"));
    }
    if (!is_permutation_of_vertices(r, g.vertex_count()))
        throw ParseError("ranking: not a permutation of the graph's vertices");
    return r;
}

ModulePrior parse_prior(std::istream& in, const Graph& g) {
    std::vector<std::pair<VertexSet, double>> support;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string labels, token, extra;
        if (!(fields >> labels >> token) || (fields >> extra))
            throw ParseError("prior: malformed line " + std::to_string(lineno));
        VertexSet s(g.vertex_count());
        std::istringstream split(labels);
        std::string one;
        while (std::getline(split, one, ','))
            s.set(require_vertex(g, one, "prior"));
        if (s.empty()) throw ParseError("prior: empty vertex set on line " + std::to_string(lineno));
        support.emplace_back(std::move(s), parse_number(token, "prior"));
    }
    return ModulePrior::empirical(std::move(support));
}

ModulePrior load_prior_file(const std::string& path, const Graph& g) {
    std::istringstream in(slurp(path));
    return parse_prior(in, g);
}

void write_graph_file(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    for (auto [u, v] : g.edges()) out << g.label(u) << '\t' << g.label(v) << '\n';
}

void write_weights_file(const std::string& path, const Graph& g,
                        const std::vector<double>& weights) {
    auto out = open_out(path);
    for (int v = 0; v < g.vertex_count(); ++v)
        out << g.label(v) << '\t' << format_double(weights[static_cast<std::size_t>(v)]) << '\n';
}

void write_module_file(const std::string& path, const Graph& g, const VertexSet& module) {
    auto out = open_out(path);
    module.for_each([&](int v) { out << g.label(v) << '\n'; });
}

void write_ranking_file(const std::string& path, const Graph& g, const Ranking& r) {
    auto out = open_out(path);
    for (int v : r) out << g.label(v) << '\n';
}

}  // namespace modrank
