#include "modrank/mwcs.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

namespace modrank {

namespace {

using Clock = std::chrono::steady_clock;

// Rooted/seeded branch and bound. The included set I stays connected at all
// times: branching picks a frontier vertex (a non-excluded neighbor of I) and
// explores inclusion first, then exclusion. Upper bound: current score plus
// every positive candidate score reachable from I without crossing excluded
// vertices. Incumbents are recorded at every node; exact score ties are
// resolved toward the lexicographically smaller member sequence.
class Search {
public:
    Search(const Graph& g, const std::vector<double>& score, VertexSet allowed,
           VertexSet counts, bool not_all, std::uint64_t budget, double wall_cap)
        : g_(g),
          score_(score),
          allowed_(std::move(allowed)),
          counts_(std::move(counts)),
          not_all_(not_all),
          c_total_(counts_.count()),
          budget_(budget),
          wall_cap_(wall_cap),
          included_(g.vertex_count()),
          excluded_(g.vertex_count()),
          in_frontier_(g.vertex_count()),
          best_set_(g.vertex_count()),
          deadline_(wall_cap > 0.0
                        ? Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(wall_cap))
                        : Clock::time_point::max()) {}

    // Seeds the included set (must induce a connected subgraph) and runs.
    void run_seeded(const VertexSet& seed) {
        seed.for_each([&](int v) { include(v); });
        dfs();
    }

    // Covers all connected sets within `allowed`: iterate roots by descending
    // score; the i-th root's subtree forbids all earlier roots, so every
    // connected set is explored from exactly one root.
    void run_rootwise() {
        std::vector<int> roots = allowed_.members();
        std::sort(roots.begin(), roots.end(), [&](int a, int b) {
            if (score_[a] != score_[b]) return score_[a] > score_[b];
            return a < b;
        });
        for (int r : roots) {
            if (aborted_) break;
            std::size_t mark = trail_.size();
            include(r);
            dfs();
            undo_to(mark);
            exclude(r);  // permanently, for the remaining roots
        }
    }

    const VertexSet& best_set() const { return best_set_; }
    bool aborted() const { return aborted_; }
    std::uint64_t nodes() const { return nodes_; }

    void set_initial_incumbent(const VertexSet& s, double sc) {
        best_set_ = s;
        best_score_ = sc;
        have_best_ = true;
    }

private:
    enum class Op : std::uint8_t { Include, Exclude, FrontierAdd, FrontierDrop };
    struct Undo {
        Op op;
        int v;
        int aux;  // frontier slot for drops
    };

    void include(int v) {
        included_.set(v);
        cur_score_ += score_[v];
        if (counts_.test(v)) ++cur_c_;
        if (score_[v] > 0.0 && counts_.test(v)) potential_ -= score_[v];
        if (in_frontier_.test(v)) drop_from_frontier(v);
        trail_.push_back({Op::Include, v, -1});
        for (int u : g_.neighbors(v)) {
            if (allowed_.test(u) && !included_.test(u) && !excluded_.test(u) &&
                !in_frontier_.test(u)) {
                in_frontier_.set(u);
                frontier_.push_back(u);
                trail_.push_back({Op::FrontierAdd, u, -1});
            }
        }
    }

    void exclude(int v) {
        excluded_.set(v);
        if (score_[v] > 0.0 && counts_.test(v)) potential_ -= score_[v];
        if (in_frontier_.test(v)) drop_from_frontier(v);
        trail_.push_back({Op::Exclude, v, -1});
    }

    void drop_from_frontier(int v) {
        auto it = std::find(frontier_.begin(), frontier_.end(), v);
        int slot = static_cast<int>(it - frontier_.begin());
        frontier_.erase(it);
        in_frontier_.reset(v);
        trail_.push_back({Op::FrontierDrop, v, slot});
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            Undo u = trail_.back();
            trail_.pop_back();
            switch (u.op) {
                case Op::Include:
                    included_.reset(u.v);
                    cur_score_ -= score_[u.v];
                    if (counts_.test(u.v)) --cur_c_;
                    if (score_[u.v] > 0.0 && counts_.test(u.v)) potential_ += score_[u.v];
                    break;
                case Op::Exclude:
                    excluded_.reset(u.v);
                    if (score_[u.v] > 0.0 && counts_.test(u.v)) potential_ += score_[u.v];
                    break;
                case Op::FrontierAdd:
                    frontier_.pop_back();
                    in_frontier_.reset(u.v);
                    break;
                case Op::FrontierDrop:
                    frontier_.insert(frontier_.begin() + u.aux, u.v);
                    in_frontier_.set(u.v);
                    break;
            }
        }
    }

    bool feasible_now() const {
        if (cur_c_ < 1) return false;
        if (not_all_ && cur_c_ >= c_total_) return false;
        return true;
    }

    void record_incumbent() {
        if (!feasible_now()) return;
        if (!have_best_ || cur_score_ > best_score_) {
            have_best_ = true;
            best_score_ = cur_score_;
            best_set_ = included_;
        } else if (cur_score_ == best_score_ && member_lex_less(included_, best_set_)) {
            best_set_ = included_;
        }
    }

    // Positive candidate mass reachable from the included set without crossing
    // excluded vertices. Frontier may be empty (then the bound is cur_score_).
    double reachable_positive() {
        bfs_visited_ = included_;
        bfs_queue_.assign(frontier_.begin(), frontier_.end());
        for (int v : frontier_) bfs_visited_.set(v);
        double sum = 0.0;
        for (std::size_t head = 0; head < bfs_queue_.size(); ++head) {
            int v = bfs_queue_[head];
            if (score_[v] > 0.0 && counts_.test(v)) sum += score_[v];
            for (int u : g_.neighbors(v)) {
                if (allowed_.test(u) && !excluded_.test(u) && !bfs_visited_.test(u)) {
                    bfs_visited_.set(u);
                    bfs_queue_.push_back(u);
                }
            }
        }
        return sum;
    }

    void dfs() {
        if (aborted_) return;
        if (nodes_ >= budget_) {
            aborted_ = true;
            return;
        }
        ++nodes_;
        if (wall_cap_ > 0.0 && (nodes_ & 0xFFF) == 0 && Clock::now() > deadline_) {
            aborted_ = true;
            return;
        }
        record_incumbent();

        if (frontier_.empty()) return;
        if (have_best_) {
            if (cur_score_ + potential_ <= best_score_) return;
            if (cur_score_ + reachable_positive() <= best_score_) return;
        }

        // Branch vertex: best score on the frontier, smallest id on ties.
        int w = frontier_[0];
        for (int v : frontier_)
            if (score_[v] > score_[w] || (score_[v] == score_[w] && v < w)) w = v;

        bool include_allowed = !(not_all_ && counts_.test(w) && cur_c_ + 1 >= c_total_);
        if (include_allowed) {
            std::size_t mark = trail_.size();
            include(w);
            dfs();
            undo_to(mark);
        }
        std::size_t mark = trail_.size();
        exclude(w);
        dfs();
        undo_to(mark);
    }

    const Graph& g_;
    const std::vector<double>& score_;
    VertexSet allowed_;
    VertexSet counts_;
    bool not_all_;
    int c_total_;
    std::uint64_t budget_;
    double wall_cap_;

    VertexSet included_;
    VertexSet excluded_;
    VertexSet in_frontier_;
    std::vector<int> frontier_;
    std::vector<Undo> trail_;
    double cur_score_ = 0.0;
    int cur_c_ = 0;
    double potential_ = 0.0;  // set by prepare()

    bool have_best_ = false;
    double best_score_ = 0.0;
    VertexSet best_set_;
    bool aborted_ = false;
    std::uint64_t nodes_ = 0;
    Clock::time_point deadline_;

    VertexSet bfs_visited_;
    std::vector<int> bfs_queue_;

public:
    void prepare() {
        potential_ = 0.0;
        allowed_.for_each([&](int v) {
            if (score_[v] > 0.0 && counts_.test(v)) potential_ += score_[v];
        });
    }
};

// Preprocessing for the unconstrained solve: repeatedly contract edges whose
// endpoints both score positive, and delete nonpositive vertices of degree at
// most one. Sound because any optimum picks up an adjacent positive vertex for
// free and never needs a nonpositive leaf.
struct ReducedGraph {
    Graph graph;
    std::vector<double> score;
    std::vector<std::vector<int>> members;  // reduced id -> original ids
};

ReducedGraph reduce_for_solve(const Graph& g, const std::vector<double>& score) {
    int n = g.vertex_count();
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<double> sc = score;
    std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(v)] = {v};

    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < n && !changed; ++u) {
            if (!alive[static_cast<std::size_t>(u)] || sc[static_cast<std::size_t>(u)] <= 0.0)
                continue;
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (sc[static_cast<std::size_t>(v)] <= 0.0) continue;
                // contract v into u
                sc[static_cast<std::size_t>(u)] += sc[static_cast<std::size_t>(v)];
                auto& mu = members[static_cast<std::size_t>(u)];
                auto& mv = members[static_cast<std::size_t>(v)];
                mu.insert(mu.end(), mv.begin(), mv.end());
                mv.clear();
                for (int x : adj[static_cast<std::size_t>(v)]) {
                    if (x == u) continue;
                    adj[static_cast<std::size_t>(x)].erase(v);
                    adj[static_cast<std::size_t>(x)].insert(u);
                    adj[static_cast<std::size_t>(u)].insert(x);
                }
                adj[static_cast<std::size_t>(u)].erase(v);
                adj[static_cast<std::size_t>(v)].clear();
                alive[static_cast<std::size_t>(v)] = false;
                changed = true;
                break;
            }
        }
        for (int v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)] || sc[static_cast<std::size_t>(v)] > 0.0)
                continue;
            if (adj[static_cast<std::size_t>(v)].size() <= 1) {
                for (int x : adj[static_cast<std::size_t>(v)])
                    adj[static_cast<std::size_t>(x)].erase(v);
                adj[static_cast<std::size_t>(v)].clear();
                alive[static_cast<std::size_t>(v)] = false;
                changed = true;
            }
        }
    }

    ReducedGraph out;
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    int rn = 0;
    for (int v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)]) remap[static_cast<std::size_t>(v)] = rn++;
    std::vector<std::pair<int, int>> redges;
    for (int v = 0; v < n; ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (v < u)
                redges.emplace_back(remap[static_cast<std::size_t>(v)],
                                    remap[static_cast<std::size_t>(u)]);
    }
    out.graph = Graph::from_edges(rn, redges);
    out.score.resize(static_cast<std::size_t>(rn));
    out.members.resize(static_cast<std::size_t>(rn));
    for (int v = 0; v < n; ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        int rv = remap[static_cast<std::size_t>(v)];
        out.score[static_cast<std::size_t>(rv)] = sc[static_cast<std::size_t>(v)];
        out.members[static_cast<std::size_t>(rv)] = members[static_cast<std::size_t>(v)];
    }
    return out;
}

void check_instance(const MwcsInstance& inst) {
    if (inst.graph == nullptr) throw std::invalid_argument("mwcs: instance has no graph");
    if (inst.scores.size() != static_cast<std::size_t>(inst.graph->vertex_count()))
        throw std::invalid_argument("mwcs: score vector size mismatch");
}

}  // namespace

MwcsSolution solve(const MwcsInstance& inst) {
    check_instance(inst);
    const Graph& g = *inst.graph;
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("mwcs: empty graph");

    // All scores nonpositive: a single best vertex dominates every larger set.
    int argmax = 0;
    for (int v = 1; v < n; ++v)
        if (inst.scores[static_cast<std::size_t>(v)] > inst.scores[static_cast<std::size_t>(argmax)])
            argmax = v;
    MwcsSolution out;
    out.vertices = VertexSet(n);
    if (inst.scores[static_cast<std::size_t>(argmax)] <= 0.0) {
        out.vertices.set(argmax);
        out.total_score = inst.scores[static_cast<std::size_t>(argmax)];
        out.proven_optimal = true;
        return out;
    }

    ReducedGraph red = reduce_for_solve(g, inst.scores);
    int rn = red.graph.vertex_count();
    Search search(red.graph, red.score, red.graph.full_set(), red.graph.full_set(),
                  /*not_all=*/false, inst.node_budget, inst.wall_clock_cap_seconds);
    // Initial incumbent: the best single reduced vertex.
    int rbest = 0;
    for (int v = 1; v < rn; ++v)
        if (red.score[static_cast<std::size_t>(v)] > red.score[static_cast<std::size_t>(rbest)])
            rbest = v;
    VertexSet seed(rn);
    seed.set(rbest);
    search.set_initial_incumbent(seed, red.score[static_cast<std::size_t>(rbest)]);
    search.prepare();
    search.run_rootwise();

    double total = 0.0;
    search.best_set().for_each([&](int rv) {
        for (int v : red.members[static_cast<std::size_t>(rv)]) {
            out.vertices.set(v);
            total += inst.scores[static_cast<std::size_t>(v)];
        }
    });
    out.total_score = total;
    out.proven_optimal = !search.aborted();
    out.nodes_expanded = search.nodes();
    return out;
}

MwcsSolution solve_constrained(const MwcsInstance& inst) {
    check_instance(inst);
    const Graph& g = *inst.graph;
    int n = g.vertex_count();
    const VertexSet& anchors = inst.anchors;
    const VertexSet& candidates = inst.candidates;
    if (anchors.intersects(candidates))
        throw std::invalid_argument("mwcs: anchor and candidate sets must be disjoint");
    int c_total = candidates.count();
    if (c_total == 0) throw std::invalid_argument("mwcs: candidate set must be nonempty");
    if (!anchors.empty() && !is_connected(g, anchors))
        throw std::invalid_argument("mwcs: anchor set must induce a connected subgraph");
    if (!is_connected(g, anchors | candidates))
        throw std::invalid_argument("mwcs: anchors and candidates must form a connected union");

    MwcsSolution out;
    out.vertices = VertexSet(n);

    // Recursion stops at a single candidate: it is returned unconditionally.
    if (c_total == 1) {
        int c = candidates.first();
        out.vertices.set(c);
        out.total_score = inst.scores[static_cast<std::size_t>(c)];
        out.proven_optimal = true;
        return out;
    }

    // Only candidate scores enter the objective; anchors and (when solutions
    // may leave R ∪ C) any outside vertices are zero-cost connectors.
    std::vector<double> eff = inst.scores;
    for (int v = 0; v < n; ++v)
        if (!candidates.test(v)) eff[static_cast<std::size_t>(v)] = 0.0;

    VertexSet allowed = inst.restrict_to_union ? (anchors | candidates) : g.full_set();

    Search search(g, eff, allowed, candidates, /*not_all=*/true, inst.node_budget,
                  inst.wall_clock_cap_seconds);

    if (anchors.empty()) {
        // No anchor: best single candidate is always feasible (|C| >= 2).
        int cbest = -1;
        candidates.for_each([&](int v) {
            if (cbest < 0 || eff[static_cast<std::size_t>(v)] > eff[static_cast<std::size_t>(cbest)])
                cbest = v;
        });
        VertexSet seed(n);
        seed.set(cbest);
        search.set_initial_incumbent(seed, eff[static_cast<std::size_t>(cbest)]);
        search.prepare();
        // Only candidate roots can start a solution (allowed = C here when
        // restricted; even unrestricted, a solution without anchors must touch
        // C, and any connected S has a first vertex in some root order — keep
        // the search complete by rooting at every allowed vertex).
        search.run_rootwise();
    } else {
        // WLOG solutions contain all of R: anchors are free connectors, and
        // R ∪ S stays connected for any feasible S, with the same objective.
        int cbest = -1;
        candidates.for_each([&](int v) {
            bool adjacent = false;
            for (int u : g.neighbors(v))
                if (anchors.test(u)) {
                    adjacent = true;
                    break;
                }
            if (adjacent &&
                (cbest < 0 || eff[static_cast<std::size_t>(v)] > eff[static_cast<std::size_t>(cbest)]))
                cbest = v;
        });
        if (cbest < 0)
            throw std::invalid_argument(
                "mwcs: infeasible geometry, no candidate adjacent to the anchor set");
        VertexSet seed = anchors;
        seed.set(cbest);
        search.set_initial_incumbent(seed, eff[static_cast<std::size_t>(cbest)]);
        search.prepare();
        search.run_seeded(anchors);
    }

    out.vertices = search.best_set();
    double total = 0.0;
    (out.vertices & candidates).for_each([&](int v) {
        total += inst.scores[static_cast<std::size_t>(v)];
    });
    out.total_score = total;
    out.proven_optimal = !search.aborted();
    out.nodes_expanded = search.nodes();
    return out;
}

}  // namespace modrank
