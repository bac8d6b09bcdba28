#include "modrank/module_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "modrank/bum.hpp"

namespace modrank {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

ModulePrior ModulePrior::empirical(std::vector<std::pair<VertexSet, double>> support) {
    double total = 0.0;
    for (const auto& [set, p] : support) {
        if (p < 0.0) throw std::invalid_argument("prior probabilities must be nonnegative");
        total += p;
    }
    if (!(total > 0.0)) throw std::invalid_argument("prior must carry positive mass");
    if (std::abs(total - 1.0) > 1e-9)
        for (auto& [set, p] : support) p /= total;
    ModulePrior prior;
    prior.kind = Kind::Empirical;
    prior.support = std::move(support);
    return prior;
}

ModulePosterior compute_posterior(const ConnectedSetIndex& idx, const ModulePrior& prior,
                                  const std::vector<double>& weights, double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) throw std::invalid_argument("alpha must be in (0,1]");
    const std::size_t count = idx.size();
    std::vector<double> scores = scores_from_weights(weights, alpha);

    std::vector<double> log_post(count, kNegInf);
    if (prior.kind == ModulePrior::Kind::UniformOverIndex) {
        for (std::size_t i = 0; i < count; ++i) {
            double s = 0.0;
            idx.set_at(i).for_each([&](int v) { s += scores[static_cast<std::size_t>(v)]; });
            log_post[i] = s;  // uniform prior is a constant, removed by normalization
        }
    } else {
        for (const auto& [set, p] : prior.support) {
            auto pos = idx.position(set);
            if (!pos)
                throw std::invalid_argument(
                    "empirical prior references a set absent from the connected-set index");
            if (p == 0.0) continue;
            double s = std::log(p);
            set.for_each([&](int v) { s += scores[static_cast<std::size_t>(v)]; });
            log_post[*pos] = s;
        }
    }

    double shift = kNegInf;
    for (double lp : log_post) shift = std::max(shift, lp);
    if (shift == kNegInf) throw std::invalid_argument("posterior has no support");
    double total = 0.0;
    for (double lp : log_post) total += std::exp(lp - shift);
    double log_norm = shift + std::log(total);

    ModulePosterior out;
    out.index = &idx;
    out.log_post.resize(count);
    out.post.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.log_post[i] = log_post[i] - log_norm;
        out.post[i] = std::exp(out.log_post[i]);
    }
    return out;
}

double expected_auc(const Ranking& r, const ModulePosterior& post, const Graph& g) {
    double e = 0.0;
    for (std::size_t i = 0; i < post.post.size(); ++i) {
        if (post.post[i] == 0.0) continue;
        e += post.post[i] * auc(r, post.index->set_at(i), g);
    }
    return e;
}

double expected_auc_increment(const VertexSet& prefix, int v, const ModulePosterior& post) {
    if (!prefix.test(v))
        throw std::invalid_argument("expected_auc_increment: v must be in the prefix");
    const ConnectedSetIndex& idx = *post.index;
    int n = idx.universe_size();
    double sum = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        double p = post.post[i];
        if (p == 0.0) continue;
        const VertexSet& m = idx.set_at(i);
        if (!m.test(v)) continue;
        int msize = m.count();
        int outside = n - msize;
        double fp_fraction =
            outside == 0 ? 0.0 : static_cast<double>((prefix - m).count()) / outside;
        sum += (1.0 - fp_fraction) * p / msize;
    }
    return sum;
}

}  // namespace modrank
