#include "modrank/bum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "modrank/rng.hpp"

namespace modrank {

double vertex_score(double w, double alpha) {
    if (!(w > 0.0) || w > 1.0) throw std::invalid_argument("vertex weight must be in (0,1]");
    if (!(alpha > 0.0) || alpha > 1.0) throw std::invalid_argument("alpha must be in (0,1]");
    return std::log(alpha) + (alpha - 1.0) * std::log(w);
}

std::vector<double> scores_from_weights(const std::vector<double>& weights, double alpha) {
    std::vector<double> scores(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) scores[i] = vertex_score(weights[i], alpha);
    return scores;
}

std::vector<double> sample_weights(const Graph& g, const VertexSet& module, double alpha,
                                   std::uint64_t rng_seed) {
    if (!(alpha > 0.0) || alpha >= 1.0) throw std::invalid_argument("alpha must be in (0,1)");
    Rng rng(rng_seed);
    int n = g.vertex_count();
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        double u = rng.next_unit_open();
        double x = module.test(v) ? std::pow(u, 1.0 / alpha) : u;
        w[static_cast<std::size_t>(v)] = std::clamp(x, kMinWeight, 1.0);
    }
    return w;
}

double bum_log_likelihood(const std::vector<double>& weights, double alpha, double lambda) {
    double ll = 0.0;
    for (double w : weights)
        ll += std::log(lambda + (1.0 - lambda) * alpha * std::pow(w, alpha - 1.0));
    return ll;
}

namespace {

// Golden-section maximization of f over [lo, hi] down to the given width.
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

BumParams fit_bum(const std::vector<double>& weights) {
    if (weights.size() < 10) throw std::invalid_argument("fit_bum needs at least 10 weights");
    double wmin = weights[0], wmax = weights[0];
    for (double w : weights) {
        if (!(w > 0.0) || w > 1.0) throw std::invalid_argument("weights must be in (0,1]");
        wmin = std::min(wmin, w);
        wmax = std::max(wmax, w);
    }
    if (wmin == wmax) throw std::invalid_argument("fit_bum: degenerate input, all weights identical");

    auto ll = [&](double a, double l) { return bum_log_likelihood(weights, a, l); };

    // Coarse grid, then coordinate-wise golden-section refinement.
    double best_a = 0.5, best_l = 0.5, best = -1e300;
    for (int ia = 1; ia < 50; ++ia) {
        double a = ia / 50.0;
        for (int il = 0; il <= 50; ++il) {
            double l = il / 50.0;
            double v = ll(a, l);
            if (v > best) {
                best = v;
                best_a = a;
                best_l = l;
            }
        }
    }
    constexpr double tol = 1e-4;
    constexpr double amin = 1e-4, amax = 1.0;
    for (int round = 0; round < 4; ++round) {
        double l = best_l;
        best_a = golden_max([&](double a) { return ll(a, l); },
                            std::max(amin, best_a - 0.1), std::min(amax, best_a + 0.1), tol);
        double a = best_a;
        best_l = golden_max([&](double lv) { return ll(a, lv); },
                            std::max(0.0, best_l - 0.1), std::min(1.0, best_l + 0.1), tol);
    }

    // The likelihood is flat along the alpha -> 1 ridge, where any lambda
    // explains uniform data. Unless the mixture beats the pure-uniform model
    // (log-likelihood 0) by a clear margin, attribute everything to the
    // uniform component.
    if (ll(best_a, best_l) < 3.0) return BumParams{1.0, 1.0};
    return BumParams{best_a, best_l};
}

}  // namespace modrank
