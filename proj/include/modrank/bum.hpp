#pragma once

#include <cstdint>
#include <vector>

#include "modrank/graph.hpp"
#include "modrank/vertex_set.hpp"

namespace modrank {

// Beta-uniform mixture parameters: signal p-values follow Beta(alpha, 1),
// noise p-values follow U(0, 1); lambda is the uniform-component proportion
// (estimated by the fitter, not used by the rankers).
struct BumParams {
    double alpha = 1.0;
    double lambda = 1.0;
};

// Per-vertex log-likelihood score log(alpha * w^(alpha-1)).
// Positive exactly when w < alpha^(1/(1-alpha)).
double vertex_score(double w, double alpha);

// Scores for a whole weight vector.
std::vector<double> scores_from_weights(const std::vector<double>& weights, double alpha);

// Draws the weight vector of a planted-module instance: Beta(alpha,1) inside
// the module (inverse transform u^(1/alpha)), U(0,1) outside. Weights are
// clamped to [1e-12, 1] so downstream log-scores stay finite.
std::vector<double> sample_weights(const Graph& g, const VertexSet& module, double alpha,
                                   std::uint64_t rng_seed);

// Maximum-likelihood fit of the mixture density lambda + (1-lambda)*alpha*w^(alpha-1)
// by grid search plus coordinate-wise golden-section refinement.
// Requires at least 10 weights in (0,1], not all identical.
BumParams fit_bum(const std::vector<double>& weights);

// The fitted objective, exposed for verification.
double bum_log_likelihood(const std::vector<double>& weights, double alpha, double lambda);

inline constexpr double kMinWeight = 1e-12;

}  // namespace modrank
