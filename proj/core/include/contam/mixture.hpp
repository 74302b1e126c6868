// Copyright 2026 The contam Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONTAM_MIXTURE_HPP
#define CONTAM_MIXTURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "contam/densities.hpp"
#include "contam/nig.hpp"
#include "contam/regression_data.hpp"

namespace contam {

// One term of the exact posterior mixture. The subset bitmask marks the
// observations assigned to the Gaussian component (bit i = 0-based
// observation index i); the rest are assigned to the parameter-free error
// density.
struct MixtureComponent {
  std::uint32_t subset = 0;
  double log_weight = 0.0;  // normalized: log-sum-exp over components is 0
  NigParams params;
};

// Exact 2^n-component normal-inverse-gamma mixture posterior of the
// contamination model. Components are stored in ascending subset-bitmask
// order and are immutable once built.
struct MixturePosterior {
  std::vector<MixtureComponent> components;
  double s = 0.1;  // contamination probability
  ErrorDensity error;
  int dim = 0;  // p
};

inline constexpr int kMaxExactObservations = 20;

/// Expands the contamination likelihood over all subsets of the active
/// observations (all of them, or restrict_to when given) at the outlier
/// magnitude omega. Component log-weight:
///   |S| log(1-s) + (n_active-|S|) log s + sum_{i not in S} log f1(y_i)
///   + log_marginal_likelihood(prior, X_S, y_S),
/// normalized by log-sum-exp; component params are the conjugate update on
/// (X_S, y_S). Throws when more than kMaxExactObservations are active.
MixturePosterior build_mixture_posterior(
    const RegressionData& data, double omega, const NigParams& prior, double s,
    const ErrorDensity& error,
    const std::optional<std::vector<int>>& restrict_to = std::nullopt);

/// log posterior density at (beta, sigma): log-sum-exp of component
/// log-weights plus NIG log-densities (sigma parameterization).
double log_posterior_density(const MixturePosterior& mix,
                             const Eigen::VectorXd& beta, double sigma);

struct PosteriorDraw {
  Eigen::VectorXd beta;
  double sigma = 1.0;
  int component = 0;  // index into MixturePosterior::components
};

/// count i.i.d. draws. Sampling is chunked with per-chunk derived seeds, so
/// output is identical regardless of thread schedule.
std::vector<PosteriorDraw> sample_posterior(const MixturePosterior& mix,
                                            int count, std::uint64_t seed);

struct QuantileTable {
  std::vector<double> levels;
  std::vector<double> linear_predictor;  // quantiles of xt' beta
  std::vector<double> predictive;        // quantiles of the response draw
};

/// Empirical quantiles of the linear predictor xt' beta and of the
/// posterior predictive draw
///   y ~ (1-s) N(xt' beta, sigma^2) + s f1,
/// from count posterior draws. s and the error density come from mix.
QuantileTable predictive_quantiles(const MixturePosterior& mix,
                                   const Eigen::VectorXd& xt,
                                   const std::vector<double>& levels,
                                   int count, std::uint64_t seed);

}  // namespace contam

#endif  // CONTAM_MIXTURE_HPP
