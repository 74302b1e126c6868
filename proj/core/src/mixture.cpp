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

#include "contam/mixture.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "contam/numerics.hpp"
#include "contam/parallel.hpp"

namespace contam {

namespace {

constexpr std::size_t kSampleChunk = 1024;

std::vector<int> resolve_active(const RegressionData& data,
                                const std::optional<std::vector<int>>& restrict_to) {
  if (!restrict_to) {
    std::vector<int> all(static_cast<std::size_t>(data.n()));
    for (int i = 0; i < data.n(); ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
  }
  std::vector<int> active = *restrict_to;
  std::sort(active.begin(), active.end());
  if (std::adjacent_find(active.begin(), active.end()) != active.end()) {
    throw std::invalid_argument("build_mixture_posterior: duplicate index in restrict_to");
  }
  for (int i : active) {
    if (i < 0 || i >= data.n()) {
      throw std::invalid_argument("build_mixture_posterior: restrict_to index out of range");
    }
  }
  return active;
}

double quantile_type7(const std::vector<double>& sorted, double level) {
  const auto n = sorted.size();
  if (n == 0) throw std::invalid_argument("quantile of empty sample");
  const double h = (static_cast<double>(n) - 1.0) * level;
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= n) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

// Cumulative component probabilities with the final entry pinned to 1.
std::vector<double> cumulative_weights(const MixturePosterior& mix) {
  std::vector<double> cum(mix.components.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < mix.components.size(); ++i) {
    acc += std::exp(mix.components[i].log_weight);
    cum[i] = acc;
  }
  cum.back() = 1.0;
  return cum;
}

std::size_t pick_component(const std::vector<double>& cum, double u) {
  const auto it = std::upper_bound(cum.begin(), cum.end(), u);
  return it == cum.end() ? cum.size() - 1
                         : static_cast<std::size_t>(it - cum.begin());
}

}  // namespace

MixturePosterior build_mixture_posterior(
    const RegressionData& data, double omega, const NigParams& prior, double s,
    const ErrorDensity& error,
    const std::optional<std::vector<int>>& restrict_to) {
  data.validate();
  prior.validate();
  if (prior.dim() != data.p()) {
    throw std::invalid_argument("build_mixture_posterior: prior dimension mismatch");
  }
  if (!(s > 0.0 && s < 1.0)) {
    throw std::domain_error("build_mixture_posterior: s must be in (0, 1)");
  }
  const std::vector<int> active = resolve_active(data, restrict_to);
  const int n_active = static_cast<int>(active.size());
  if (n_active > kMaxExactObservations) {
    throw std::invalid_argument(
        "build_mixture_posterior: " + std::to_string(n_active) +
        " active observations exceed the exact-enumeration cap of " +
        std::to_string(kMaxExactObservations) + "; subsample the data");
  }
  const Eigen::VectorXd y = materialize_outliers(data, omega);
  const double log_s = std::log(s);
  const double log_1ms = std::log1p(-s);

  const std::size_t n_components = std::size_t{1} << n_active;
  std::vector<MixtureComponent> components(n_components);

  auto build_range = [&](std::size_t begin, std::size_t end) {
    Eigen::MatrixXd xs(n_active, data.p());
    Eigen::VectorXd ys(n_active);
    for (std::size_t mask = begin; mask < end; ++mask) {
      int m = 0;
      double log_w = 0.0;
      std::uint32_t subset = 0;
      for (int i = 0; i < n_active; ++i) {
        const int obs = active[static_cast<std::size_t>(i)];
        if (mask >> i & 1U) {
          xs.row(m) = data.x.row(obs);
          ys[m] = y[obs];
          ++m;
          subset |= 1U << obs;
          log_w += log_1ms;
        } else {
          log_w += log_s + error.log_pdf(y[obs]);
        }
      }
      const Eigen::MatrixXd xs_m = xs.topRows(m);
      const Eigen::VectorXd ys_m = ys.head(m);
      NigParams post = nig_update(prior, xs_m, ys_m);
      log_w += log_marginal_likelihood(prior, xs_m, ys_m, post);
      components[mask] = MixtureComponent{subset, log_w, std::move(post)};
    }
  };
  if (n_components >= 512) {
    parallel_for(n_components, build_range);
  } else {
    build_range(0, n_components);
  }

  std::vector<double> log_weights(n_components);
  for (std::size_t i = 0; i < n_components; ++i) {
    log_weights[i] = components[i].log_weight;
  }
  const double log_norm = log_sum_exp(log_weights);
  if (!std::isfinite(log_norm)) {
    throw std::runtime_error("build_mixture_posterior: weight normalization is not finite");
  }
  for (auto& c : components) {
    c.log_weight -= log_norm;
  }
  return MixturePosterior{std::move(components), s, error, data.p()};
}

double log_posterior_density(const MixturePosterior& mix,
                             const Eigen::VectorXd& beta, double sigma) {
  if (!(sigma > 0.0)) {
    throw std::domain_error("log_posterior_density: sigma must be positive");
  }
  std::vector<double> terms(mix.components.size());
  for (std::size_t i = 0; i < mix.components.size(); ++i) {
    terms[i] = mix.components[i].log_weight +
               log_nig_density(mix.components[i].params, beta, sigma);
  }
  return log_sum_exp(terms);
}

namespace {

// Upper Cholesky factors of each component precision, precomputed once so
// the per-draw work is a triangular solve.
std::vector<Eigen::MatrixXd> upper_factors(const MixturePosterior& mix) {
  std::vector<Eigen::MatrixXd> factors;
  factors.reserve(mix.components.size());
  for (const auto& c : mix.components) {
    Eigen::LLT<Eigen::MatrixXd> llt(c.params.lambda);
    if (c.params.lambda.size() > 0 && llt.info() != Eigen::Success) {
      throw std::runtime_error("sample_posterior: component precision not SPD");
    }
    factors.push_back(Eigen::MatrixXd(llt.matrixU()));
  }
  return factors;
}

}  // namespace

std::vector<PosteriorDraw> sample_posterior(const MixturePosterior& mix,
                                            int count, std::uint64_t seed) {
  if (count < 1) {
    throw std::invalid_argument("sample_posterior: count must be >= 1");
  }
  const std::vector<double> cum = cumulative_weights(mix);
  const std::vector<Eigen::MatrixXd> factors = upper_factors(mix);
  const int p = mix.dim;
  std::vector<PosteriorDraw> draws(static_cast<std::size_t>(count));

  const std::size_t n_chunks =
      (static_cast<std::size_t>(count) + kSampleChunk - 1) / kSampleChunk;
  parallel_for(n_chunks, [&](std::size_t chunk_begin, std::size_t chunk_end) {
    Eigen::VectorXd z(p);
    for (std::size_t chunk = chunk_begin; chunk < chunk_end; ++chunk) {
      Rng rng = Rng::derive(seed, chunk);
      const std::size_t lo = chunk * kSampleChunk;
      const std::size_t hi =
          std::min(lo + kSampleChunk, static_cast<std::size_t>(count));
      for (std::size_t d = lo; d < hi; ++d) {
        const std::size_t comp = pick_component(cum, rng.uniform());
        const NigParams& params = mix.components[comp].params;
        const double tau = rng.gamma(params.shape, params.scale);
        const double sigma = 1.0 / std::sqrt(tau);
        for (int k = 0; k < p; ++k) z[k] = rng.normal();
        PosteriorDraw& out = draws[d];
        out.sigma = sigma;
        out.component = static_cast<int>(comp);
        if (p > 0) {
          out.beta = params.mu +
                     sigma * factors[comp].triangularView<Eigen::Upper>().solve(z);
        } else {
          out.beta.resize(0);
        }
      }
    }
  });
  return draws;
}

QuantileTable predictive_quantiles(const MixturePosterior& mix,
                                   const Eigen::VectorXd& xt,
                                   const std::vector<double>& levels,
                                   int count, std::uint64_t seed) {
  if (xt.size() != mix.dim) {
    throw std::invalid_argument("predictive_quantiles: xt dimension mismatch");
  }
  for (double l : levels) {
    if (!(l > 0.0 && l < 1.0)) {
      throw std::domain_error("predictive_quantiles: levels must be in (0, 1)");
    }
  }
  if (count < 1) {
    throw std::invalid_argument("predictive_quantiles: count must be >= 1");
  }
  const std::vector<double> cum = cumulative_weights(mix);
  const std::vector<Eigen::MatrixXd> factors = upper_factors(mix);
  const int p = mix.dim;
  std::vector<double> linpred(static_cast<std::size_t>(count));
  std::vector<double> predictive(static_cast<std::size_t>(count));

  const std::size_t n_chunks =
      (static_cast<std::size_t>(count) + kSampleChunk - 1) / kSampleChunk;
  parallel_for(n_chunks, [&](std::size_t chunk_begin, std::size_t chunk_end) {
    Eigen::VectorXd z(p);
    for (std::size_t chunk = chunk_begin; chunk < chunk_end; ++chunk) {
      Rng rng = Rng::derive(seed, chunk);
      const std::size_t lo = chunk * kSampleChunk;
      const std::size_t hi =
          std::min(lo + kSampleChunk, static_cast<std::size_t>(count));
      for (std::size_t d = lo; d < hi; ++d) {
        const std::size_t comp = pick_component(cum, rng.uniform());
        const NigParams& params = mix.components[comp].params;
        const double tau = rng.gamma(params.shape, params.scale);
        const double sigma = 1.0 / std::sqrt(tau);
        for (int k = 0; k < p; ++k) z[k] = rng.normal();
        double lp = 0.0;
        if (p > 0) {
          const Eigen::VectorXd beta =
              params.mu +
              sigma * factors[comp].triangularView<Eigen::Upper>().solve(z);
          lp = xt.dot(beta);
        }
        linpred[d] = lp;
        // response: contaminated with probability s, Gaussian otherwise
        if (rng.uniform() < mix.s) {
          predictive[d] = mix.error.quantile(rng.uniform());
        } else {
          predictive[d] = lp + sigma * rng.normal();
        }
      }
    }
  });

  std::sort(linpred.begin(), linpred.end());
  std::sort(predictive.begin(), predictive.end());
  QuantileTable table;
  table.levels = levels;
  table.linear_predictor.reserve(levels.size());
  table.predictive.reserve(levels.size());
  for (double l : levels) {
    table.linear_predictor.push_back(quantile_type7(linpred, l));
    table.predictive.push_back(quantile_type7(predictive, l));
  }
  return table;
}

}  // namespace contam
