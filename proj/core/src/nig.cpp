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

#include "contam/nig.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

#include "contam/numerics.hpp"

namespace contam {

namespace {

Eigen::LLT<Eigen::MatrixXd> cholesky_or_throw(const Eigen::MatrixXd& m,
                                              const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (m.size() > 0 && llt.info() != Eigen::Success) {
    throw std::runtime_error(std::string(what) +
                             ": Cholesky factorization failed (matrix not "
                             "positive definite)");
  }
  if (m.size() > 0) {
    const auto diag = llt.matrixLLT().diagonal();
    const double lo = diag.minCoeff();
    const double hi = diag.maxCoeff();
    if (!(lo > 0.0) || lo < 1e-12 * hi) {
      throw std::runtime_error(std::string(what) +
                               ": factor numerically singular at 1e-12");
    }
  }
  return llt;
}

double log_det_from_llt(const Eigen::LLT<Eigen::MatrixXd>& llt,
                        Eigen::Index size) {
  double acc = 0.0;
  const auto diag = llt.matrixLLT().diagonal();
  for (Eigen::Index i = 0; i < size; ++i) {
    acc += std::log(diag[i]);
  }
  return 2.0 * acc;
}

}  // namespace

void NigParams::validate() const {
  if (lambda.rows() != dim() || lambda.cols() != dim()) {
    throw std::invalid_argument("NigParams: lambda must be p x p");
  }
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw std::invalid_argument("NigParams: shape and scale must be positive");
  }
  cholesky_or_throw(lambda, "NigParams::validate");
}

NigParams NigParams::standard(int p, double shape_a, double scale_b,
                              double coeff_scale_c) {
  if (p < 0 || !(shape_a > 0.0) || !(scale_b > 0.0) || !(coeff_scale_c > 0.0)) {
    throw std::invalid_argument("NigParams::standard: bad hyperparameters");
  }
  NigParams out;
  out.mu = Eigen::VectorXd::Zero(p);
  out.lambda = Eigen::MatrixXd::Identity(p, p) / (coeff_scale_c * coeff_scale_c);
  out.shape = shape_a;
  out.scale = scale_b;
  return out;
}

NigParams nig_update(const NigParams& prior, const Eigen::MatrixXd& xs,
                     const Eigen::VectorXd& ys) {
  if (xs.rows() != ys.size() || xs.cols() != prior.dim()) {
    throw std::invalid_argument("nig_update: dimension mismatch");
  }
  const auto m = xs.rows();
  if (m == 0) {
    return prior;
  }
  NigParams out;
  out.lambda = prior.lambda + xs.transpose() * xs;
  const auto llt = cholesky_or_throw(out.lambda, "nig_update");
  out.mu = llt.solve(prior.lambda * prior.mu + xs.transpose() * ys);
  out.shape = prior.shape + 0.5 * static_cast<double>(m);
  const Eigen::VectorXd resid = ys - xs * out.mu;
  const Eigen::VectorXd shift = out.mu - prior.mu;
  out.scale = prior.scale +
              0.5 * (resid.squaredNorm() +
                     shift.dot(prior.lambda * shift));
  if (!std::isfinite(out.scale)) {
    throw std::runtime_error(
        "nig_update: posterior scale overflowed; observation magnitudes "
        "exceed double range");
  }
  return out;
}

double log_marginal_likelihood(const NigParams& prior,
                               const Eigen::MatrixXd& xs,
                               const Eigen::VectorXd& ys) {
  if (xs.rows() == 0) {
    return 0.0;
  }
  return log_marginal_likelihood(prior, xs, ys, nig_update(prior, xs, ys));
}

double log_marginal_likelihood(const NigParams& prior,
                               const Eigen::MatrixXd& xs,
                               const Eigen::VectorXd& ys,
                               const NigParams& post) {
  const auto m = xs.rows();
  if (m == 0) {
    return 0.0;
  }
  const double log_det_prior =
      log_det_from_llt(cholesky_or_throw(prior.lambda, "log_marginal_likelihood"),
                       prior.lambda.rows());
  const double log_det_post =
      log_det_from_llt(cholesky_or_throw(post.lambda, "log_marginal_likelihood"),
                       post.lambda.rows());
  return -0.5 * static_cast<double>(m) * std::log(2.0 * M_PI) +
         0.5 * (log_det_prior - log_det_post) +
         prior.shape * std::log(prior.scale) -
         post.shape * std::log(post.scale) + log_gamma(post.shape) -
         log_gamma(prior.shape);
}

double log_nig_density(const NigParams& params, const Eigen::VectorXd& beta,
                       double sigma) {
  if (!(sigma > 0.0)) {
    throw std::domain_error("log_nig_density: sigma must be positive");
  }
  if (beta.size() != params.dim()) {
    throw std::invalid_argument("log_nig_density: beta dimension mismatch");
  }
  const auto p = static_cast<double>(params.dim());
  const auto llt = cholesky_or_throw(params.lambda, "log_nig_density");
  const double log_det = log_det_from_llt(llt, params.lambda.rows());
  const Eigen::VectorXd d = beta - params.mu;
  const double quad = d.dot(params.lambda * d);
  const double log_sigma = std::log(sigma);
  return std::log(2.0) + params.shape * std::log(params.scale) -
         log_gamma(params.shape) - (2.0 * params.shape + 1.0) * log_sigma -
         params.scale / (sigma * sigma) - 0.5 * p * std::log(2.0 * M_PI) +
         0.5 * log_det - p * log_sigma - quad / (2.0 * sigma * sigma);
}

std::pair<Eigen::VectorXd, double> draw_nig(const NigParams& params, Rng& rng) {
  const double tau = rng.gamma(params.shape, params.scale);
  const double sigma = 1.0 / std::sqrt(tau);
  const auto p = params.dim();
  Eigen::VectorXd z(p);
  for (int k = 0; k < p; ++k) {
    z[k] = rng.normal();
  }
  if (p == 0) {
    return {z, sigma};
  }
  const auto llt = cholesky_or_throw(params.lambda, "draw_nig");
  // cov(beta) = sigma^2 lambda^-1 = sigma^2 L^-T L^-1 for lambda = L L^T.
  Eigen::VectorXd beta =
      params.mu +
      sigma * llt.matrixU().solve(z);
  return {beta, sigma};
}

}  // namespace contam
