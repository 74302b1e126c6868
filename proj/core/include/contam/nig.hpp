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

#ifndef CONTAM_NIG_HPP
#define CONTAM_NIG_HPP

#include <Eigen/Core>

#include "contam/rng.hpp"

namespace contam {

// Normal-inverse-gamma parameter record: beta | sigma ~ N(mu, sigma^2 L^-1)
// with L the precision-scale matrix, sigma^2 ~ IG(shape, scale).
struct NigParams {
  Eigen::VectorXd mu;      // p
  Eigen::MatrixXd lambda;  // p x p, symmetric positive definite
  double shape = 1.0;      // > 0
  double scale = 1.0;      // > 0

  int dim() const { return static_cast<int>(mu.size()); }

  /// Throws unless lambda admits a Cholesky factor and shape, scale > 0.
  void validate() const;

  /// Standard prior: mu = 0, lambda = I / C^2, shape = A, scale = B.
  static NigParams standard(int p, double shape_a, double scale_b,
                            double coeff_scale_c);
};

/// Conjugate update for m Gaussian observations ys ~ N(xs beta, sigma^2 I).
/// m = 0 returns the prior unchanged. The updated scale is computed as
/// scale + (|ys - xs mu'|^2 + (mu'-mu)' L (mu'-mu))/2, a sum of nonnegative
/// quadratics, so it stays positive in floating point.
NigParams nig_update(const NigParams& prior, const Eigen::MatrixXd& xs,
                     const Eigen::VectorXd& ys);

/// log of the Gaussian evidence integral(prod_i N(ys_i | xs_i' beta, sigma^2))
/// under the prior; 0 for m = 0.
double log_marginal_likelihood(const NigParams& prior,
                               const Eigen::MatrixXd& xs,
                               const Eigen::VectorXd& ys);

/// Same, reusing an already computed conjugate update for (xs, ys).
double log_marginal_likelihood(const NigParams& prior,
                               const Eigen::MatrixXd& xs,
                               const Eigen::VectorXd& ys,
                               const NigParams& posterior);

/// log density of (beta, sigma) under the NIG law (sigma parameterization,
/// Jacobian included).
double log_nig_density(const NigParams& params, const Eigen::VectorXd& beta,
                       double sigma);

/// One exact draw: precision tau ~ Gamma(shape, rate = scale),
/// sigma = tau^(-1/2), beta ~ N(mu, sigma^2 lambda^-1).
std::pair<Eigen::VectorXd, double> draw_nig(const NigParams& params, Rng& rng);

}  // namespace contam

#endif  // CONTAM_NIG_HPP
