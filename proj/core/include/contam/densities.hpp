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

#ifndef CONTAM_DENSITIES_HPP
#define CONTAM_DENSITIES_HPP

#include <Eigen/Core>

namespace contam {

/// log of the double-sided scaled-beta density
/// (alpha/2) (1 + |y|)^(-1-alpha); polynomial (Student-t-like) tails.
double log_f1_light(double y, double alpha);

/// log of the unfolded log-Pareto density
/// (gamma/2) (1 + |y|)^(-1) {1 + log(1 + |y|)}^(-1-gamma); log-tails heavier
/// than any polynomial power.
double log_f1_heavy(double y, double gamma);

enum class ErrorFamily { kScaledBetaTails, kLogPareto };

// Parameter-free heavy-tailed error component of the contamination
// likelihood. Symmetric; normalized; tail exponents exposed for the
// robustness checker as (alpha, -1) for scaled-beta tails and (0, gamma)
// for log-Pareto.
class ErrorDensity {
 public:
  static ErrorDensity scaled_beta_tails(double alpha);
  static ErrorDensity log_pareto(double gamma);

  ErrorFamily family() const { return family_; }
  double param() const { return param_; }

  double log_pdf(double y) const;

  /// Inverse CDF on u in (0, 1); exact closed form for both families.
  double quantile(double u) const;

  double tail_alpha() const;
  double tail_gamma() const;

 private:
  ErrorDensity(ErrorFamily family, double param)
      : family_(family), param_(param) {}

  ErrorFamily family_;
  double param_;
};

/// log of the normal-inverse-gamma prior density in (beta, sigma):
///   [2 B^A / Gamma(A)] sigma^(-2A-1) exp(-B/sigma^2)
///   * (2 pi)^(-p/2) C^(-p) sigma^(-p) exp(-|beta|^2 / (2 C^2 sigma^2)).
/// The sigma^2 -> sigma Jacobian is already folded in.
double log_prior_nig(const Eigen::VectorXd& beta, double sigma, double shape_a,
                     double scale_b, double coeff_scale_c);

}  // namespace contam

#endif  // CONTAM_DENSITIES_HPP
