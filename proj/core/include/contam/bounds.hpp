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

#ifndef CONTAM_BOUNDS_HPP
#define CONTAM_BOUNDS_HPP

#include <span>
#include <vector>

#include "contam/densities.hpp"

namespace contam {

// Exponent/constant bundle for the prior and error tail bounds. The bound
// constants are existential in the theory; checkers report the empirical
// supremum/infimum instead of asserting a fixed constant.
struct BoundSpec {
  double kappa = 1.0;    // in (0, 1]
  double nu = 1.0;       // > 0
  double m = 1.0;        // prior bound constant M > 0
  double m_prime = 1.0;  // error bound constant M' > 0

  void validate() const;
};

struct LowerBoundCheck {
  bool holds = false;
  // min over the grid of f1(y) * M' * (1+|y|)^(1+alpha) {1+log(1+|y|)}^(1+gamma);
  // the bound holds at a point exactly when this ratio is >= 1.
  double worst_ratio = 0.0;
};

/// Grid check of the error-density lower bound
///   f1(y) >= (1/M') (1+|y|)^(-1-alpha) {1+log(1+|y|)}^(-1-gamma).
/// Equality cases are accepted with 1e-12 slack on the log ratio.
LowerBoundCheck check_error_lower_bound(const ErrorDensity& f, double alpha,
                                        double gamma, double m_prime,
                                        std::span<const double> grid);

/// Grid supremum of the conditional-prior ratio
///   pi(beta|sigma) / prod_k [(1/sigma)(|beta_k|/sigma)^(kappa-1)
///                            (1+|beta_k|/sigma)^(-kappa-nu)]
/// for the Gaussian conditional prior beta|sigma ~ N(0, C^2 sigma^2 I).
/// The ratio is scale invariant, so the grid ranges over t = beta/sigma
/// (one coordinate; the p-dimensional ratio is the product over
/// coordinates). A finite supremum evidences the prior bound with M equal
/// to that supremum.
double prior_bound_sup_ratio(double coeff_scale_c, double kappa, double nu,
                             std::span<const double> t_grid);

/// Non-robustness diagnostic for the plain (non-mixture) regression model:
/// f((y1 - xb)/sigma) / (sigma f(y1)) with f the scaled-beta-tails density.
/// Tends to sigma^alpha as |y1| grows.
double model1_tail_ratio(double y1, double xb, double sigma, double alpha);

/// Default grid for the tail checks: {0} plus log-spaced |y| up to max_abs,
/// both signs. points counts one sign only.
std::vector<double> default_bound_grid(double max_abs = 1e6, int points = 10000);

}  // namespace contam

#endif  // CONTAM_BOUNDS_HPP
