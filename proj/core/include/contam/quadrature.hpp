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

#ifndef CONTAM_QUADRATURE_HPP
#define CONTAM_QUADRATURE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "contam/densities.hpp"
#include "contam/nig.hpp"
#include "contam/regression_data.hpp"

namespace contam {

// One quadrature axis: points nodes on [lo, hi], evenly spaced either
// directly or in log coordinates (log spacing requires lo > 0).
struct AxisSpec {
  double lo = 0.0;
  double hi = 1.0;
  int points = 64;
  bool log_spaced = false;
};

// Brute-force grid over (beta, sigma) for p <= 2. Deliberately independent
// of the conjugate algebra: this is the validation oracle.
struct GridSpec {
  std::vector<AxisSpec> beta;  // one entry per coordinate, p in {1, 2}
  AxisSpec sigma;

  void validate() const;  // points >= 16 per axis, sigma.lo > 0, p <= 2
};

struct LogIntegral {
  double log_value = 0.0;
  // set when the integrand at the grid boundary is within a factor 1e6 of
  // its interior maximum, i.e. the grid may not bracket the mass
  bool boundary_warning = false;
};

using LogKernel = std::function<double(const Eigen::VectorXd&, double)>;

/// log of the composite-trapezoid integral of exp(log_kernel) over the
/// grid, accumulated by log-sum-exp of weighted log-values.
LogIntegral quadrature_normalizer(const LogKernel& log_kernel,
                                  const GridSpec& grid);

/// Composite-trapezoid value of the KL integral
///   integral exp(log_p) (log_p - log_q).
/// Both inputs must already be normalized densities on the grid.
double quadrature_kl(const LogKernel& log_p, const LogKernel& log_q,
                     const GridSpec& grid);

/// Non-robustness mechanism probe: for each omega, the log-normalizer of
/// the outlier-factor-only kernel
///   pi(beta, sigma) prod_{i in L} [(1-s)/s * N(y_i | x_i' beta, sigma^2)
///                                   / f1(y_i)]
/// with y_i = a_i + b_i omega, integrated on a sigma grid extended to
/// [1e-2, 10 omega] (log spacing). The beta integral runs in the
/// scale-free coordinate t = beta/sigma so a fixed grid resolves every
/// sigma slice; this requires the zero-mean conjugate prior. Returns
/// (omega, log-normalizer) pairs; the sequence diverges in the non-robust
/// regime and stays bounded in the robust one.
std::vector<std::pair<double, double>> normalizer_growth(
    const RegressionData& data, const NigParams& prior, double s,
    const ErrorDensity& error, const std::vector<double>& omegas,
    int beta_points = 241, int sigma_points = 321);

/// Convenience grid for validating posteriors of small cases: beta axes
/// centered at the least-squares fit of the clean observations with
/// half-width 10 prior predictive standard deviations, sigma log-spaced
/// around the prior scale sqrt(scale/shape).
GridSpec posterior_grid(const RegressionData& data, const NigParams& prior,
                        int beta_points = 400, int sigma_points = 400);

}  // namespace contam

#endif  // CONTAM_QUADRATURE_HPP
