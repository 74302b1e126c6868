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

#include "contam/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace contam {

void BoundSpec::validate() const {
  if (!(kappa > 0.0 && kappa <= 1.0)) {
    throw std::domain_error("BoundSpec: kappa must be in (0, 1]");
  }
  if (!(nu > 0.0) || !(m > 0.0) || !(m_prime > 0.0)) {
    throw std::domain_error("BoundSpec: nu, M, M' must be positive");
  }
}

LowerBoundCheck check_error_lower_bound(const ErrorDensity& f, double alpha,
                                        double gamma, double m_prime,
                                        std::span<const double> grid) {
  if (grid.empty()) {
    throw std::invalid_argument("check_error_lower_bound: empty grid");
  }
  if (!(m_prime > 0.0)) {
    throw std::domain_error("check_error_lower_bound: M' must be positive");
  }
  if (!(alpha >= 0.0) || !(gamma >= -1.0)) {
    throw std::domain_error(
        "check_error_lower_bound: need alpha >= 0, gamma >= -1");
  }
  double worst_log_ratio = std::numeric_limits<double>::infinity();
  for (double y : grid) {
    if (!std::isfinite(y)) {
      throw std::invalid_argument("check_error_lower_bound: non-finite grid");
    }
    const double ly = std::log1p(std::fabs(y));
    const double log_ratio = f.log_pdf(y) + std::log(m_prime) +
                             (1.0 + alpha) * ly +
                             (1.0 + gamma) * std::log1p(ly);
    worst_log_ratio = std::min(worst_log_ratio, log_ratio);
  }
  // 1e-12 slack admits the exact-equality densities.
  return {worst_log_ratio >= -1e-12, std::exp(worst_log_ratio)};
}

double prior_bound_sup_ratio(double coeff_scale_c, double kappa, double nu,
                             std::span<const double> t_grid) {
  if (!(coeff_scale_c > 0.0)) {
    throw std::domain_error("prior_bound_sup_ratio: C must be positive");
  }
  if (!(kappa > 0.0 && kappa <= 1.0) || !(nu > 0.0)) {
    throw std::domain_error(
        "prior_bound_sup_ratio: need 0 < kappa <= 1 and nu > 0");
  }
  const double log_norm =
      -0.5 * std::log(2.0 * M_PI) - std::log(coeff_scale_c);
  double sup = 0.0;
  for (double t : t_grid) {
    const double at = std::fabs(t);
    const double z = at / coeff_scale_c;
    // Gaussian conditional over the double-sided scaled-beta envelope.
    double log_ratio = log_norm - 0.5 * z * z +
                       (kappa + nu) * std::log1p(at);
    if (kappa < 1.0) {
      if (at == 0.0) continue;  // envelope spikes at 0; ratio vanishes
      log_ratio += (1.0 - kappa) * std::log(at);
    }
    sup = std::max(sup, std::exp(log_ratio));
  }
  return sup;
}

double model1_tail_ratio(double y1, double xb, double sigma, double alpha) {
  if (!(sigma > 0.0)) {
    throw std::domain_error("model1_tail_ratio: sigma must be positive");
  }
  const double num = log_f1_light((y1 - xb) / sigma, alpha);
  const double den = std::log(sigma) + log_f1_light(y1, alpha);
  return std::exp(num - den);
}

std::vector<double> default_bound_grid(double max_abs, int points) {
  if (!(max_abs > 0.0) || points < 2) {
    throw std::invalid_argument("default_bound_grid: bad arguments");
  }
  std::vector<double> grid;
  grid.reserve(2 * points + 1);
  grid.push_back(0.0);
  const double lo = std::log(1e-6);
  const double hi = std::log(max_abs);
  for (int i = 0; i < points; ++i) {
    const double y = std::exp(lo + (hi - lo) * i / (points - 1));
    grid.push_back(y);
    grid.push_back(-y);
  }
  return grid;
}

}  // namespace contam
