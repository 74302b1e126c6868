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

#include "contam/densities.hpp"

#include <cmath>
#include <stdexcept>

#include "contam/numerics.hpp"

namespace contam {

namespace {

void require_finite(double y) {
  if (!std::isfinite(y)) {
    throw std::domain_error("error density: y must be finite");
  }
}

}  // namespace

double log_f1_light(double y, double alpha) {
  require_finite(y);
  if (!(alpha > 0.0)) {
    throw std::domain_error("log_f1_light: alpha must be positive");
  }
  return std::log(alpha / 2.0) - (1.0 + alpha) * std::log1p(std::fabs(y));
}

double log_f1_heavy(double y, double gamma) {
  require_finite(y);
  if (!(gamma > 0.0)) {
    throw std::domain_error("log_f1_heavy: gamma must be positive");
  }
  const double ly = std::log1p(std::fabs(y));
  return std::log(gamma / 2.0) - ly - (1.0 + gamma) * std::log1p(ly);
}

ErrorDensity ErrorDensity::scaled_beta_tails(double alpha) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("ErrorDensity: alpha must be positive");
  }
  return ErrorDensity(ErrorFamily::kScaledBetaTails, alpha);
}

ErrorDensity ErrorDensity::log_pareto(double gamma) {
  if (!(gamma > 0.0)) {
    throw std::domain_error("ErrorDensity: gamma must be positive");
  }
  return ErrorDensity(ErrorFamily::kLogPareto, gamma);
}

double ErrorDensity::log_pdf(double y) const {
  return family_ == ErrorFamily::kScaledBetaTails ? log_f1_light(y, param_)
                                                  : log_f1_heavy(y, param_);
}

double ErrorDensity::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("ErrorDensity::quantile: u must be in (0,1)");
  }
  // Both families fold to one-sided CDF F(y) = 1 - t(y)^(-k) for y >= 0.
  const double v = std::fabs(2.0 * u - 1.0);
  double magnitude;
  if (family_ == ErrorFamily::kScaledBetaTails) {
    magnitude = std::pow(1.0 - v, -1.0 / param_) - 1.0;
  } else {
    const double w = std::pow(1.0 - v, -1.0 / param_);
    magnitude = std::expm1(w - 1.0);
  }
  return u < 0.5 ? -magnitude : magnitude;
}

double ErrorDensity::tail_alpha() const {
  return family_ == ErrorFamily::kScaledBetaTails ? param_ : 0.0;
}

double ErrorDensity::tail_gamma() const {
  return family_ == ErrorFamily::kScaledBetaTails ? -1.0 : param_;
}

double log_prior_nig(const Eigen::VectorXd& beta, double sigma, double shape_a,
                     double scale_b, double coeff_scale_c) {
  if (!(sigma > 0.0)) {
    throw std::domain_error("log_prior_nig: sigma must be positive");
  }
  if (!(shape_a > 0.0 && scale_b > 0.0 && coeff_scale_c > 0.0)) {
    throw std::domain_error("log_prior_nig: A, B, C must be positive");
  }
  const auto p = static_cast<double>(beta.size());
  const double log_sigma = std::log(sigma);
  const double sigma2 = sigma * sigma;
  return std::log(2.0) + shape_a * std::log(scale_b) - log_gamma(shape_a) -
         (2.0 * shape_a + 1.0) * log_sigma - scale_b / sigma2 -
         0.5 * p * std::log(2.0 * M_PI) - p * std::log(coeff_scale_c) -
         p * log_sigma -
         beta.squaredNorm() / (2.0 * coeff_scale_c * coeff_scale_c * sigma2);
}

}  // namespace contam
