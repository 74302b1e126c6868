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

#include "contam/robustness.hpp"

#include <limits>
#include <stdexcept>

namespace contam {

namespace {

void validate_prior(const PriorFamily& prior) {
  std::visit(
      [](const auto& p) {
        const auto [first, second] = [&p] {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>,
                                       InverseGammaPrior>) {
            return std::pair{p.shape_a, p.scale_b};
          } else if constexpr (std::is_same_v<std::decay_t<decltype(p)>,
                                              GammaPrior>) {
            return std::pair{p.shape_c, p.rate_d};
          } else {
            return std::pair{p.shape_e, p.shape_f};
          }
        }();
        if (!(first > 0.0) || !(second > 0.0)) {
          throw std::domain_error("PriorFamily: hyperparameters must be positive");
        }
      },
      prior);
}

// Table-1 cell text for the family at hand.
std::string condition_text(const PriorFamily& prior, char relation) {
  const char* symbol = std::holds_alternative<InverseGammaPrior>(prior) ? "2A" : "2F";
  return std::string(symbol) + " " + relation + " |L|α";
}

bool polynomial_sigma_tail(const PriorFamily& prior) {
  return !std::holds_alternative<GammaPrior>(prior);
}

}  // namespace

double moment_threshold(const PriorFamily& prior) {
  validate_prior(prior);
  if (const auto* ig = std::get_if<InverseGammaPrior>(&prior)) {
    return 2.0 * ig->shape_a;
  }
  if (std::holds_alternative<GammaPrior>(prior)) {
    return std::numeric_limits<double>::infinity();
  }
  return 2.0 * std::get<ScaledBetaPrior>(prior).shape_f;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kRobust:
      return "Robust";
    case Verdict::kNonRobust:
      return "NonRobust";
    case Verdict::kInconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

RobustnessVerdict check_robustness(const RobustnessQuery& query) {
  if (query.n_outliers < 1) {
    throw std::invalid_argument("check_robustness: need at least one outlier");
  }
  const double alpha = query.error.tail_alpha();
  const double nu = query.nu.value_or(alpha + 1.0);
  if (!(nu > 0.0)) {
    throw std::domain_error("check_robustness: nu must be positive");
  }
  if (!(nu > alpha)) {
    // the sufficient condition is stated for prior-bound exponents
    // exceeding the error tail exponent
    return {Verdict::kInconclusive,
            "prior bound exponent ν ≤ α", nu};
  }
  const double threshold = moment_threshold(query.prior);
  const double outlier_mass = static_cast<double>(query.n_outliers) * alpha;

  if (std::holds_alternative<GammaPrior>(query.prior)) {
    // all sigma moments finite; never satisfies the non-robustness tail bound
    return {Verdict::kRobust, "✓", nu};
  }
  if (outlier_mass < threshold) {
    return {Verdict::kRobust, condition_text(query.prior, '>'), nu};
  }
  if (alpha > 0.0 && polynomial_sigma_tail(query.prior) &&
      outlier_mass > threshold) {
    return {Verdict::kNonRobust, condition_text(query.prior, '<'), nu};
  }
  return {Verdict::kInconclusive, condition_text(query.prior, '='), nu};
}

}  // namespace contam
