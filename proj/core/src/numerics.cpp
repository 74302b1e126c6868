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

#include "contam/numerics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace contam {

double log_sum_exp(std::span<const double> values) {
  if (values.empty()) {
    return -std::numeric_limits<double>::infinity();
  }
  const double max_val = *std::max_element(values.begin(), values.end());
  if (!std::isfinite(max_val)) {
    return max_val;  // all -inf, or a +inf/nan poisons the sum
  }
  double sum = 0.0;
  for (double v : values) {
    sum += std::exp(v - max_val);
  }
  return max_val + std::log(sum);
}

double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};
constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

double lanczos_log_gamma(double x) {
  // valid for x >= 0.5
  double acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) {
    acc += kLanczos[k] / (x + k - 1);
  }
  const double t = x + 6.5;
  return kLogSqrtTwoPi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive");
  }
  if (x < 0.5) {
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    return std::log(M_PI / std::sin(M_PI * x)) - lanczos_log_gamma(1.0 - x);
  }
  return lanczos_log_gamma(x);
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace contam
