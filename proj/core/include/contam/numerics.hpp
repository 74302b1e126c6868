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

#ifndef CONTAM_NUMERICS_HPP
#define CONTAM_NUMERICS_HPP

#include <span>
#include <string>

namespace contam {

/// log(sum_i exp(v[i])) with max subtraction. Empty input yields -inf.
double log_sum_exp(std::span<const double> values);

/// log(exp(a) + exp(b)); handles -inf arguments.
double log_add_exp(double a, double b);

/// Lanczos approximation of log|Gamma(x)| for x > 0.
/// Relative accuracy is better than 1e-13 on (0, 50].
double log_gamma(double x);

/// Shortest decimal string that round-trips the double exactly.
std::string format_double(double value);

}  // namespace contam

#endif  // CONTAM_NUMERICS_HPP
