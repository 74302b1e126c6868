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

#ifndef CONTAM_EXPERIMENT_CONFIG_HPP
#define CONTAM_EXPERIMENT_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contam/densities.hpp"
#include "contam/nig.hpp"
#include "contam/regression_data.hpp"

namespace contam {

// Configuration error with the offending field path (or parse location) in
// the message.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutlierConfig {
  std::vector<int> indices;  // 1-based in the JSON surface
  std::vector<double> a;
  std::vector<double> b;
};

struct PriorConfig {
  double shape_a = 1.0;   // "A"
  double scale_b = 1.0;   // "B"
  double coeff_c = 1.0;   // "C"
};

struct ErrorConfig {
  std::string type;  // "light" | "heavy"
  std::optional<double> alpha;
  std::optional<double> gamma;
};

// One experiment: data, outlier schedule, prior, error model, and the
// Monte Carlo settings. Parsed from a strict JSON document (unknown fields
// rejected).
struct ExperimentConfig {
  std::vector<double> y;
  std::vector<std::vector<double>> x;  // row-major, n rows of p
  OutlierConfig outliers;
  std::vector<double> omegas;
  PriorConfig prior;
  double s = 0.1;
  ErrorConfig error;
  int mc_samples = 1000;
  std::uint64_t seed = 0;
  std::vector<double> quantile_levels;
  std::vector<std::vector<double>> xt_grid;

  RegressionData to_regression_data() const;
  NigParams to_prior() const;
  ErrorDensity to_error_density() const;
};

/// Parses and validates a config document. Dimension inconsistencies,
/// out-of-range values, and unknown fields raise ConfigError naming the
/// field.
ExperimentConfig parse_config(const std::string& json_text);

/// Reads the file and parses it. Parse errors carry the byte position.
ExperimentConfig load_config(const std::string& path);

/// Canonical JSON serialization; parse(serialize(c)) reproduces c exactly.
std::string serialize_config(const ExperimentConfig& config);

}  // namespace contam

#endif  // CONTAM_EXPERIMENT_CONFIG_HPP
