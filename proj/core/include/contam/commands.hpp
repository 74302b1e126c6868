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

#ifndef CONTAM_COMMANDS_HPP
#define CONTAM_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>

#include "contam/experiment_config.hpp"

namespace contam {

// Exit codes shared by the library entry points and the CLI.
inline constexpr int kExitRobust = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNonRobust = 2;
inline constexpr int kExitInconclusive = 3;

/// Prints the robustness verdict with its condition citation and returns
/// the verdict exit code. When out_path is given, also writes a JSON
/// report there.
int cmd_check(const ExperimentConfig& config, std::ostream& out,
              const std::optional<std::string>& out_path = std::nullopt);

/// KL sweep over config.omegas. Writes CSV
///   omega,kl_estimate,kl_se,log10_kl
/// with one row per omega. Output is written to a temp file and renamed,
/// so failures leave no partial file. Returns 0.
int cmd_kl_sweep(const ExperimentConfig& config, const std::string& out_path);

/// Posterior and predictive quantiles over config.xt_grid at the given
/// outlier magnitude (defaults to the last entry of config.omegas).
/// Writes CSV xt2,quantity,level,value with quantity in
/// {linpred, predictive}. Returns 0.
int cmd_predict(const ExperimentConfig& config, const std::string& out_path,
                std::optional<double> omega = std::nullopt);

/// Mixture components at the given outlier magnitude (defaults to the last
/// entry of config.omegas), sorted by descending weight. Writes CSV
///   subset_bitmask,log_weight,shape,scale,mu_1..mu_p.
/// Bit i of subset_bitmask marks 0-based observation i as assigned to the
/// Gaussian component. Returns 0.
int cmd_posterior(const ExperimentConfig& config, const std::string& out_path,
                  std::optional<double> omega = std::nullopt);

/// Writes content to path via a temp file in the same directory plus an
/// atomic rename. Throws std::runtime_error when the path is unwritable.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace contam

#endif  // CONTAM_COMMANDS_HPP
