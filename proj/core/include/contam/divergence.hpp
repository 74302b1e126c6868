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

#ifndef CONTAM_DIVERGENCE_HPP
#define CONTAM_DIVERGENCE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contam/mixture.hpp"

namespace contam {

// Raw Monte Carlo estimate of KL(p_clean || p_full). The mean is reported
// unclamped; small negative values are legitimate estimator output.
struct KlEstimate {
  double value = 0.0;
  double std_error = 0.0;  // sample sd of log-ratios / sqrt(count)
  int count = 0;
};

// A draw whose log-ratio came out non-finite (density underflow even in log
// space). Carries the offending draw for diagnosis.
class EstimatorFailure : public std::runtime_error {
 public:
  EstimatorFailure(const std::string& what, Eigen::VectorXd beta, double sigma)
      : std::runtime_error(what), beta_(std::move(beta)), sigma_(sigma) {}
  const Eigen::VectorXd& beta() const { return beta_; }
  double sigma() const { return sigma_; }

 private:
  Eigen::VectorXd beta_;
  double sigma_;
};

/// Draws (beta, sigma) ~ p_clean and averages
/// log p_clean(beta, sigma) - log p_full(beta, sigma).
/// Deterministic per seed. Throws EstimatorFailure on a non-finite
/// log-ratio.
KlEstimate kl_mc(const MixturePosterior& p_clean,
                 const MixturePosterior& p_full, int count,
                 std::uint64_t seed);

struct KlSweepRow {
  double omega = 0.0;
  std::optional<KlEstimate> estimate;  // empty on estimator failure
  std::string failure;                 // diagnostic when estimate is empty
};

/// For each omega (ascending): posterior on all observations at
/// materialize_outliers(data, omega) versus posterior restricted to the
/// clean indices; one kl_mc row per omega with a per-row derived seed.
/// Estimator failures are recorded per row without aborting the sweep.
std::vector<KlSweepRow> kl_sweep(const RegressionData& data,
                                 const NigParams& prior, double s,
                                 const ErrorDensity& error,
                                 const std::vector<double>& omegas, int count,
                                 std::uint64_t seed);

}  // namespace contam

#endif  // CONTAM_DIVERGENCE_HPP
