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

#include "contam/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

#include "contam/divergence.hpp"
#include "contam/mixture.hpp"
#include "contam/numerics.hpp"
#include "contam/robustness.hpp"

namespace contam {

namespace fs = std::filesystem;

void write_file_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write output file: " + path);
    }
    out << content;
    if (!out.good()) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write failed for output file: " + path);
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place: " + path);
  }
}

namespace {

double resolve_omega(const ExperimentConfig& config,
                     std::optional<double> omega) {
  return omega.value_or(config.omegas.back());
}

RobustnessQuery to_query(const ExperimentConfig& config) {
  if (config.outliers.indices.empty()) {
    throw ConfigError("outliers.indices: check requires at least one outlier");
  }
  return RobustnessQuery{
      InverseGammaPrior{config.prior.shape_a, config.prior.scale_b},
      config.to_error_density(),
      static_cast<int>(config.outliers.indices.size()), std::nullopt};
}

}  // namespace

int cmd_check(const ExperimentConfig& config, std::ostream& out,
              const std::optional<std::string>& out_path) {
  const RobustnessQuery query = to_query(config);
  const RobustnessVerdict verdict = check_robustness(query);
  out << to_string(verdict.verdict) << " (" << verdict.condition << ")\n";
  if (out_path) {
    nlohmann::json report;
    report["verdict"] = to_string(verdict.verdict);
    report["condition"] = verdict.condition;
    report["alpha"] = query.error.tail_alpha();
    report["gamma"] = query.error.tail_gamma();
    report["n_outliers"] = query.n_outliers;
    report["moment_threshold"] = moment_threshold(query.prior);
    report["nu"] = verdict.nu;
    write_file_atomic(*out_path, report.dump(2) + "\n");
  }
  switch (verdict.verdict) {
    case Verdict::kRobust:
      return kExitRobust;
    case Verdict::kNonRobust:
      return kExitNonRobust;
    case Verdict::kInconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_kl_sweep(const ExperimentConfig& config, const std::string& out_path) {
  const RegressionData data = config.to_regression_data();
  const std::vector<KlSweepRow> rows =
      kl_sweep(data, config.to_prior(), config.s, config.to_error_density(),
               config.omegas, config.mc_samples, config.seed);
  std::ostringstream csv;
  csv << "omega,kl_estimate,kl_se,log10_kl\n";
  for (const auto& row : rows) {
    const double kl =
        row.estimate ? row.estimate->value
                     : std::numeric_limits<double>::quiet_NaN();
    const double se =
        row.estimate ? row.estimate->std_error
                     : std::numeric_limits<double>::quiet_NaN();
    const double log10_kl =
        kl > 0.0 ? std::log10(kl) : std::numeric_limits<double>::quiet_NaN();
    csv << format_double(row.omega) << ',' << format_double(kl) << ','
        << format_double(se) << ',' << format_double(log10_kl) << '\n';
  }
  write_file_atomic(out_path, csv.str());
  return 0;
}

int cmd_predict(const ExperimentConfig& config, const std::string& out_path,
                std::optional<double> omega) {
  if (config.xt_grid.empty()) {
    throw ConfigError("xt_grid: must be nonempty for predict");
  }
  if (config.quantile_levels.empty()) {
    throw ConfigError("quantile_levels: must be nonempty for predict");
  }
  const RegressionData data = config.to_regression_data();
  const MixturePosterior mix =
      build_mixture_posterior(data, resolve_omega(config, omega),
                              config.to_prior(), config.s,
                              config.to_error_density());
  std::ostringstream csv;
  csv << "xt2,quantity,level,value\n";
  for (const auto& xt_row : config.xt_grid) {
    Eigen::VectorXd xt(static_cast<Eigen::Index>(xt_row.size()));
    for (std::size_t j = 0; j < xt_row.size(); ++j) {
      xt[static_cast<Eigen::Index>(j)] = xt_row[j];
    }
    const QuantileTable table = predictive_quantiles(
        mix, xt, config.quantile_levels, config.mc_samples, config.seed);
    const std::string xt2 = format_double(xt_row.back());
    for (std::size_t l = 0; l < table.levels.size(); ++l) {
      csv << xt2 << ",linpred," << format_double(table.levels[l]) << ','
          << format_double(table.linear_predictor[l]) << '\n';
    }
    for (std::size_t l = 0; l < table.levels.size(); ++l) {
      csv << xt2 << ",predictive," << format_double(table.levels[l]) << ','
          << format_double(table.predictive[l]) << '\n';
    }
  }
  write_file_atomic(out_path, csv.str());
  return 0;
}

int cmd_posterior(const ExperimentConfig& config, const std::string& out_path,
                  std::optional<double> omega) {
  const RegressionData data = config.to_regression_data();
  const MixturePosterior mix =
      build_mixture_posterior(data, resolve_omega(config, omega),
                              config.to_prior(), config.s,
                              config.to_error_density());
  std::vector<const MixtureComponent*> order;
  order.reserve(mix.components.size());
  for (const auto& c : mix.components) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const MixtureComponent* a, const MixtureComponent* b) {
              if (a->log_weight != b->log_weight) {
                return a->log_weight > b->log_weight;
              }
              return a->subset < b->subset;
            });
  std::ostringstream csv;
  csv << "subset_bitmask,log_weight,shape,scale";
  for (int k = 1; k <= mix.dim; ++k) csv << ",mu_" << k;
  csv << '\n';
  for (const auto* c : order) {
    csv << c->subset << ',' << format_double(c->log_weight) << ','
        << format_double(c->params.shape) << ','
        << format_double(c->params.scale);
    for (int k = 0; k < mix.dim; ++k) {
      csv << ',' << format_double(c->params.mu[k]);
    }
    csv << '\n';
  }
  write_file_atomic(out_path, csv.str());
  return 0;
}

}  // namespace contam
