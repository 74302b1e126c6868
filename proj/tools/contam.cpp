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

// Command-line front end for the contamination-model regression engine:
//   contam check     --config cfg.json [--out report.json]
//   contam kl-sweep  --config cfg.json --out sweep.csv [--seed N]
//   contam predict   --config cfg.json --out bands.csv [--seed N] [--omega W]
//   contam posterior --config cfg.json --out comps.csv [--seed N] [--omega W]

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "contam/commands.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> omega;
};

contam::ExperimentConfig load(const CommonOpts& opts) {
  contam::ExperimentConfig cfg = contam::load_config(opts.config_path);
  if (opts.seed) cfg.seed = *opts.seed;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust Bayesian regression under a contamination likelihood"};
  app.require_subcommand(1);

  CommonOpts check_opts, sweep_opts, predict_opts, posterior_opts;
  std::string check_out;

  auto add_common = [](CLI::App* cmd, CommonOpts& opts, bool out_required) {
    cmd->add_option("--config", opts.config_path, "experiment config (JSON)")
        ->required();
    auto* out = cmd->add_option("--out", opts.out_path, "output file");
    if (out_required) out->required();
    cmd->add_option("--seed", opts.seed, "override the config seed");
  };

  CLI::App* check = app.add_subcommand(
      "check", "decide posterior robustness from the tail conditions");
  add_common(check, check_opts, false);

  CLI::App* sweep = app.add_subcommand(
      "kl-sweep", "KL(clean || full) over the omega grid, as CSV");
  add_common(sweep, sweep_opts, true);

  CLI::App* predict = app.add_subcommand(
      "predict", "posterior and predictive quantile bands, as CSV");
  add_common(predict, predict_opts, true);
  predict->add_option("--omega", predict_opts.omega,
                      "outlier magnitude (default: last config omega)");

  CLI::App* posterior = app.add_subcommand(
      "posterior", "mixture components by descending weight, as CSV");
  add_common(posterior, posterior_opts, true);
  posterior->add_option("--omega", posterior_opts.omega,
                        "outlier magnitude (default: last config omega)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      std::optional<std::string> out;
      if (!check_opts.out_path.empty()) out = check_opts.out_path;
      return contam::cmd_check(load(check_opts), std::cout, out);
    }
    if (sweep->parsed()) {
      return contam::cmd_kl_sweep(load(sweep_opts), sweep_opts.out_path);
    }
    if (predict->parsed()) {
      return contam::cmd_predict(load(predict_opts), predict_opts.out_path,
                                 predict_opts.omega);
    }
    return contam::cmd_posterior(load(posterior_opts),
                                 posterior_opts.out_path,
                                 posterior_opts.omega);
  } catch (const contam::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return contam::kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return contam::kExitError;
  }
}
