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

#include "contam/experiment_config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace contam {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
  if (!obj.is_object()) {
    throw ConfigError(path + ": expected an object");
  }
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError(path + ": unknown field \"" + key + "\"");
    }
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) {
      throw ConfigError(path + ": missing field \"" + key + "\"");
    }
  }
}

double get_number(const json& obj, const std::string& path) {
  if (!obj.is_number()) {
    throw ConfigError(path + ": expected a number");
  }
  return obj.get<double>();
}

std::vector<double> get_number_array(const json& obj, const std::string& path) {
  if (!obj.is_array()) {
    throw ConfigError(path + ": expected an array of numbers");
  }
  std::vector<double> out;
  out.reserve(obj.size());
  for (std::size_t i = 0; i < obj.size(); ++i) {
    out.push_back(get_number(obj[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<double>> get_matrix(const json& obj,
                                            const std::string& path) {
  if (!obj.is_array()) {
    throw ConfigError(path + ": expected an array of rows");
  }
  std::vector<std::vector<double>> out;
  out.reserve(obj.size());
  for (std::size_t i = 0; i < obj.size(); ++i) {
    out.push_back(
        get_number_array(obj[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void validate(const ExperimentConfig& cfg) {
  const auto n = cfg.y.size();
  if (n == 0) throw ConfigError("y: must be nonempty");
  if (cfg.x.size() != n) throw ConfigError("X: row count must match |y|");
  const auto p = cfg.x.front().size();
  for (std::size_t i = 0; i < cfg.x.size(); ++i) {
    if (cfg.x[i].size() != p) {
      throw ConfigError("X[" + std::to_string(i) + "]: ragged row");
    }
  }
  const auto n_out = cfg.outliers.indices.size();
  if (cfg.outliers.a.size() != n_out || cfg.outliers.b.size() != n_out) {
    throw ConfigError("outliers: indices, a, b must have equal length");
  }
  std::set<int> seen;
  for (int idx : cfg.outliers.indices) {
    if (idx < 1 || idx > static_cast<int>(n)) {
      throw ConfigError("outliers.indices: index " + std::to_string(idx) +
                        " outside 1.." + std::to_string(n));
    }
    if (!seen.insert(idx).second) {
      throw ConfigError("outliers.indices: duplicate index " +
                        std::to_string(idx));
    }
  }
  for (double b : cfg.outliers.b) {
    if (b == 0.0) throw ConfigError("outliers.b: slopes must be nonzero");
  }
  if (cfg.omegas.empty()) throw ConfigError("omegas: must be nonempty");
  for (double w : cfg.omegas) {
    if (!(w > 0.0)) throw ConfigError("omegas: values must be positive");
  }
  if (!(cfg.prior.shape_a > 0.0 && cfg.prior.scale_b > 0.0 &&
        cfg.prior.coeff_c > 0.0)) {
    throw ConfigError("prior: A, B, C must be positive");
  }
  if (!(cfg.s > 0.0 && cfg.s < 1.0)) {
    throw ConfigError("s: must lie in (0, 1)");
  }
  if (cfg.error.type == "light") {
    if (!cfg.error.alpha || !(*cfg.error.alpha > 0.0)) {
      throw ConfigError("error.alpha: required and positive for type \"light\"");
    }
    if (cfg.error.gamma) {
      throw ConfigError("error.gamma: not a parameter of type \"light\"");
    }
  } else if (cfg.error.type == "heavy") {
    if (!cfg.error.gamma || !(*cfg.error.gamma > 0.0)) {
      throw ConfigError("error.gamma: required and positive for type \"heavy\"");
    }
    if (cfg.error.alpha) {
      throw ConfigError("error.alpha: not a parameter of type \"heavy\"");
    }
  } else {
    throw ConfigError("error.type: must be \"light\" or \"heavy\"");
  }
  if (cfg.mc_samples < 1) throw ConfigError("mc_samples: must be >= 1");
  for (double l : cfg.quantile_levels) {
    if (!(l > 0.0 && l < 1.0)) {
      throw ConfigError("quantile_levels: values must lie in (0, 1)");
    }
  }
  for (std::size_t i = 0; i < cfg.xt_grid.size(); ++i) {
    if (cfg.xt_grid[i].size() != p) {
      throw ConfigError("xt_grid[" + std::to_string(i) +
                        "]: length must equal the covariate dimension");
    }
  }
}

}  // namespace

RegressionData ExperimentConfig::to_regression_data() const {
  RegressionData data;
  const auto n = static_cast<Eigen::Index>(y.size());
  const auto p = static_cast<Eigen::Index>(x.front().size());
  data.y.resize(n);
  data.x.resize(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    data.y[i] = y[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < p; ++j) {
      data.x(i, j) = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  // JSON indices are 1-based; engine indices are 0-based and sorted.
  std::vector<std::size_t> order(outliers.indices.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return outliers.indices[a] < outliers.indices[b];
  });
  data.outlier_indices.reserve(order.size());
  data.outlier_offset.resize(static_cast<Eigen::Index>(order.size()));
  data.outlier_slope.resize(static_cast<Eigen::Index>(order.size()));
  for (std::size_t k = 0; k < order.size(); ++k) {
    data.outlier_indices.push_back(outliers.indices[order[k]] - 1);
    data.outlier_offset[static_cast<Eigen::Index>(k)] = outliers.a[order[k]];
    data.outlier_slope[static_cast<Eigen::Index>(k)] = outliers.b[order[k]];
  }
  data.validate();
  return data;
}

NigParams ExperimentConfig::to_prior() const {
  return NigParams::standard(static_cast<int>(x.front().size()), prior.shape_a,
                             prior.scale_b, prior.coeff_c);
}

ErrorDensity ExperimentConfig::to_error_density() const {
  return error.type == "light" ? ErrorDensity::scaled_beta_tails(*error.alpha)
                               : ErrorDensity::log_pareto(*error.gamma);
}

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  require_keys(doc, "config",
               {"y", "X", "outliers", "omegas", "prior", "s", "error",
                "mc_samples", "seed", "quantile_levels", "xt_grid"});

  ExperimentConfig cfg;
  cfg.y = get_number_array(doc["y"], "y");
  cfg.x = get_matrix(doc["X"], "X");

  const json& out = doc["outliers"];
  require_keys(out, "outliers", {"indices", "a", "b"});
  if (!out["indices"].is_array()) {
    throw ConfigError("outliers.indices: expected an array");
  }
  for (std::size_t i = 0; i < out["indices"].size(); ++i) {
    const json& v = out["indices"][i];
    if (!v.is_number_integer()) {
      throw ConfigError("outliers.indices[" + std::to_string(i) +
                        "]: expected an integer");
    }
    cfg.outliers.indices.push_back(v.get<int>());
  }
  cfg.outliers.a = get_number_array(out["a"], "outliers.a");
  cfg.outliers.b = get_number_array(out["b"], "outliers.b");

  cfg.omegas = get_number_array(doc["omegas"], "omegas");

  const json& prior = doc["prior"];
  require_keys(prior, "prior", {"A", "B", "C"});
  cfg.prior.shape_a = get_number(prior["A"], "prior.A");
  cfg.prior.scale_b = get_number(prior["B"], "prior.B");
  cfg.prior.coeff_c = get_number(prior["C"], "prior.C");

  cfg.s = get_number(doc["s"], "s");

  const json& err = doc["error"];
  if (!err.is_object()) throw ConfigError("error: expected an object");
  for (const auto& [key, value] : err.items()) {
    if (key != "type" && key != "alpha" && key != "gamma") {
      throw ConfigError("error: unknown field \"" + key + "\"");
    }
  }
  if (!err.contains("type") || !err["type"].is_string()) {
    throw ConfigError("error.type: expected a string");
  }
  cfg.error.type = err["type"].get<std::string>();
  if (err.contains("alpha")) {
    cfg.error.alpha = get_number(err["alpha"], "error.alpha");
  }
  if (err.contains("gamma")) {
    cfg.error.gamma = get_number(err["gamma"], "error.gamma");
  }

  if (!doc["mc_samples"].is_number_integer()) {
    throw ConfigError("mc_samples: expected an integer");
  }
  cfg.mc_samples = doc["mc_samples"].get<int>();
  if (!doc["seed"].is_number_integer() || doc["seed"].get<double>() < 0) {
    throw ConfigError("seed: expected a nonnegative integer");
  }
  cfg.seed = doc["seed"].get<std::uint64_t>();
  cfg.quantile_levels = get_number_array(doc["quantile_levels"], "quantile_levels");
  cfg.xt_grid = get_matrix(doc["xt_grid"], "xt_grid");

  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  json doc;
  doc["y"] = cfg.y;
  doc["X"] = cfg.x;
  doc["outliers"] = {{"indices", cfg.outliers.indices},
                     {"a", cfg.outliers.a},
                     {"b", cfg.outliers.b}};
  doc["omegas"] = cfg.omegas;
  doc["prior"] = {{"A", cfg.prior.shape_a},
                  {"B", cfg.prior.scale_b},
                  {"C", cfg.prior.coeff_c}};
  doc["s"] = cfg.s;
  json err;
  err["type"] = cfg.error.type;
  if (cfg.error.alpha) err["alpha"] = *cfg.error.alpha;
  if (cfg.error.gamma) err["gamma"] = *cfg.error.gamma;
  doc["error"] = err;
  doc["mc_samples"] = cfg.mc_samples;
  doc["seed"] = cfg.seed;
  doc["quantile_levels"] = cfg.quantile_levels;
  doc["xt_grid"] = cfg.xt_grid;
  return doc.dump(2) + "\n";
}

}  // namespace contam
