#include <doctest.h>
#include <fstream>
#include <sstream>

#include "contam/experiment_config.hpp"

using namespace contam;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kConfigDir = CONTAM_CONFIG_DIR;

// minimal valid document used as the mutation base
std::string base_config() {
  return R"({
    "y": [1, 2],
    "X": [[1], [-1]],
    "outliers": {"indices": [2], "a": [0], "b": [1]},
    "omegas": [10, 100],
    "prior": {"A": 2, "B": 1, "C": 1},
    "s": 0.1,
    "error": {"type": "light", "alpha": 3},
    "mc_samples": 100,
    "seed": 5,
    "quantile_levels": [0.5],
    "xt_grid": [[1]]
  })";
}

}  // namespace

TEST_CASE("bundled experiment configs parse and convert") {
  for (const std::string name :
       {"paper_light_a2.json", "paper_light_a01.json", "paper_heavy_a2.json",
        "paper_heavy_a01.json"}) {
    const ExperimentConfig cfg = load_config(kConfigDir + "/" + name);
    CHECK(cfg.y.size() == 5);
    CHECK(cfg.x.front().size() == 2);
    CHECK(cfg.omegas.size() == 5);
    CHECK(cfg.s == 0.1);
    const RegressionData data = cfg.to_regression_data();
    CHECK(data.outlier_indices == std::vector<int>{4});
    CHECK(data.clean_indices() == std::vector<int>{0, 1, 2, 3});
    const NigParams prior = cfg.to_prior();
    CHECK(prior.dim() == 2);
    CHECK(prior.scale == 1.0);
    const ErrorDensity err = cfg.to_error_density();
    if (name.find("light") != std::string::npos) {
      CHECK(err.tail_alpha() == 3.0);
    } else {
      CHECK(err.tail_gamma() == 1.5);
    }
  }
}

TEST_CASE("round trip: parse, serialize, parse is the identity") {
  for (const std::string name :
       {"paper_light_a2.json", "paper_heavy_a01.json", "toy_two_obs.json"}) {
    const ExperimentConfig first = parse_config(read_file(kConfigDir + "/" + name));
    const std::string canonical = serialize_config(first);
    const ExperimentConfig second = parse_config(canonical);
    CHECK(serialize_config(second) == canonical);
    CHECK(second.y == first.y);
    CHECK(second.x == first.x);
    CHECK(second.seed == first.seed);
    CHECK(second.quantile_levels == first.quantile_levels);
  }
}

TEST_CASE("unknown and missing fields are rejected with the field name") {
  auto expect_error = [](std::string doc, const std::string& needle) {
    try {
      parse_config(doc);
      FAIL_CHECK("expected ConfigError containing \"" << needle << "\"");
    } catch (const ConfigError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                    e.what());
    }
  };

  std::string with_unknown = base_config();
  with_unknown.insert(with_unknown.rfind('}'), R"(, "extra": 1)");
  expect_error(with_unknown, "extra");

  std::string bad_prior = base_config();
  bad_prior.replace(bad_prior.find("\"C\": 1"), 6, "\"Z\": 1");
  expect_error(bad_prior, "prior");

  std::string missing = base_config();
  missing.replace(missing.find("\"seed\": 5,"), 10, "");
  expect_error(missing, "seed");

  expect_error("{ not json", "parse error");
}

TEST_CASE("dimension and range validation") {
  auto mutate = [](const std::string& from, const std::string& to) {
    std::string doc = base_config();
    const auto pos = doc.find(from);
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, from.size(), to);
    return doc;
  };
  CHECK_THROWS_AS(parse_config(mutate("\"X\": [[1], [-1]]", "\"X\": [[1]]")),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(mutate("[[1], [-1]]", "[[1], [-1, 2]]")),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(mutate("\"indices\": [2]", "\"indices\": [3]")),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(mutate("\"indices\": [2]", "\"indices\": [0]")),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(mutate("\"b\": [1]", "\"b\": [0]")), ConfigError);
  CHECK_THROWS_AS(parse_config(mutate("\"s\": 0.1", "\"s\": 1.0")), ConfigError);
  CHECK_THROWS_AS(parse_config(mutate("\"mc_samples\": 100", "\"mc_samples\": 0")),
                  ConfigError);
  CHECK_THROWS_AS(
      parse_config(mutate("\"quantile_levels\": [0.5]",
                          "\"quantile_levels\": [1.5]")),
      ConfigError);
  CHECK_THROWS_AS(parse_config(mutate("\"xt_grid\": [[1]]",
                                      "\"xt_grid\": [[1, 2]]")),
                  ConfigError);
  CHECK_THROWS_AS(
      parse_config(mutate("{\"type\": \"light\", \"alpha\": 3}",
                          "{\"type\": \"cauchy\", \"alpha\": 3}")),
      ConfigError);
  CHECK_THROWS_AS(parse_config(mutate("{\"type\": \"light\", \"alpha\": 3}",
                                      "{\"type\": \"light\"}")),
                  ConfigError);
  CHECK_THROWS_AS(
      parse_config(mutate("{\"type\": \"light\", \"alpha\": 3}",
                          "{\"type\": \"light\", \"alpha\": 3, \"gamma\": 1}")),
      ConfigError);
  CHECK_THROWS_AS(parse_config(mutate("\"omegas\": [10, 100]",
                                      "\"omegas\": []")),
                  ConfigError);
  // heavy requires gamma, rejects alpha
  CHECK_NOTHROW(parse_config(mutate("{\"type\": \"light\", \"alpha\": 3}",
                                    "{\"type\": \"heavy\", \"gamma\": 1.5}")));
  CHECK_THROWS_AS(
      parse_config(mutate("{\"type\": \"light\", \"alpha\": 3}",
                          "{\"type\": \"heavy\", \"alpha\": 3}")),
      ConfigError);
}
