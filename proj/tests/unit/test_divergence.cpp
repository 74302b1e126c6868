#include <stdexcept>
#include <cmath>
#include <doctest.h>

#include "contam/divergence.hpp"
#include "contam/numerics.hpp"
#include "contam/quadrature.hpp"
#include "fixtures.hpp"

using namespace contam;
using namespace contam::testing;

TEST_CASE("KL of a posterior against itself is zero draw by draw") {
  const MixturePosterior mix =
      build_mixture_posterior(section3_data(), 100.0, section3_prior(2.0),
                              kSection3S,
                              ErrorDensity::scaled_beta_tails(kSection3Alpha));
  const KlEstimate est = kl_mc(mix, mix, 500, 77);
  CHECK(std::fabs(est.value) <= 1e-12);
  CHECK(est.std_error <= 1e-12);
  CHECK(est.count == 500);
}

TEST_CASE("MC estimate agrees with the quadrature oracle on the toy case") {
  const RegressionData d = toy_data();
  const NigParams prior = toy_prior();
  const double omega = 30.0;
  const auto err = ErrorDensity::scaled_beta_tails(3.0);
  const MixturePosterior p_full =
      build_mixture_posterior(d, omega, prior, 0.1, err);
  const MixturePosterior p_clean =
      build_mixture_posterior(d, omega, prior, 0.1, err, std::vector<int>{0});

  const int count = 10000;
  const KlEstimate mc = kl_mc(p_clean, p_full, count, 2026);
  REQUIRE(mc.std_error > 0.0);

  const auto log_p = [&](const Eigen::VectorXd& beta, double sigma) {
    return log_posterior_density(p_clean, beta, sigma);
  };
  const auto log_q = [&](const Eigen::VectorXd& beta, double sigma) {
    return log_posterior_density(p_full, beta, sigma);
  };
  const double oracle = quadrature_kl(log_p, log_q, toy_grid(omega));
  CHECK(std::fabs(mc.value - oracle) <= 3.0 * mc.std_error);
}

TEST_CASE("sweep with no outliers reports zero divergence") {
  RegressionData d = toy_data();
  d.outlier_indices.clear();
  d.outlier_offset.resize(0);
  d.outlier_slope.resize(0);
  const auto rows = kl_sweep(d, toy_prior(), 0.1,
                             ErrorDensity::scaled_beta_tails(3.0), {100.0},
                             200, 5);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].estimate.has_value());
  CHECK(rows[0].omega == 100.0);
  CHECK(std::fabs(rows[0].estimate->value) <= 1e-12);
}

TEST_CASE("sweep rows are ordered, deterministic, and validated") {
  const RegressionData d = toy_data();
  const std::vector<double> omegas{10.0, 100.0, 1000.0};
  const auto rows = kl_sweep(d, toy_prior(), 0.1,
                             ErrorDensity::scaled_beta_tails(3.0), omegas,
                             300, 11);
  const auto rows2 = kl_sweep(d, toy_prior(), 0.1,
                              ErrorDensity::scaled_beta_tails(3.0), omegas,
                              300, 11);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].omega == omegas[i]);
    REQUIRE(rows[i].estimate.has_value());
    REQUIRE(rows2[i].estimate.has_value());
    CHECK(rows[i].estimate->value == rows2[i].estimate->value);
    CHECK(rows[i].estimate->std_error == rows2[i].estimate->std_error);
  }

  CHECK_THROWS_AS(kl_sweep(d, toy_prior(), 0.1,
                           ErrorDensity::scaled_beta_tails(3.0), {}, 100, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(kl_sweep(d, toy_prior(), 0.1,
                           ErrorDensity::scaled_beta_tails(3.0),
                           {100.0, 10.0}, 100, 1),
                  std::invalid_argument);
}

TEST_CASE("non-finite log-ratios surface as estimator failures") {
  // two single-component posteriors centered 1e200 apart: the quadratic
  // form under the far component overflows to -inf
  NigParams near = NigParams::standard(1, 50.0, 50.0, 1.0);
  NigParams far = near;
  far.mu[0] = 1e200;
  const auto err = ErrorDensity::scaled_beta_tails(3.0);
  const MixturePosterior p_clean{{MixtureComponent{0, 0.0, far}}, 0.1, err, 1};
  const MixturePosterior p_full{{MixtureComponent{0, 0.0, near}}, 0.1, err, 1};
  CHECK_THROWS_AS(kl_mc(p_clean, p_full, 16, 3), EstimatorFailure);
  try {
    kl_mc(p_clean, p_full, 16, 3);
  } catch (const EstimatorFailure& e) {
    CHECK(e.beta().size() == 1);
    CHECK(e.sigma() > 0.0);
  }

  CHECK_THROWS_AS(kl_mc(p_clean, p_full, 1, 3), std::invalid_argument);
  const MixturePosterior p2 =
      build_mixture_posterior(section3_data(), 10.0, section3_prior(2.0),
                              kSection3S,
                              ErrorDensity::scaled_beta_tails(kSection3Alpha));
  CHECK_THROWS_AS(kl_mc(p_clean, p2, 100, 3), std::invalid_argument);
}
