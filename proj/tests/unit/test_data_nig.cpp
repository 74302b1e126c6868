#include <stdexcept>
#include <cmath>
#include <doctest.h>
#include <random>

#include "contam/densities.hpp"
#include "contam/nig.hpp"
#include "contam/quadrature.hpp"
#include "contam/regression_data.hpp"

using namespace contam;

namespace {

RegressionData section3_data() {
  RegressionData d;
  d.y.resize(5);
  d.y << 1, 2, 3, 4, 0;
  d.x.resize(5, 2);
  d.x << 1, 2 - 1.0 / 3, 1, 2 - 1.0 / 4, 1, 2 - 1.0 / 5, 1, 2 - 1.0 / 6, 1,
      2 - 1.0 / 7;
  d.outlier_indices = {4};
  d.outlier_offset.resize(1);
  d.outlier_offset << 0.0;
  d.outlier_slope.resize(1);
  d.outlier_slope << 1.0;
  return d;
}

}  // namespace

TEST_CASE("materialize_outliers reproduces the experiment schedule") {
  const RegressionData d = section3_data();
  const Eigen::VectorXd y100 = materialize_outliers(d, 100.0);
  Eigen::VectorXd expected(5);
  expected << 1, 2, 3, 4, 100;
  CHECK((y100 - expected).norm() == 0.0);

  RegressionData no_outliers = d;
  no_outliers.outlier_indices.clear();
  no_outliers.outlier_offset.resize(0);
  no_outliers.outlier_slope.resize(0);
  CHECK((materialize_outliers(no_outliers, 12345.0) - d.y).norm() == 0.0);

  RegressionData shifted = d;
  shifted.outlier_offset << 1.0;
  shifted.outlier_slope << -2.0;
  CHECK(materialize_outliers(shifted, 10.0)[4] == -19.0);

  CHECK_THROWS_AS(materialize_outliers(d, 0.0), std::domain_error);
}

TEST_CASE("regression data validation") {
  RegressionData d = section3_data();
  CHECK_NOTHROW(d.validate());
  CHECK(d.clean_indices() == std::vector<int>{0, 1, 2, 3});

  RegressionData rank_deficient = d;
  rank_deficient.x.col(1) = 3.0 * rank_deficient.x.col(0);
  CHECK_THROWS_AS(rank_deficient.validate(), std::invalid_argument);

  RegressionData zero_slope = d;
  zero_slope.outlier_slope << 0.0;
  CHECK_THROWS_AS(zero_slope.validate(), std::invalid_argument);

  RegressionData bad_index = d;
  bad_index.outlier_indices = {5};
  CHECK_THROWS_AS(bad_index.validate(), std::invalid_argument);
}

TEST_CASE("conjugate update with no observations is the identity") {
  const NigParams prior = NigParams::standard(2, 1.3, 0.8, 2.0);
  const Eigen::MatrixXd xs(0, 2);
  const Eigen::VectorXd ys(0);
  const NigParams post = nig_update(prior, xs, ys);
  CHECK((post.mu - prior.mu).norm() == 0.0);
  CHECK((post.lambda - prior.lambda).norm() == 0.0);
  CHECK(post.shape == prior.shape);
  CHECK(post.scale == prior.scale);
  CHECK(log_marginal_likelihood(prior, xs, ys) == 0.0);
}

TEST_CASE("conjugate update: one-observation hand computation") {
  const NigParams prior = NigParams::standard(1, 1.0, 1.0, 1.0);
  Eigen::MatrixXd xs(1, 1);
  xs << 1.0;
  Eigen::VectorXd ys(1);
  ys << 2.0;
  const NigParams post = nig_update(prior, xs, ys);
  CHECK(post.lambda(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(post.mu[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(post.shape == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(post.scale == doctest::Approx(2.0).epsilon(1e-15));

  const double expected = -0.5 * std::log(2.0 * M_PI) + 0.5 * std::log(0.5) -
                          1.5 * std::log(2.0) + std::lgamma(1.5);
  CHECK(log_marginal_likelihood(prior, xs, ys) ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("update rejects observations beyond double range") {
  const NigParams prior = NigParams::standard(1, 1.0, 1.0, 1.0);
  Eigen::MatrixXd xs(1, 1);
  xs << 1.0;
  Eigen::VectorXd ys(1);
  ys << 1e300;  // squared residual overflows
  CHECK_THROWS_AS(nig_update(prior, xs, ys), std::runtime_error);
}

TEST_CASE("posterior scale stays positive on noiseless data") {
  const NigParams prior = NigParams::standard(1, 2.0, 1e-6, 10.0);
  const int n = 18;
  Eigen::MatrixXd xs(n, 1);
  Eigen::VectorXd ys(n);
  for (int i = 0; i < n; ++i) {
    xs(i, 0) = 0.1 * (i + 1);
    ys[i] = 3.0 * xs(i, 0);  // exactly on the line
  }
  const NigParams post = nig_update(prior, xs, ys);
  CHECK(post.scale > 0.0);
  CHECK(std::isfinite(log_marginal_likelihood(prior, xs, ys)));
}

TEST_CASE("marginal likelihood against 3-D quadrature, p = 2, m = 3") {
  const NigParams prior = NigParams::standard(2, 1.4, 0.9, 1.2);
  std::mt19937 gen(314);
  std::normal_distribution<double> noise(0.0, 0.7);
  Eigen::MatrixXd xs(3, 2);
  xs << 1.0, 0.4, 1.0, -0.8, 1.0, 1.5;
  Eigen::VectorXd ys(3);
  for (int i = 0; i < 3; ++i) {
    ys[i] = 0.8 + 0.5 * xs(i, 1) + noise(gen);
  }
  const double lml = log_marginal_likelihood(prior, xs, ys);

  const auto log_kernel = [&](const Eigen::VectorXd& beta, double sigma) {
    double v = log_prior_nig(beta, sigma, 1.4, 0.9, 1.2);
    for (int i = 0; i < 3; ++i) {
      const double r = ys[i] - xs.row(i).dot(beta);
      v += -0.5 * std::log(2.0 * M_PI) - std::log(sigma) -
           r * r / (2.0 * sigma * sigma);
    }
    return v;
  };
  GridSpec grid;
  grid.beta = {AxisSpec{-6.0, 8.0, 280, false}, AxisSpec{-6.0, 8.0, 280, false}};
  grid.sigma = AxisSpec{0.03, 30.0, 400, true};
  const LogIntegral z = quadrature_normalizer(log_kernel, grid);
  CHECK_FALSE(z.boundary_warning);
  CHECK(z.log_value == doctest::Approx(lml).epsilon(1e-4));
}

TEST_CASE("posterior density is proportional to prior times likelihood") {
  const NigParams prior = NigParams::standard(2, 1.4, 0.9, 1.2);
  Eigen::MatrixXd xs(3, 2);
  xs << 1.0, 0.4, 1.0, -0.8, 1.0, 1.5;
  Eigen::VectorXd ys(3);
  ys << 1.1, 0.2, 1.9;
  const NigParams post = nig_update(prior, xs, ys);

  const auto log_target = [&](const Eigen::VectorXd& beta, double sigma) {
    double v = log_prior_nig(beta, sigma, 1.4, 0.9, 1.2);
    for (int i = 0; i < 3; ++i) {
      const double r = ys[i] - xs.row(i).dot(beta);
      v += -0.5 * std::log(2.0 * M_PI) - std::log(sigma) -
           r * r / (2.0 * sigma * sigma);
    }
    return v;
  };
  // log-density differences must match: same function up to one constant
  std::mt19937 gen(2718);
  std::uniform_real_distribution<double> db(-2.0, 3.0);
  std::uniform_real_distribution<double> ds(0.3, 4.0);
  Eigen::VectorXd b1(2), b2(2);
  for (int k = 0; k < 20; ++k) {
    b1 << db(gen), db(gen);
    b2 << db(gen), db(gen);
    const double s1 = ds(gen);
    const double s2 = ds(gen);
    const double lhs = log_nig_density(post, b1, s1) - log_nig_density(post, b2, s2);
    const double rhs = log_target(b1, s1) - log_target(b2, s2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("NIG density integrates to 1 (p = 1)") {
  NigParams params = NigParams::standard(1, 2.0, 1.5, 1.0);
  params.mu[0] = 0.7;
  params.lambda(0, 0) = 2.5;
  const auto log_kernel = [&](const Eigen::VectorXd& beta, double sigma) {
    return log_nig_density(params, beta, sigma);
  };
  GridSpec grid;
  grid.beta = {AxisSpec{-17.0, 18.5, 2000, false}};
  grid.sigma = AxisSpec{0.02, 40.0, 900, true};
  const LogIntegral z = quadrature_normalizer(log_kernel, grid);
  CHECK_FALSE(z.boundary_warning);
  CHECK(z.log_value == doctest::Approx(0.0).epsilon(1e-4));
}

TEST_CASE("draw_nig moments") {
  NigParams params;
  params.mu.resize(1);
  params.mu << 1.5;
  params.lambda.resize(1, 1);
  params.lambda << 2.0;
  params.shape = 3.0;
  params.scale = 2.0;
  params.validate();

  Rng rng(555);
  const int n = 200000;
  double sum_b = 0.0, sum_s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto [beta, sigma] = draw_nig(params, rng);
    sum_b += beta[0];
    sum_s2 += sigma * sigma;
  }
  // E[beta] = mu; Var(beta) = E[sigma^2]/lambda = 0.5
  const double se_b = std::sqrt(0.5 / n);
  CHECK(std::fabs(sum_b / n - 1.5) < 4.0 * se_b);
  // E[sigma^2] = scale/(shape-1) = 1, Var(sigma^2) = 1/(shape-2) = 1
  const double se_s2 = std::sqrt(1.0 / n);
  CHECK(std::fabs(sum_s2 / n - 1.0) < 4.0 * se_s2);
}

TEST_CASE("NIG parameter validation") {
  NigParams bad;
  bad.mu.resize(2);
  bad.mu.setZero();
  bad.lambda.resize(2, 2);
  bad.lambda << 1.0, 2.0, 2.0, 1.0;  // indefinite
  CHECK_THROWS_AS(bad.validate(), std::runtime_error);

  NigParams bad_shape = NigParams::standard(1, 1.0, 1.0, 1.0);
  bad_shape.shape = 0.0;
  CHECK_THROWS_AS(bad_shape.validate(), std::invalid_argument);
  CHECK_THROWS_AS(NigParams::standard(1, -1.0, 1.0, 1.0),
                  std::invalid_argument);
}
