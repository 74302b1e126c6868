#include <stdexcept>
#include <cmath>
#include <doctest.h>
#include <vector>

#include "contam/bounds.hpp"

using namespace contam;

TEST_CASE("each density meets its own defining bound with ratio exactly 1") {
  const auto grid = default_bound_grid();

  const auto light = ErrorDensity::scaled_beta_tails(3.0);
  const auto light_check =
      check_error_lower_bound(light, 3.0, -1.0, 2.0 / 3.0, grid);
  CHECK(light_check.holds);
  CHECK(light_check.worst_ratio == doctest::Approx(1.0).epsilon(1e-12));

  const auto heavy = ErrorDensity::log_pareto(1.5);
  const auto heavy_check =
      check_error_lower_bound(heavy, 0.0, 1.5, 4.0 / 3.0, grid);
  CHECK(heavy_check.holds);
  CHECK(heavy_check.worst_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("polynomial tails cannot dominate a log-tail bound") {
  const auto light = ErrorDensity::scaled_beta_tails(3.0);
  const auto check =
      check_error_lower_bound(light, 0.0, 1.0, 1.0, default_bound_grid(1e6));
  CHECK_FALSE(check.holds);
  // at |y| = 1e6 the ratio is ~ (1+|y|)^-3 (1+log(1+|y|))^2
  CHECK(check.worst_ratio < 1e-10);
}

TEST_CASE("lower-bound checker input validation") {
  const auto light = ErrorDensity::scaled_beta_tails(3.0);
  CHECK_THROWS_AS(
      check_error_lower_bound(light, 3.0, -1.0, 1.0, std::vector<double>{}),
      std::invalid_argument);
  const std::vector<double> bad{1.0, std::nan("")};
  CHECK_THROWS_AS(check_error_lower_bound(light, 3.0, -1.0, 1.0, bad),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_error_lower_bound(light, -0.1, -1.0, 1.0,
                                          default_bound_grid()),
                  std::domain_error);
}

TEST_CASE("prior bound ratio: analytic maximum for kappa = nu = 1") {
  std::vector<double> grid;
  for (int i = 0; i <= 20000; ++i) {
    grid.push_back(-50.0 + 100.0 * i / 20000.0);
  }
  const double sup = prior_bound_sup_ratio(1.0, 1.0, 1.0, grid);
  // maximize exp(-t^2/2)(1+|t|)^2/sqrt(2 pi): stationary at t = 1
  const double analytic = 4.0 * std::exp(-0.5) / std::sqrt(2.0 * M_PI);
  CHECK(sup == doctest::Approx(analytic).epsilon(1e-6));
  // attained in the interior: the ratio near the grid edge is negligible
  const std::vector<double> edge{49.9, 50.0};
  CHECK(prior_bound_sup_ratio(1.0, 1.0, 1.0, edge) < 1e-100);
}

TEST_CASE("prior bound ratio at the origin for kappa = 1") {
  const std::vector<double> origin{0.0};
  for (double c : {0.5, 1.0, 2.0}) {
    for (double nu : {0.3, 1.0, 4.0}) {
      CHECK(prior_bound_sup_ratio(c, 1.0, nu, origin) ==
            doctest::Approx(1.0 / (std::sqrt(2.0 * M_PI) * c)).epsilon(1e-13));
    }
  }
}

TEST_CASE("prior bound ratio vanishes in the far tail") {
  // Gaussian decays faster than any polynomial envelope
  const std::vector<double> tail{200.0, 500.0, 1000.0};
  CHECK(prior_bound_sup_ratio(1.0, 1.0, 8.0, tail) == 0.0);
  CHECK_THROWS_AS(prior_bound_sup_ratio(1.0, 1.5, 1.0, tail),
                  std::domain_error);
  CHECK_THROWS_AS(prior_bound_sup_ratio(1.0, 0.5, -1.0, tail),
                  std::domain_error);
}

TEST_CASE("model-1 tail ratio tends to sigma^alpha") {
  CHECK(model1_tail_ratio(1e8, 0.0, 2.0, 3.0) ==
        doctest::Approx(8.0).epsilon(1e-5));
  CHECK(model1_tail_ratio(1e8, 0.0, 1.0, 3.0) ==
        doctest::Approx(1.0).epsilon(1e-7));
  // increasing in sigma at fixed large y1
  const double r1 = model1_tail_ratio(1e8, 0.5, 1.0, 3.0);
  const double r2 = model1_tail_ratio(1e8, 0.5, 2.0, 3.0);
  const double r4 = model1_tail_ratio(1e8, 0.5, 4.0, 3.0);
  CHECK(r1 < r2);
  CHECK(r2 < r4);
  // the invariant form
  for (double sigma : {0.5, 2.0, 7.0}) {
    CHECK(model1_tail_ratio(1e8, 0.0, sigma, 3.0) / std::pow(sigma, 3.0) ==
          doctest::Approx(1.0).epsilon(1e-4));
  }
  CHECK_THROWS_AS(model1_tail_ratio(1e8, 0.0, 0.0, 3.0), std::domain_error);
}

TEST_CASE("BoundSpec validation") {
  BoundSpec ok;
  CHECK_NOTHROW(ok.validate());
  BoundSpec bad_kappa{1.5, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(bad_kappa.validate(), std::domain_error);
  BoundSpec bad_nu{0.5, 0.0, 1.0, 1.0};
  CHECK_THROWS_AS(bad_nu.validate(), std::domain_error);
}
