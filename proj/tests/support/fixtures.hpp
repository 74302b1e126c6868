// Shared test fixtures: the five-point experiment setup and a two-point toy
// problem small enough for quadrature oracles.

#ifndef CONTAM_TESTS_FIXTURES_HPP
#define CONTAM_TESTS_FIXTURES_HPP

#include "contam/densities.hpp"
#include "contam/nig.hpp"
#include "contam/quadrature.hpp"
#include "contam/regression_data.hpp"

namespace contam::testing {

// y = (1, 2, 3, 4, omega), x_i = (1, 2 - 1/(i+2)), outlier at the last
// observation, B = C = 1, s = 1/10.
inline RegressionData section3_data() {
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

inline NigParams section3_prior(double shape_a) {
  return NigParams::standard(2, shape_a, 1.0, 1.0);
}

inline constexpr double kSection3S = 0.1;
inline constexpr double kSection3Alpha = 3.0;
inline constexpr double kSection3Gamma = 1.5;

// n = 2, p = 1 toy: one clean observation and one outlier moving along
// y_2 = -omega.
inline RegressionData toy_data() {
  RegressionData d;
  d.y.resize(2);
  d.y << 1.0, 0.0;
  d.x.resize(2, 1);
  d.x << 1.0, -1.0;
  d.outlier_indices = {1};
  d.outlier_offset.resize(1);
  d.outlier_offset << 0.0;
  d.outlier_slope.resize(1);
  d.outlier_slope << -1.0;
  return d;
}

inline NigParams toy_prior() { return NigParams::standard(1, 2.0, 1.0, 1.0); }

// Grid wide enough for the toy posterior at omega <= 100 (the outlier
// enters as y_2 = -omega with x_2 = -1, so the pulled fit sits near
// beta = omega).
inline GridSpec toy_grid(double omega, int beta_points = 900,
                         int sigma_points = 700) {
  GridSpec g;
  g.beta = {AxisSpec{-3.0 * omega, 3.0 * omega, beta_points, false}};
  g.sigma = AxisSpec{0.01, 30.0 * omega, sigma_points, true};
  return g;
}

}  // namespace contam::testing

#endif  // CONTAM_TESTS_FIXTURES_HPP
