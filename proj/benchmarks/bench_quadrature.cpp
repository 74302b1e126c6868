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

#include <benchmark/benchmark.h>

#include "contam/densities.hpp"
#include "contam/quadrature.hpp"

namespace {

using namespace contam;

void BM_QuadratureNormalizerPrior(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  const auto kernel = [](const Eigen::VectorXd& beta, double sigma) {
    return log_prior_nig(beta, sigma, 2.0, 1.0, 1.0);
  };
  GridSpec grid;
  grid.beta = {AxisSpec{-20.0, 20.0, points, false}};
  grid.sigma = AxisSpec{0.05, 50.0, points, true};
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadrature_normalizer(kernel, grid));
  }
  state.SetItemsProcessed(state.iterations() * points * points);
}
BENCHMARK(BM_QuadratureNormalizerPrior)->Arg(256)->Arg(512)->Arg(1024);

void BM_NormalizerGrowth(benchmark::State& state) {
  RegressionData d;
  d.y.resize(3);
  d.y << 1.0, 2.0, 0.0;
  d.x.resize(3, 1);
  d.x << 1.0, 0.5, -1.0;
  d.outlier_indices = {2};
  d.outlier_offset.resize(1);
  d.outlier_offset << 0.0;
  d.outlier_slope.resize(1);
  d.outlier_slope << 1.0;
  const NigParams prior = NigParams::standard(1, 0.1, 1.0, 1.0);
  const auto err = ErrorDensity::scaled_beta_tails(3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        normalizer_growth(d, prior, 0.1, err, {100.0}, 241, 321));
  }
}
BENCHMARK(BM_NormalizerGrowth);

}  // namespace
