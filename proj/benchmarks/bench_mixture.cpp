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

#include "contam/divergence.hpp"
#include "contam/mixture.hpp"

namespace {

using namespace contam;

// n observations on a noisy line with one outlier; p = 2
RegressionData synthetic_data(int n) {
  RegressionData d;
  d.y.resize(n);
  d.x.resize(n, 2);
  for (int i = 0; i < n; ++i) {
    d.x(i, 0) = 1.0;
    d.x(i, 1) = 0.1 * i;
    d.y[i] = 0.5 + 2.0 * d.x(i, 1) + 0.01 * ((i * 2654435761U) % 97 - 48);
  }
  d.outlier_indices = {n - 1};
  d.outlier_offset.resize(1);
  d.outlier_offset << 0.0;
  d.outlier_slope.resize(1);
  d.outlier_slope << 1.0;
  return d;
}

void BM_BuildMixture(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RegressionData d = synthetic_data(n);
  const NigParams prior = NigParams::standard(2, 2.0, 1.0, 1.0);
  const auto err = ErrorDensity::scaled_beta_tails(3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_mixture_posterior(d, 100.0, prior, 0.1, err));
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(BM_BuildMixture)->DenseRange(5, 14, 3)->Complexity();

void BM_LogPosteriorDensity(benchmark::State& state) {
  const RegressionData d = synthetic_data(static_cast<int>(state.range(0)));
  const NigParams prior = NigParams::standard(2, 2.0, 1.0, 1.0);
  const MixturePosterior mix = build_mixture_posterior(
      d, 100.0, prior, 0.1, ErrorDensity::scaled_beta_tails(3.0));
  Eigen::VectorXd beta(2);
  beta << 0.5, 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_posterior_density(mix, beta, 1.0));
  }
}
BENCHMARK(BM_LogPosteriorDensity)->Arg(5)->Arg(10);

void BM_SamplePosterior(benchmark::State& state) {
  const RegressionData d = synthetic_data(5);
  const NigParams prior = NigParams::standard(2, 2.0, 1.0, 1.0);
  const MixturePosterior mix = build_mixture_posterior(
      d, 100.0, prior, 0.1, ErrorDensity::scaled_beta_tails(3.0));
  const int count = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_posterior(mix, count, seed++));
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_SamplePosterior)->Arg(1000)->Arg(100000);

void BM_KlMc(benchmark::State& state) {
  const RegressionData d = synthetic_data(5);
  const NigParams prior = NigParams::standard(2, 2.0, 1.0, 1.0);
  const auto err = ErrorDensity::scaled_beta_tails(3.0);
  const MixturePosterior p_full =
      build_mixture_posterior(d, 1000.0, prior, 0.1, err);
  const MixturePosterior p_clean = build_mixture_posterior(
      d, 1000.0, prior, 0.1, err, std::vector<int>{0, 1, 2, 3});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kl_mc(p_clean, p_full, 1000, seed++));
  }
}
BENCHMARK(BM_KlMc);

}  // namespace
