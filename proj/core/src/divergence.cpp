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

#include "contam/divergence.hpp"

#include <cmath>
#include <sstream>

#include "contam/parallel.hpp"
#include "contam/rng.hpp"

namespace contam {

KlEstimate kl_mc(const MixturePosterior& p_clean,
                 const MixturePosterior& p_full, int count,
                 std::uint64_t seed) {
  if (p_clean.dim != p_full.dim) {
    throw std::invalid_argument("kl_mc: mixtures must share dimension");
  }
  if (count < 2) {
    throw std::invalid_argument("kl_mc: count must be >= 2");
  }
  const std::vector<PosteriorDraw> draws =
      sample_posterior(p_clean, count, seed);
  std::vector<double> ratios(draws.size());
  std::vector<int> bad(draws.size(), 0);
  parallel_for(draws.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double lc =
          log_posterior_density(p_clean, draws[i].beta, draws[i].sigma);
      const double lf =
          log_posterior_density(p_full, draws[i].beta, draws[i].sigma);
      const double r = lc - lf;
      ratios[i] = r;
      bad[i] = std::isfinite(r) ? 0 : 1;
    }
  });
  for (std::size_t i = 0; i < draws.size(); ++i) {
    if (bad[i]) {
      std::ostringstream msg;
      msg << "kl_mc: non-finite log-ratio at draw " << i
          << " (sigma = " << draws[i].sigma << ")";
      throw EstimatorFailure(msg.str(), draws[i].beta, draws[i].sigma);
    }
  }
  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double ss = 0.0;
  for (double r : ratios) ss += (r - mean) * (r - mean);
  const auto n = static_cast<double>(ratios.size());
  const double sd = std::sqrt(ss / (n - 1.0));
  return KlEstimate{mean, sd / std::sqrt(n), count};
}

std::vector<KlSweepRow> kl_sweep(const RegressionData& data,
                                 const NigParams& prior, double s,
                                 const ErrorDensity& error,
                                 const std::vector<double>& omegas, int count,
                                 std::uint64_t seed) {
  if (omegas.empty()) {
    throw std::invalid_argument("kl_sweep: omegas must be nonempty");
  }
  for (std::size_t i = 1; i < omegas.size(); ++i) {
    if (!(omegas[i] > omegas[i - 1])) {
      throw std::invalid_argument("kl_sweep: omegas must be increasing");
    }
  }
  const std::vector<int> clean = data.clean_indices();
  std::vector<KlSweepRow> rows(omegas.size());
  // Rows are independent; per-row seeds keep the sweep reproducible under
  // any schedule.
  parallel_for(omegas.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      rows[i].omega = omegas[i];
      try {
        const MixturePosterior p_full =
            build_mixture_posterior(data, omegas[i], prior, s, error);
        const MixturePosterior p_clean =
            build_mixture_posterior(data, omegas[i], prior, s, error, clean);
        rows[i].estimate = kl_mc(p_clean, p_full, count,
                                 derive_stream_seed(seed, i));
      } catch (const EstimatorFailure& e) {
        rows[i].failure = e.what();
      }
    }
  });
  return rows;
}

}  // namespace contam
