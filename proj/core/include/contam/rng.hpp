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

#ifndef CONTAM_RNG_HPP
#define CONTAM_RNG_HPP

#include <cstdint>
#include <random>

namespace contam {

// Seeded generator with explicitly coded variate transforms so that output
// streams are reproducible bit-for-bit for a fixed seed. (The std::
// distribution objects are implementation-defined and would not be.)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  // Independent stream for (seed, stream_index); used for chunked sampling.
  static Rng derive(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1)));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform draw on the open interval (0, 1); consumes one engine word.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; consumes two engine words.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  /// Gamma(shape, rate) by Marsaglia-Tsang squeeze; shape < 1 is boosted
  /// through Gamma(shape + 1) * U^(1/shape).
  double gamma(double shape, double rate);

 private:
  friend std::uint64_t derive_stream_seed(std::uint64_t, std::uint64_t);

  static std::uint64_t mix(std::uint64_t z) {
    // splitmix64 finalizer
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

/// Seed for the stream-th independent substream of seed.
inline std::uint64_t derive_stream_seed(std::uint64_t seed,
                                        std::uint64_t stream) {
  return Rng::mix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

}  // namespace contam

#endif  // CONTAM_RNG_HPP
