// Copyright 2026 The Zenosim Authors
//
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

#pragma once

// Seeded randomness with a fully specified algorithm so that sampled runs
// reproduce bit-for-bit across platforms and standard libraries:
//
//   * engine: std::mt19937_64 (its output sequence is fixed by the standard)
//   * uniform double in [0, 1): (engine() >> 11) * 2^-53
//   * categorical draw: first index k with u * sum(w) < w_0 + ... + w_k
//   * per-shot / per-trajectory seed: base_seed + index * kSeedStride
//     (mod 2^64), kSeedStride = 0x9E3779B97F4A7C15. A unit stride would make
//     base seeds s and s + 1 share all but one trajectory.
//
// std::uniform_real_distribution is deliberately not used; its output is
// implementation-defined.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace zenosim {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Index drawn with probability proportional to `weights` (nonnegative,
  /// not all zero).
  std::size_t categorical(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    const double u = uniform() * total;
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (weights[k] <= 0.0) continue;
      acc += weights[k];
      last_positive = k;
      if (u < acc) return k;
    }
    return last_positive;
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t derived_seed(std::uint64_t base, std::uint64_t index) { return base + index * kSeedStride; }

}  // namespace zenosim
