// Copyright 2026 The Denoise Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DENOISE_RNG_H_
#define DENOISE_RNG_H_

#include <cstdint>
#include <vector>

namespace denoise {

// splitmix64 finalizer. Also used standalone to derive stream seeds.
uint64_t SplitMix64Scramble(uint64_t x);

// Derives an independent seed from (global seed, stream tag, index). The
// same triple always yields the same seed; artifacts regenerated from a
// manifest therefore never depend on generation order.
uint64_t DeriveSeed(uint64_t global_seed, uint64_t stream, uint64_t index);

// Deterministic 64-bit generator (splitmix64). Hand-rolled rather than the
// standard <random> engines + distributions because distribution output is
// implementation-defined and byte-identical artifacts across toolchains are
// part of the contract.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t NextU64();

  // Uniform on [0, 1) with 53 random bits.
  double NextDouble();

  // Uniform on [lo, hi).
  double Uniform(double lo, double hi);

  // Uniform integer on [0, bound), bound > 0. Rejection sampling, unbiased.
  uint64_t Below(uint64_t bound);

  // Standard normal via Box-Muller; second value of each pair is cached.
  double Gaussian();

  // Fisher-Yates shuffle.
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    if (items.size() < 2) return;
    for (size_t i = items.size() - 1; i > 0; --i) {
      size_t j = static_cast<size_t>(Below(i + 1));
      std::swap(items[i], items[j]);
    }
  }

 private:
  uint64_t state_;
  bool has_cached_gaussian_ = false;
  double cached_gaussian_ = 0.0;
};

}  // namespace denoise

#endif  // DENOISE_RNG_H_
