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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "denoise/rng.h"

using denoise::DeriveSeed;
using denoise::Rng;

TEST_SUITE("rng") {

TEST_CASE("same seed yields identical streams") {
  Rng a(1234), b(1234);
  for (int i = 0; i < 100; ++i) CHECK(a.NextU64() == b.NextU64());
}

TEST_CASE("different seeds diverge") {
  Rng a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 64; ++i) equal += a.NextU64() == b.NextU64();
  CHECK(equal == 0);
}

TEST_CASE("doubles live in the unit interval") {
  Rng rng(99);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    double v = rng.NextDouble();
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
  // Mean of n uniforms: sd = 1/sqrt(12n) ~ 0.0009; allow 5 sigma.
  CHECK(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("Uniform respects bounds and mean") {
  Rng rng(7);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    double v = rng.Uniform(-5.0, 20.0);
    REQUIRE(v >= -5.0);
    REQUIRE(v < 20.0);
    sum += v;
  }
  CHECK(std::abs(sum / n - 7.5) < 0.15);
}

TEST_CASE("Below is in range and roughly uniform") {
  Rng rng(42);
  const uint64_t bound = 7;
  std::vector<int> hist(bound, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) {
    uint64_t v = rng.Below(bound);
    REQUIRE(v < bound);
    ++hist[v];
  }
  // Each bucket ~ Binomial(n, 1/7): sd ~ 92.5; allow 5 sigma.
  for (int count : hist) CHECK(std::abs(count - n / 7.0) < 465.0);
}

TEST_CASE("Gaussian has standard moments") {
  Rng rng(5);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    double v = rng.Gaussian();
    sum += v;
    sq += v * v;
  }
  CHECK(std::abs(sum / n) < 0.02);
  CHECK(std::abs(sq / n - 1.0) < 0.03);
}

TEST_CASE("Shuffle is a permutation and seed-stable") {
  std::vector<int> items(50);
  for (int i = 0; i < 50; ++i) items[i] = i;
  std::vector<int> copy = items;
  Rng a(11);
  a.Shuffle(items);
  std::vector<int> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == copy);
  CHECK(items != copy);

  std::vector<int> again(50);
  for (int i = 0; i < 50; ++i) again[i] = i;
  Rng b(11);
  b.Shuffle(again);
  CHECK(again == items);
}

TEST_CASE("DeriveSeed separates streams and indices") {
  uint64_t base = DeriveSeed(1, 100, 0);
  CHECK(base != DeriveSeed(1, 100, 1));
  CHECK(base != DeriveSeed(1, 101, 0));
  CHECK(base != DeriveSeed(2, 100, 0));
  CHECK(base == DeriveSeed(1, 100, 0));
}

}  // TEST_SUITE
