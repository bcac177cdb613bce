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

#include <cmath>

#include <doctest.h>

#include "denoise/errors.h"
#include "denoise/psychoacoustics.h"
#include "denoise/rng.h"
#include "denoise/stft.h"

using denoise::AthDb;
using denoise::AthWeights;
using denoise::Bark;
using denoise::BinFrequencyHz;
using denoise::MaskingWeights;
using denoise::StftConfig;
using denoise::Vector;

namespace {

// Threshold-in-quiet model evaluated independently of the implementation.
double AthReference(double f) {
  double khz = f / 1000.0;
  return 3.64 * std::pow(khz, -0.8) -
         6.5 * std::exp(-0.6 * (khz - 3.3) * (khz - 3.3)) +
         1e-3 * khz * khz * khz * khz;
}

}  // namespace

TEST_SUITE("psychoacoustics") {

TEST_CASE("hearing threshold reference points") {
  CHECK(AthDb(1000.0) == doctest::Approx(3.36906652589534).epsilon(1e-12));
  CHECK(AthDb(100.0) == doctest::Approx(22.9528963516674).epsilon(1e-12));
  CHECK(AthDb(3300.0) == doctest::Approx(-4.98088494400254).epsilon(1e-12));
  CHECK(AthDb(46.875) == doctest::Approx(42.0950666360575).epsilon(1e-12));
  // Coarse sanity against the published approximations.
  CHECK(AthDb(1000.0) == doctest::Approx(3.369).epsilon(1e-3));
  CHECK(AthDb(100.0) == doctest::Approx(22.95).epsilon(1e-3));
  CHECK(AthDb(3300.0) == doctest::Approx(-4.98).epsilon(1e-3));
}

TEST_CASE("hearing threshold matches an independent evaluation everywhere") {
  for (double f = 40.0; f <= 8000.0; f *= 1.07) {
    CHECK(AthDb(f) == doctest::Approx(AthReference(f)).epsilon(1e-12));
  }
}

TEST_CASE("non-positive frequency is rejected") {
  CHECK_THROWS_AS(AthDb(0.0), denoise::NonPositiveFrequency);
  CHECK_THROWS_AS(AthDb(-100.0), denoise::NonPositiveFrequency);
}

TEST_CASE("bark scale reference points and monotonicity") {
  CHECK(Bark(0.0) == 0.0);
  CHECK(Bark(1000.0) == doctest::Approx(8.51053151072199).epsilon(1e-12));
  CHECK(Bark(62.5) == doctest::Approx(0.617279271782405).epsilon(1e-12));
  CHECK(Bark(8000.0) == doctest::Approx(21.2753212879311).epsilon(1e-12));
  StftConfig cfg;
  double prev = -1.0;
  for (int f = 0; f < cfg.bins(); ++f) {
    double b = Bark(f * 16000.0 / cfg.dft_size);
    CHECK(b > prev);
    prev = b;
  }
}

TEST_CASE("bin frequencies: DC evaluated at three quarters of a bin") {
  StftConfig cfg;
  CHECK(BinFrequencyHz(0, cfg) == doctest::Approx(46.875));
  CHECK(BinFrequencyHz(1, cfg) == doctest::Approx(62.5));
  CHECK(BinFrequencyHz(16, cfg) == doctest::Approx(1000.0));
  CHECK(BinFrequencyHz(128, cfg) == doctest::Approx(8000.0));
}

TEST_CASE("hearing-threshold weights: normalized, positive, peaked at 3.3 kHz") {
  StftConfig cfg;
  Vector w = AthWeights(cfg);
  REQUIRE(w.size() == 129);
  CHECK((w.array() > 0.0).all());
  CHECK(w.allFinite());
  CHECK(w.squaredNorm() == doctest::Approx(128.0).epsilon(1e-12));

  int argmax = 0;
  w.maxCoeff(&argmax);
  // 3312.5 Hz (bin 53) is the sampled frequency nearest the 3.3 kHz dip.
  CHECK(argmax == 53);
}

TEST_CASE("hearing-threshold weights match brute-force recomputation") {
  StftConfig cfg;
  Vector w = AthWeights(cfg);
  Vector t(129);
  for (int f = 0; f < 129; ++f) {
    double hz = f == 0 ? 0.75 * (16000.0 / 256.0) : f * 16000.0 / 256.0;
    t[f] = AthReference(hz);
  }
  Vector raw = (t.array() - t.minCoeff() + 1.0).inverse();
  Vector expect = raw * std::sqrt(128.0 / raw.squaredNorm());
  for (int f = 0; f < 129; ++f) {
    CHECK(w[f] == doctest::Approx(expect[f]).epsilon(1e-12));
  }
}

TEST_CASE("masking weights: flat frame degenerates to equal weights") {
  StftConfig cfg;
  Vector frame = Vector::Constant(129, 0.37);
  Vector w = MaskingWeights(frame, cfg, false);
  const double expect = std::sqrt(128.0 / 129.0);
  for (int f = 0; f < 129; ++f) {
    CHECK(w[f] == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("masking weights: normalization and positivity on random frames") {
  StftConfig cfg;
  denoise::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Vector frame(129);
    for (int f = 0; f < 129; ++f) frame[f] = std::abs(rng.Gaussian()) + 1e-6;
    for (bool invert : {false, true}) {
      Vector w = MaskingWeights(frame, cfg, invert);
      CHECK((w.array() > 0.0).all());
      CHECK(w.allFinite());
      CHECK(w.squaredNorm() == doctest::Approx(128.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("masking weights: exact gain invariance") {
  StftConfig cfg;
  denoise::Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    Vector frame(129);
    for (int f = 0; f < 129; ++f) frame[f] = std::abs(rng.Gaussian()) + 1e-9;
    Vector base = MaskingWeights(frame, cfg, false);
    for (double c : {0.01, 100.0, 1e6}) {
      Vector scaled = MaskingWeights(frame * c, cfg, false);
      for (int f = 0; f < 129; ++f) CHECK(scaled[f] == base[f]);
    }
  }
}

TEST_CASE("masking threshold spreads 25 dB/bark below and 10 dB/bark above") {
  StftConfig cfg;
  Vector frame = Vector::Constant(129, 1e-9);
  const int tone = 40;
  frame[tone] = 1.0;
  Vector w = MaskingWeights(frame, cfg, false);
  // The tone bin holds the threshold maximum, so its pre-normalization
  // weight is the shifted minimum 1 and mth(f) - mth(tone) recovers as
  // -20 * (w[f]/w[tone] - 1). Near the tone the single masker dominates:
  // the threshold decays 25 dB/bark below it and 10 dB/bark above it.
  auto bark_of = [&](int f) { return Bark(BinFrequencyHz(f, cfg)); };
  for (int f : {tone - 8, tone - 3, tone + 3, tone + 12}) {
    double delta = bark_of(f) - bark_of(tone);
    double expect_mth = delta < 0 ? 25.0 * delta : -10.0 * delta;
    double got_mth = -20.0 * (w[f] / w[tone] - 1.0);
    CHECK(got_mth == doctest::Approx(expect_mth).epsilon(1e-4));
  }
}

TEST_CASE("masking weights: all-zero frame stays defined") {
  StftConfig cfg;
  Vector frame = Vector::Zero(129);
  Vector w = MaskingWeights(frame, cfg, false);
  CHECK(w.allFinite());
  CHECK(w.squaredNorm() == doctest::Approx(128.0).epsilon(1e-9));
}

TEST_CASE("masking weights: inverted mode flips the ordering") {
  StftConfig cfg;
  Vector frame = Vector::Constant(129, 1e-9);
  frame[40] = 1.0;
  Vector plain = MaskingWeights(frame, cfg, false);
  Vector inverted = MaskingWeights(frame, cfg, true);
  // Strongly masked bins get small weight in plain mode, large inverted.
  CHECK(plain[40] == plain.minCoeff());
  CHECK(inverted[40] == inverted.maxCoeff());
}

TEST_CASE("masking weights: frame size must match the bin count") {
  StftConfig cfg;
  Vector frame = Vector::Ones(64);
  CHECK_THROWS_AS(MaskingWeights(frame, cfg, false),
                  denoise::DimensionMismatch);
}

}  // TEST_SUITE
