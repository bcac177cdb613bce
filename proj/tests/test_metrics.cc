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
#include <cstdlib>
#include <string>
#include <vector>

#include <doctest.h>

#include "denoise/errors.h"
#include "denoise/metrics.h"
#include "denoise/mixer.h"
#include "denoise/rng.h"
#include "denoise/synth.h"
#include "test_util.h"

using denoise::AudioSignal;
using denoise::LogPowerSpectrogram;
using denoise::NoiseReduction;
using denoise::SegmentalSnrDb;
using denoise::SpeechDistortion;
using denoise::Stoi;
using denoise::UtteranceMetrics;
using denoise_test::GaussianSignal;

namespace {

LogPowerSpectrogram RandomSpec(int rows, int cols, uint64_t seed) {
  denoise::Rng rng(seed);
  LogPowerSpectrogram m(rows, cols);
  for (int t = 0; t < rows; ++t) {
    for (int f = 0; f < cols; ++f) m(t, f) = rng.Gaussian();
  }
  return m;
}

double NaiveMeanL1(const LogPowerSpectrogram& a, const LogPowerSpectrogram& b) {
  double total = 0.0;
  for (int t = 0; t < a.rows(); ++t) {
    double row = 0.0;
    for (int f = 0; f < a.cols(); ++f) row += std::abs(a(t, f) - b(t, f));
    total += row;
  }
  return total / a.rows();
}

AudioSignal MixAtSnr(const AudioSignal& clean, const AudioSignal& noise,
                     double snr_db) {
  return denoise::MixWithOffsets(clean, {noise}, snr_db, {0}).noisy;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("distortion of a perfect estimate is zero") {
  LogPowerSpectrogram spec = RandomSpec(20, 129, 1);
  CHECK(SpeechDistortion(spec, spec) == 0.0);
  CHECK(NoiseReduction(spec, spec) == 0.0);
}

TEST_CASE("constant offsets count once per bin") {
  LogPowerSpectrogram clean = RandomSpec(10, 129, 2);
  LogPowerSpectrogram est = clean.array() + 1.0;
  CHECK(SpeechDistortion(est, clean) == doctest::Approx(129.0).epsilon(1e-12));
  LogPowerSpectrogram lower = clean.array() - 2.0;
  CHECK(NoiseReduction(lower, clean) == doctest::Approx(258.0).epsilon(1e-12));
}

TEST_CASE("distortion matches a naive double loop") {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    LogPowerSpectrogram a = RandomSpec(17, 129, seed);
    LogPowerSpectrogram b = RandomSpec(17, 129, seed + 100);
    CHECK(SpeechDistortion(a, b) ==
          doctest::Approx(NaiveMeanL1(a, b)).epsilon(1e-12));
    CHECK(NoiseReduction(a, b) ==
          doctest::Approx(NaiveMeanL1(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("distortion rejects mismatched shapes") {
  LogPowerSpectrogram a = RandomSpec(10, 129, 1);
  LogPowerSpectrogram b = RandomSpec(11, 129, 1);
  LogPowerSpectrogram c = RandomSpec(10, 65, 1);
  CHECK_THROWS_AS(SpeechDistortion(a, b), denoise::ShapeMismatch);
  CHECK_THROWS_AS(NoiseReduction(a, c), denoise::ShapeMismatch);
}

TEST_CASE("segmental SNR of an exact copy hits the upper clamp") {
  AudioSignal clean = denoise::SynthSpeech(1, 0.6);
  CHECK(SegmentalSnrDb(clean, clean) == doctest::Approx(35.0).epsilon(1e-12));
}

TEST_CASE("segmental SNR of equal-power noise is near zero") {
  AudioSignal clean = GaussianSignal(32000, 3, 0.1);
  AudioSignal processed = clean;
  denoise::Rng rng(4);
  for (double& v : processed.samples) v += 0.1 * rng.Gaussian();
  CHECK(std::abs(SegmentalSnrDb(clean, processed)) < 0.5);
}

TEST_CASE("per-frame values are clamped to [-10, 35]") {
  // One loud frame, one frame of pure error: mean of 35 and -10.
  AudioSignal clean;
  clean.samples.assign(1024, 0.0);
  AudioSignal processed = clean;
  for (int i = 0; i < 512; ++i) clean.samples[i] = 0.5;
  for (int i = 0; i < 512; ++i) processed.samples[i] = 0.5;
  clean.samples[700] = 0.5;
  processed.samples[700] = 50.0;  // error 2450x the clean energy
  double got = SegmentalSnrDb(clean, processed);
  CHECK(got == doctest::Approx((35.0 - 10.0) / 2.0).epsilon(1e-9));
}

TEST_CASE("silent frames are skipped") {
  AudioSignal clean;
  clean.samples.assign(1536, 0.0);
  AudioSignal processed = clean;
  for (int i = 0; i < 512; ++i) clean.samples[i] = 0.3;
  for (int i = 0; i < 512; ++i) processed.samples[i] = 0.3;
  // Frames 2 and 3 are silent in the clean signal; garbage there must not
  // count.
  for (int i = 512; i < 1536; ++i) processed.samples[i] = 0.9;
  CHECK(SegmentalSnrDb(clean, processed) ==
        doctest::Approx(35.0).epsilon(1e-12));
}

TEST_CASE("all-silent clean input raises") {
  AudioSignal clean;
  clean.samples.assign(2048, 0.0);
  AudioSignal processed = clean;
  CHECK_THROWS_AS(SegmentalSnrDb(clean, processed), denoise::AllSilent);
}

TEST_CASE("segmental SNR rejects length mismatch") {
  AudioSignal a = GaussianSignal(2048, 1);
  AudioSignal b = GaussianSignal(2049, 1);
  CHECK_THROWS_AS(SegmentalSnrDb(a, b), denoise::LengthMismatch);
}

TEST_CASE("intelligibility of the clean signal is one") {
  AudioSignal clean = denoise::SynthSpeech(5, 1.0);
  CHECK(Stoi(clean, clean) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("intelligibility of unrelated noise is low") {
  AudioSignal clean = denoise::SynthSpeech(6, 1.0);
  AudioSignal noise = GaussianSignal(clean.samples.size(), 7, 0.1);
  CHECK(Stoi(clean, noise) < 0.2);
}

TEST_CASE("intelligibility increases with SNR") {
  AudioSignal clean = denoise::SynthSpeech(8, 1.2);
  AudioSignal noise = GaussianSignal(48000, 9, 0.1);
  double at_m5 = Stoi(clean, MixAtSnr(clean, noise, -5.0));
  double at_5 = Stoi(clean, MixAtSnr(clean, noise, 5.0));
  double at_15 = Stoi(clean, MixAtSnr(clean, noise, 15.0));
  CHECK(at_m5 < at_5);
  CHECK(at_5 < at_15);
  CHECK(at_15 < 1.0);
}

TEST_CASE("intelligibility needs enough active speech") {
  AudioSignal clean = GaussianSignal(4000, 10, 0.1);
  AudioSignal other = GaussianSignal(4000, 11, 0.1);
  CHECK_THROWS_AS(Stoi(clean, other), denoise::TooShort);
  AudioSignal a = GaussianSignal(32000, 12, 0.1);
  AudioSignal b = GaussianSignal(31999, 13, 0.1);
  CHECK_THROWS_AS(Stoi(a, b), denoise::LengthMismatch);
}

TEST_CASE("aggregation groups by SNR and mode in first-appearance order") {
  std::vector<UtteranceMetrics> rows;
  auto push = [&rows](double snr, const std::string& mode, double stoi,
                      double sd, double nr, double seg) {
    UtteranceMetrics u;
    u.utterance_id = "u" + std::to_string(rows.size());
    u.snr_db = snr;
    u.mode = mode;
    u.stoi = stoi;
    u.sd = sd;
    u.nr = nr;
    u.seg_snr_db = seg;
    rows.push_back(u);
  };
  push(5.0, "bd", 0.8, 10.0, 20.0, 3.0);
  push(0.0, "bd", 0.6, 12.0, 24.0, 1.0);
  push(5.0, "bd", 0.9, 14.0, 28.0, 5.0);
  push(5.0, "bsd", 0.7, 11.0, 22.0, 2.0);

  auto agg = denoise::Aggregate(rows);
  REQUIRE(agg.size() == 3);
  CHECK(agg[0].snr_db == 5.0);
  CHECK(agg[0].mode == "bd");
  CHECK(agg[0].count == 2);
  CHECK(agg[0].stoi == doctest::Approx(0.85).epsilon(1e-9));
  CHECK(agg[0].sd == doctest::Approx(12.0).epsilon(1e-9));
  CHECK(agg[0].nr == doctest::Approx(24.0).epsilon(1e-9));
  CHECK(agg[0].seg_snr_db == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(agg[1].snr_db == 0.0);
  CHECK(agg[1].count == 1);
  CHECK(agg[2].mode == "bsd");
}

TEST_CASE("CSV output carries the exact headers") {
  std::vector<UtteranceMetrics> rows(1);
  rows[0].utterance_id = "test_0000";
  rows[0].snr_db = -5.0;
  rows[0].mode = "bed";
  rows[0].stoi = 0.75;
  std::string per = denoise::PerUtteranceCsv(rows);
  CHECK(per.rfind("utterance_id,snr_db,mode,stoi,sd,nr,seg_snr_db\n", 0) == 0);
  CHECK(per.find("test_0000,-5,bed,0.75,0,0,0\n") != std::string::npos);

  std::string agg = denoise::AggregateCsv(denoise::Aggregate(rows));
  CHECK(agg.rfind("snr_db,mode,count,stoi,sd,nr,seg_snr_db\n", 0) == 0);
  CHECK(agg.find("-5,bed,1,0.75,0,0,0\n") != std::string::npos);
}

TEST_CASE("double formatting round-trips") {
  for (double v : {0.0, -5.0, 1.0 / 3.0, 3.369, 1e-10, 12345.678901234567}) {
    CHECK(std::strtod(denoise::FormatDouble(v).c_str(), nullptr) == v);
  }
  CHECK(denoise::FormatDouble(-5.0) == "-5");
  CHECK(denoise::FormatDouble(0.75) == "0.75");
}

TEST_CASE("clean signal evaluated as its own enhancement") {
  denoise::StftConfig stft;
  AudioSignal clean = denoise::SynthSpeech(14, 1.0);
  LogPowerSpectrogram lp =
      denoise::LogPower(denoise::Stft(clean, stft).magnitude, stft);
  CHECK(SpeechDistortion(lp, lp) == 0.0);
  CHECK(Stoi(clean, clean) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(SegmentalSnrDb(clean, clean) == 35.0);
}

}  // TEST_SUITE
