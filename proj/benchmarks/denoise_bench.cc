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

#include <benchmark/benchmark.h>

#include "denoise/metrics.h"
#include "denoise/mlp.h"
#include "denoise/pipeline.h"
#include "denoise/psychoacoustics.h"
#include "denoise/rng.h"
#include "denoise/stft.h"
#include "denoise/synth.h"

namespace {

denoise::AudioSignal MakeSpeech(double seconds) {
  return denoise::SynthSpeech(42, seconds);
}

void BM_StftRoundTrip(benchmark::State& state) {
  denoise::StftConfig cfg;
  denoise::AudioSignal sig = MakeSpeech(1.0);
  for (auto _ : state) {
    denoise::StftResult spec = denoise::Stft(sig, cfg);
    denoise::LogPowerSpectrogram lp = denoise::LogPower(spec.magnitude, cfg);
    denoise::AudioSignal out =
        denoise::Reconstruct(lp, spec.phase, cfg, sig.size());
    benchmark::DoNotOptimize(out.samples.data());
  }
}
BENCHMARK(BM_StftRoundTrip);

void BM_MaskingWeights(benchmark::State& state) {
  denoise::StftConfig cfg;
  denoise::AudioSignal sig = MakeSpeech(1.0);
  denoise::StftResult spec = denoise::Stft(sig, cfg);
  denoise::Vector frame = spec.magnitude.row(60).transpose();
  for (auto _ : state) {
    denoise::Vector w = denoise::MaskingWeights(frame, cfg, false);
    benchmark::DoNotOptimize(w.data());
  }
}
BENCHMARK(BM_MaskingWeights);

void BM_MlpMinibatchGrad(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  denoise::StftConfig stft;
  denoise::FeatureConfig feat;
  feat.mode = denoise::InputMode::kBsd;
  const int in_dim = denoise::FeatureDim(feat, stft);
  denoise::MlpModel model = denoise::InitMlp(
      {in_dim, width, width, width, stft.bins()}, 7);
  denoise::Rng rng(11);
  denoise::Matrix x(128, in_dim);
  denoise::Matrix y(128, stft.bins());
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = rng.Gaussian();
  for (Eigen::Index i = 0; i < y.size(); ++i) y.data()[i] = rng.Gaussian();
  for (auto _ : state) {
    denoise::LossGrad g =
        denoise::LossAndGrad(model, x, y, nullptr, 1e-5);
    benchmark::DoNotOptimize(g.loss);
  }
}
BENCHMARK(BM_MlpMinibatchGrad)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_Stoi(benchmark::State& state) {
  denoise::AudioSignal clean = MakeSpeech(1.0);
  denoise::AudioSignal degraded = clean;
  denoise::Rng rng(3);
  for (double& v : degraded.samples) v += 0.01 * rng.Gaussian();
  for (auto _ : state) {
    double d = denoise::Stoi(clean, degraded);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Stoi);

void BM_LogMmseEnhance(benchmark::State& state) {
  denoise::StftConfig cfg;
  denoise::AudioSignal sig = MakeSpeech(1.0);
  denoise::Rng rng(5);
  for (double& v : sig.samples) v += 0.05 * rng.Gaussian();
  for (auto _ : state) {
    denoise::AudioSignal out = denoise::LogMmseEnhance(sig, cfg);
    benchmark::DoNotOptimize(out.samples.data());
  }
}
BENCHMARK(BM_LogMmseEnhance);

}  // namespace

BENCHMARK_MAIN();
