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

#ifndef DENOISE_SYNTH_H_
#define DENOISE_SYNTH_H_

#include <cstdint>
#include <string>

#include "denoise/audio.h"

namespace denoise {

// Synthetic harmonic "speech": a drifting-pitch impulse train through three
// parallel formant resonators under a syllabic envelope with leading,
// trailing, and mid-utterance silence. Deterministic in the seed.
AudioSignal SynthSpeech(uint64_t seed, double seconds = 1.0);

// Office-like noise textures. The first six are the training set; the last
// two (stationary hiss, periodic bursts) are held out for validation/test.
enum class NoiseKind {
  kHvacRumble,
  kFanMid,
  kPcWhine,
  kTyping,
  kBabbleMod,
  kCopierSweep,
  kAirconHiss,
  kPrinterBurst,
};

inline constexpr NoiseKind kTrainNoiseKinds[] = {
    NoiseKind::kHvacRumble, NoiseKind::kFanMid,      NoiseKind::kPcWhine,
    NoiseKind::kTyping,     NoiseKind::kBabbleMod,   NoiseKind::kCopierSweep,
};
inline constexpr NoiseKind kTestNoiseKinds[] = {
    NoiseKind::kAirconHiss,
    NoiseKind::kPrinterBurst,
};

std::string NoiseKindName(NoiseKind kind);

AudioSignal SynthNoise(NoiseKind kind, uint64_t seed, double seconds = 8.0);

struct CorpusSpec {
  int train_clean = 200;
  int validation_clean = 30;
  int test_clean = 30;
  double speech_seconds = 1.0;
  double noise_seconds = 8.0;
  uint64_t seed = 1;
};

// Writes clean_{train,validation,test} and noise_{train,test} WAV
// directories under root (created if needed).
void WriteCorpus(const std::string& root, const CorpusSpec& spec);

}  // namespace denoise

#endif  // DENOISE_SYNTH_H_
