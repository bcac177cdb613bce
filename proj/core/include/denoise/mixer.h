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

#ifndef DENOISE_MIXER_H_
#define DENOISE_MIXER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "denoise/audio.h"
#include "denoise/rng.h"

namespace denoise {

inline constexpr int kMaxNoisesPerMix = 4;
inline constexpr double kSnrGrid[] = {-5.0, 0.0, 5.0, 10.0, 15.0, 20.0};
inline constexpr int kSnrGridSize = 6;

enum class SplitKind {
  kTrain,
  kValidation,
  kTest,
};

std::string SplitName(SplitKind split);
SplitKind ParseSplit(const std::string& name);

// One corrupted utterance, reproducible from its fields alone.
struct MixSpec {
  std::string clean;
  std::vector<std::string> noises;
  double snr_db = 0.0;
  std::vector<uint64_t> offsets;
  uint64_t seed = 0;
};

struct DatasetManifest {
  std::vector<MixSpec> entries;
  SplitKind split = SplitKind::kTrain;
  uint64_t global_seed = 0;
};

struct MixResult {
  AudioSignal noisy;
  AudioSignal scaled_noise;
};

// Tiles each noise to the clean length starting at its offset (wrap-around),
// sums them with equal unit weights, scales the sum by
// g = sqrt(P_clean / (P_mix * 10^(snr_db/10))) with P the full-utterance
// mean square, and adds it to the clean signal. scaled_noise is returned as
// noisy - clean so the decomposition is exact at the bit level.
MixResult MixWithOffsets(const AudioSignal& clean,
                         const std::vector<AudioSignal>& noises,
                         double snr_db,
                         const std::vector<uint64_t>& offsets);

// Same, drawing one offset per noise from rng (uniform over the noise
// length, in noise order).
MixResult Mix(const AudioSignal& clean,
              const std::vector<AudioSignal>& noises, double snr_db,
              Rng& rng);

// Builds a reproducible manifest. Per entry: clean files cycle round-robin;
// the noise count is uniform on {1..min(4, corpus size)}; noises are drawn
// without replacement; train SNR ~ Uniform(-5, 20) while validation/test
// SNRs cycle the fixed grid; offsets are uniform over each noise length.
// noise_lengths holds the sample count of each noise file, parallel to
// noise_corpus. Raises EmptyCorpus for empty corpora and CountTooSmall when
// a validation/test split cannot cover the whole SNR grid.
DatasetManifest BuildManifest(const std::vector<std::string>& clean_corpus,
                              const std::vector<std::string>& noise_corpus,
                              const std::vector<uint64_t>& noise_lengths,
                              SplitKind split, int count,
                              uint64_t global_seed);

// JSON Lines serialization: one object per entry with fields
// {clean, noises[], snr_db, offsets[], seed}. Split and global seed live in
// the experiment config, not the manifest file.
std::string SerializeManifest(const DatasetManifest& manifest);
DatasetManifest ParseManifest(const std::string& text, SplitKind split,
                              uint64_t global_seed);

void SaveManifest(const DatasetManifest& manifest, const std::string& path);
DatasetManifest LoadManifest(const std::string& path, SplitKind split,
                             uint64_t global_seed);

}  // namespace denoise

#endif  // DENOISE_MIXER_H_
