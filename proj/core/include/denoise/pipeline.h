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

#ifndef DENOISE_PIPELINE_H_
#define DENOISE_PIPELINE_H_

#include "denoise/audio.h"
#include "denoise/mlp.h"
#include "denoise/noise_estimation.h"
#include "denoise/stft.h"
#include "denoise/types.h"

namespace denoise {

// Input assembly variants: plain context window, context plus stationary
// noise estimate, context plus running per-frame noise estimate.
enum class InputMode {
  kBd,
  kBsd,
  kBed,
};

std::string InputModeName(InputMode mode);
InputMode ParseInputMode(const std::string& name);

enum class LossKind {
  kMse,
  kAth,
  kMasking,
};

std::string LossKindName(LossKind kind);
LossKind ParseLossKind(const std::string& name);

struct FeatureConfig {
  int tau = 5;
  InputMode mode = InputMode::kBd;
  int stationary_frames = 8;
};

// Input width as a function of mode, context radius, and bin count.
int FeatureDim(const FeatureConfig& feat, const StftConfig& stft);

// Frames t-tau..t+tau concatenated, indices clamped to [0, T-1] (edge
// replication). Raises IndexOutOfRange for t outside [0, T).
Vector ExpandContext(const LogPowerSpectrogram& spec, int t, int tau);

// [y || e]: appends the noise-estimate row to the context vector.
Vector Augment(const Vector& y, const Vector& e);

// One training pair per frame: mode-dependent input, clean log-power frame
// as target. In masking mode, mask_weights carries one weight row per frame
// computed from the clean magnitude spectrum (inverted per invert_masking).
// Raises LengthMismatch when the signals disagree in length.
Dataset MakeTrainingPairs(const AudioSignal& clean, const AudioSignal& noisy,
                          const FeatureConfig& feat, const StftConfig& stft,
                          LossKind loss, bool invert_masking = false);

// stft -> log-power -> context (+ estimate) -> normalize -> forward ->
// denormalize -> overlap-add with the noisy phase. Output length equals the
// input length. Raises DimMismatch when the model width does not match the
// mode and SignalTooShort for sub-window input.
AudioSignal Enhance(const MlpModel& model, const AudioSignal& noisy,
                    const FeatureConfig& feat, const StftConfig& stft);

// Classical log-spectral-amplitude baseline: MMSE noise tracking,
// decision-directed a-priori SNR (alpha 0.98, floor -25 dB), gain
// (xi/(1+xi)) exp(E1(nu)/2) floored at 10^(-25/20) and capped at 1.
AudioSignal LogMmseEnhance(const AudioSignal& noisy, const StftConfig& stft);

}  // namespace denoise

#endif  // DENOISE_PIPELINE_H_
