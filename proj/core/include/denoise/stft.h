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

#ifndef DENOISE_STFT_H_
#define DENOISE_STFT_H_

#include <cstddef>
#include <string>

#include "denoise/audio.h"
#include "denoise/types.h"

namespace denoise {

enum class WindowKind {
  kPeriodicHamming,
  kPeriodicHann,
  kRect,
};

// 16 ms window / 8 ms hop at 16 kHz, DFT size equal to the window so the
// bin count is dft_size/2 + 1 = 129.
struct StftConfig {
  int window_len = 256;
  int hop = 128;
  int dft_size = 256;
  WindowKind window_kind = WindowKind::kPeriodicHamming;
  double power_floor = 1e-10;

  int bins() const { return dft_size / 2 + 1; }
};

// Spectrogram matrices are T x (N+1): one row per frame, one column per
// non-negative frequency bin. Log-power entries are ln(max(mag^2, floor));
// phase entries are radians in (-pi, pi].
using LogPowerSpectrogram = Matrix;
using PhaseSpectrogram = Matrix;

Vector MakeWindow(WindowKind kind, int length);

struct StftResult {
  Matrix magnitude;
  PhaseSpectrogram phase;
};

// Frame t covers samples [t*hop, t*hop + window_len); frames are windowed,
// zero-padded to dft_size, and transformed. T = (len - window_len)/hop + 1.
// Raises SignalTooShort when the signal is shorter than one window.
StftResult Stft(const AudioSignal& signal, const StftConfig& cfg);

LogPowerSpectrogram LogPower(const Matrix& magnitude, const StftConfig& cfg);

// Least-squares overlap-add synthesis: magnitude exp(log_power/2) is paired
// with the provided phase, each frame is inverse-transformed, weighted by
// the analysis window, and accumulated; the result is divided by the summed
// squared window envelope (floored at 1e-8) and cut or zero-padded to
// out_len. Raises DimensionMismatch when the two spectrograms disagree.
AudioSignal Reconstruct(const LogPowerSpectrogram& log_power_est,
                        const PhaseSpectrogram& noisy_phase,
                        const StftConfig& cfg, size_t out_len);

}  // namespace denoise

#endif  // DENOISE_STFT_H_
