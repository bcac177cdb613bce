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

#ifndef DENOISE_NOISE_ESTIMATION_H_
#define DENOISE_NOISE_ESTIMATION_H_

#include "denoise/stft.h"
#include "denoise/types.h"

namespace denoise {

enum class NoiseEstimateMode {
  kStationary,
  kRunning,
};

// Per-frame noise estimate in the log-power domain; the stationary variant
// repeats one row for every frame.
struct NoiseEstimate {
  Matrix values;
  NoiseEstimateMode mode;
};

// Tracker constants: speech-presence probability from a fixed prior SNR
// model gates an exponential smoothing of the noise power.
struct MmseTrackerConfig {
  double prior_snr_db = 15.0;
  double presence_prior = 0.5;
  double psd_smoothing = 0.8;
  double probability_smoothing = 0.9;
  double stuck_guard = 0.99;
};

// Causal MMSE noise PSD tracker. Feed one linear-power frame at a time; the
// first frame initializes the estimate (leading noise assumed).
class MmseNoiseTracker {
 public:
  explicit MmseNoiseTracker(int bins, MmseTrackerConfig cfg = {});

  // Consumes one frame of nonnegative linear power, returns the updated
  // per-bin noise power estimate.
  const Vector& Update(const Vector& power_frame);

  const Vector& estimate() const { return noise_psd_; }

 private:
  MmseTrackerConfig cfg_;
  double prior_snr_linear_;
  bool initialized_ = false;
  Vector noise_psd_;
  Vector smoothed_presence_;
};

// Mean of the first frame_count log-power rows, replicated over all frames.
// Raises TooFewFrames unless T >= frame_count >= 1.
NoiseEstimate StationaryEstimate(const LogPowerSpectrogram& noisy,
                                 int frame_count);

// Runs MmseNoiseTracker over linear-power frames and converts the estimates
// to log-power with the standard floor.
NoiseEstimate RunningEstimate(const Matrix& noisy_power,
                              const MmseTrackerConfig& cfg = {},
                              double power_floor = 1e-10);

}  // namespace denoise

#endif  // DENOISE_NOISE_ESTIMATION_H_
