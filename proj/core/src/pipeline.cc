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

#include "denoise/pipeline.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "denoise/errors.h"
#include "denoise/psychoacoustics.h"
#include "denoise/special_math.h"

namespace denoise {
namespace {

// Mode-dependent per-frame noise estimate in log-power; empty matrix for BD.
Matrix ModeEstimate(const Matrix& magnitude, const LogPowerSpectrogram& lp,
                    const FeatureConfig& feat, const StftConfig& stft) {
  switch (feat.mode) {
    case InputMode::kBd:
      return Matrix();
    case InputMode::kBsd:
      return StationaryEstimate(lp, feat.stationary_frames).values;
    case InputMode::kBed: {
      Matrix power = magnitude.cwiseProduct(magnitude);
      return RunningEstimate(power, MmseTrackerConfig{}, stft.power_floor)
          .values;
    }
  }
  return Matrix();
}

// Rows of mode-dependent network inputs for every frame of the utterance.
Matrix AssembleInputs(const Matrix& magnitude, const LogPowerSpectrogram& lp,
                      const FeatureConfig& feat, const StftConfig& stft) {
  const int frames = static_cast<int>(lp.rows());
  Matrix estimate = ModeEstimate(magnitude, lp, feat, stft);
  Matrix inputs(frames, FeatureDim(feat, stft));
  for (int t = 0; t < frames; ++t) {
    Vector y = ExpandContext(lp, t, feat.tau);
    if (feat.mode != InputMode::kBd) {
      y = Augment(y, estimate.row(t).transpose());
    }
    inputs.row(t) = y.transpose();
  }
  return inputs;
}

}  // namespace

std::string InputModeName(InputMode mode) {
  switch (mode) {
    case InputMode::kBd:
      return "bd";
    case InputMode::kBsd:
      return "bsd";
    case InputMode::kBed:
      return "bed";
  }
  return "bd";
}

InputMode ParseInputMode(const std::string& name) {
  if (name == "bd") return InputMode::kBd;
  if (name == "bsd") return InputMode::kBsd;
  if (name == "bed") return InputMode::kBed;
  throw ConfigError("unknown input mode '" + name + "'");
}

std::string LossKindName(LossKind kind) {
  switch (kind) {
    case LossKind::kMse:
      return "mse";
    case LossKind::kAth:
      return "ath";
    case LossKind::kMasking:
      return "masking";
  }
  return "mse";
}

LossKind ParseLossKind(const std::string& name) {
  if (name == "mse") return LossKind::kMse;
  if (name == "ath") return LossKind::kAth;
  if (name == "masking") return LossKind::kMasking;
  throw ConfigError("unknown loss '" + name + "'");
}

int FeatureDim(const FeatureConfig& feat, const StftConfig& stft) {
  int blocks = 2 * feat.tau + 1 + (feat.mode == InputMode::kBd ? 0 : 1);
  return blocks * stft.bins();
}

Vector ExpandContext(const LogPowerSpectrogram& spec, int t, int tau) {
  const int frames = static_cast<int>(spec.rows());
  if (t < 0 || t >= frames) {
    throw IndexOutOfRange("frame index " + std::to_string(t) +
                          " outside [0, " + std::to_string(frames) + ")");
  }
  const int bins = static_cast<int>(spec.cols());
  Vector out((2 * tau + 1) * bins);
  for (int k = -tau; k <= tau; ++k) {
    int src = std::clamp(t + k, 0, frames - 1);
    out.segment(static_cast<Eigen::Index>(k + tau) * bins, bins) =
        spec.row(src).transpose();
  }
  return out;
}

Vector Augment(const Vector& y, const Vector& e) {
  Vector out(y.size() + e.size());
  out.head(y.size()) = y;
  out.tail(e.size()) = e;
  return out;
}

Dataset MakeTrainingPairs(const AudioSignal& clean, const AudioSignal& noisy,
                          const FeatureConfig& feat, const StftConfig& stft,
                          LossKind loss, bool invert_masking) {
  if (clean.samples.size() != noisy.samples.size()) {
    throw LengthMismatch("clean and noisy lengths differ");
  }
  StftResult clean_stft = Stft(clean, stft);
  StftResult noisy_stft = Stft(noisy, stft);
  LogPowerSpectrogram clean_lp = LogPower(clean_stft.magnitude, stft);
  LogPowerSpectrogram noisy_lp = LogPower(noisy_stft.magnitude, stft);

  Dataset set;
  set.inputs = AssembleInputs(noisy_stft.magnitude, noisy_lp, feat, stft);
  set.targets = clean_lp;
  if (loss == LossKind::kMasking) {
    const int frames = static_cast<int>(clean_lp.rows());
    set.mask_weights.resize(frames, stft.bins());
    for (int t = 0; t < frames; ++t) {
      set.mask_weights.row(t) =
          MaskingWeights(clean_stft.magnitude.row(t).transpose(), stft,
                         invert_masking)
              .transpose();
    }
  }
  return set;
}

AudioSignal Enhance(const MlpModel& model, const AudioSignal& noisy,
                    const FeatureConfig& feat, const StftConfig& stft) {
  StftResult noisy_stft = Stft(noisy, stft);
  LogPowerSpectrogram lp = LogPower(noisy_stft.magnitude, stft);
  Matrix inputs = AssembleInputs(noisy_stft.magnitude, lp, feat, stft);
  if (inputs.cols() != model.input_dim()) {
    throw DimMismatch("model expects input dim " +
                      std::to_string(model.input_dim()) + ", mode builds " +
                      std::to_string(inputs.cols()));
  }
  Matrix est = DenormalizeOutputs(
      model.norm, Forward(model, NormalizeInputs(model.norm, inputs)));
  return Reconstruct(est, noisy_stft.phase, stft, noisy.samples.size());
}

AudioSignal LogMmseEnhance(const AudioSignal& noisy, const StftConfig& stft) {
  constexpr double kDdAlpha = 0.98;
  const double xi_floor = std::pow(10.0, -25.0 / 10.0);
  const double gain_floor = std::pow(10.0, -25.0 / 20.0);

  StftResult noisy_stft = Stft(noisy, stft);
  const int frames = static_cast<int>(noisy_stft.magnitude.rows());
  const int bins = stft.bins();

  MmseNoiseTracker tracker(bins);
  Matrix est_lp(frames, bins);
  Vector prev_gain = Vector::Ones(bins);
  Vector prev_gamma = Vector::Ones(bins);

  for (int t = 0; t < frames; ++t) {
    Vector power(bins);
    for (int f = 0; f < bins; ++f) {
      double m = noisy_stft.magnitude(t, f);
      power[f] = m * m;
    }
    const Vector& noise_psd = tracker.Update(power);

    for (int f = 0; f < bins; ++f) {
      double gamma = power[f] / std::max(noise_psd[f], 1e-300);
      // Decision-directed a-priori SNR.
      double xi = kDdAlpha * prev_gain[f] * prev_gain[f] * prev_gamma[f] +
                  (1.0 - kDdAlpha) * std::max(gamma - 1.0, 0.0);
      xi = std::max(xi, xi_floor);

      double nu = std::max(xi * gamma / (1.0 + xi), 1e-10);
      double gain = xi / (1.0 + xi) * std::exp(0.5 * ExpIntE1(nu));
      gain = std::clamp(gain, gain_floor, 1.0);

      double amp = gain * noisy_stft.magnitude(t, f);
      est_lp(t, f) = std::log(std::max(amp * amp, stft.power_floor));
      prev_gain[f] = gain;
      prev_gamma[f] = gamma;
    }
  }
  return Reconstruct(est_lp, noisy_stft.phase, stft, noisy.samples.size());
}

}  // namespace denoise
