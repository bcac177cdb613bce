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

#include "denoise/noise_estimation.h"

#include <cmath>

#include "denoise/errors.h"

namespace denoise {

MmseNoiseTracker::MmseNoiseTracker(int bins, MmseTrackerConfig cfg)
    : cfg_(cfg),
      prior_snr_linear_(std::pow(10.0, cfg.prior_snr_db / 10.0)),
      noise_psd_(Vector::Zero(bins)),
      smoothed_presence_(Vector::Zero(bins)) {}

const Vector& MmseNoiseTracker::Update(const Vector& power_frame) {
  if (power_frame.size() != noise_psd_.size()) {
    throw DimensionMismatch("power frame does not match tracker bin count");
  }
  if (!initialized_) {
    noise_psd_ = power_frame;
    initialized_ = true;
    return noise_psd_;
  }

  const double xi = prior_snr_linear_;
  const double prior_ratio =
      cfg_.presence_prior / (1.0 - cfg_.presence_prior);
  const double log_one_over_1p_xi = std::log(1.0 / (1.0 + xi));

  for (Eigen::Index f = 0; f < power_frame.size(); ++f) {
    double pow_f = power_frame[f];
    double gamma = pow_f / std::max(noise_psd_[f], 1e-300);
    // Generalized likelihood ratio under the fixed prior SNR model; the
    // exponent is clamped so saturated speech frames cannot overflow.
    double exponent = log_one_over_1p_xi + gamma * xi / (1.0 + xi);
    double glr = prior_ratio * std::exp(std::min(exponent, 200.0));
    double p = glr / (1.0 + glr);

    smoothed_presence_[f] = cfg_.probability_smoothing * smoothed_presence_[f] +
                            (1.0 - cfg_.probability_smoothing) * p;
    if (smoothed_presence_[f] > cfg_.stuck_guard) {
      p = std::min(p, cfg_.stuck_guard);
    }

    double est = p * noise_psd_[f] + (1.0 - p) * pow_f;
    noise_psd_[f] =
        cfg_.psd_smoothing * noise_psd_[f] + (1.0 - cfg_.psd_smoothing) * est;
  }
  return noise_psd_;
}

NoiseEstimate StationaryEstimate(const LogPowerSpectrogram& noisy,
                                 int frame_count) {
  if (frame_count < 1 || noisy.rows() < frame_count) {
    throw TooFewFrames("stationary estimate needs T >= F >= 1");
  }
  Vector mean = noisy.topRows(frame_count).colwise().mean();
  NoiseEstimate est;
  est.mode = NoiseEstimateMode::kStationary;
  est.values = mean.transpose().replicate(noisy.rows(), 1);
  return est;
}

NoiseEstimate RunningEstimate(const Matrix& noisy_power,
                              const MmseTrackerConfig& cfg,
                              double power_floor) {
  const int bins = static_cast<int>(noisy_power.cols());
  MmseNoiseTracker tracker(bins, cfg);
  NoiseEstimate est;
  est.mode = NoiseEstimateMode::kRunning;
  est.values.resize(noisy_power.rows(), bins);
  for (Eigen::Index t = 0; t < noisy_power.rows(); ++t) {
    const Vector& psd = tracker.Update(noisy_power.row(t).transpose());
    for (int f = 0; f < bins; ++f) {
      est.values(t, f) = std::log(std::max(psd[f], power_floor));
    }
  }
  return est;
}

}  // namespace denoise
