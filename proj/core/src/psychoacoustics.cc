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

#include "denoise/psychoacoustics.h"

#include <cmath>

#include "denoise/errors.h"

namespace denoise {
namespace {

constexpr double kRelFloorDb = -120.0;
constexpr double kDbGrid = 1048576.0;  // 2^20 steps per dB

Vector NormalizeSquareSum(Vector w, double target) {
  double scale = std::sqrt(target / w.squaredNorm());
  return w * scale;
}

}  // namespace

double BinFrequencyHz(int bin, const StftConfig& cfg, int sample_rate_hz) {
  double bin_width = static_cast<double>(sample_rate_hz) / cfg.dft_size;
  // Bin 0 is evaluated at 3/4 of its bin width instead of 0 Hz, where the
  // threshold formula diverges.
  if (bin == 0) return 0.75 * bin_width;
  return bin * bin_width;
}

double AthDb(double fq_hz) {
  if (!(fq_hz > 0.0)) {
    throw NonPositiveFrequency("hearing threshold needs fq > 0");
  }
  double k = fq_hz / 1000.0;
  return 3.64 * std::pow(k, -0.8) -
         6.5 * std::exp(-0.6 * (k - 3.3) * (k - 3.3)) +
         1e-3 * k * k * k * k;
}

double Bark(double fq_hz) {
  double r = fq_hz / 7500.0;
  return 13.0 * std::atan(0.00076 * fq_hz) + 3.5 * std::atan(r * r);
}

Vector AthWeights(const StftConfig& cfg, int sample_rate_hz) {
  const int bins = cfg.bins();
  Vector threshold(bins);
  for (int f = 0; f < bins; ++f) {
    threshold[f] = AthDb(BinFrequencyHz(f, cfg, sample_rate_hz));
  }
  double min = threshold.minCoeff();
  Vector w(bins);
  for (int f = 0; f < bins; ++f) {
    w[f] = 1.0 / (threshold[f] - min + 1.0);
  }
  return NormalizeSquareSum(std::move(w), cfg.dft_size / 2);
}

Vector MaskingWeights(const Vector& clean_magnitude_frame,
                      const StftConfig& cfg, bool invert,
                      int sample_rate_hz) {
  const int bins = cfg.bins();
  if (clean_magnitude_frame.size() != bins) {
    throw DimensionMismatch("magnitude frame does not match config bins");
  }

  // Masker levels in dB relative to the frame peak. The relative form plus
  // quantization keeps every later step bit-identical under input gain.
  Vector level_db(bins);
  double peak = 0.0;
  for (int f = 0; f < bins; ++f) {
    peak = std::max(peak, clean_magnitude_frame[f]);
  }
  if (peak <= 0.0) {
    level_db.setZero();
  } else {
    for (int f = 0; f < bins; ++f) {
      double ratio = clean_magnitude_frame[f] / peak;
      double rel = 20.0 * std::log10(ratio);
      if (!(rel > kRelFloorDb)) rel = kRelFloorDb;
      level_db[f] = std::round(rel * kDbGrid) / kDbGrid;
    }
  }

  Vector bark(bins);
  for (int f = 0; f < bins; ++f) {
    bark[f] = Bark(BinFrequencyHz(f, cfg, sample_rate_hz));
  }

  // Spread each masker across the bark axis and keep the max contribution.
  Vector mth_db(bins);
  for (int j = 0; j < bins; ++j) {
    double best = -1e300;
    for (int i = 0; i < bins; ++i) {
      double delta = bark[j] - bark[i];
      double slope = delta < 0.0 ? 25.0 * delta : -10.0 * delta;
      best = std::max(best, level_db[i] + slope);
    }
    mth_db[j] = best;
  }

  // Scale-to-max-1 then |log10| collapses to |dB distance from max| / 20.
  double max_db = mth_db.maxCoeff();
  Vector w(bins);
  for (int j = 0; j < bins; ++j) {
    w[j] = (max_db - mth_db[j]) / 20.0;
  }
  double min = w.minCoeff();
  for (int j = 0; j < bins; ++j) {
    w[j] = w[j] - min + 1.0;
    if (invert) w[j] = 1.0 / w[j];
  }
  return NormalizeSquareSum(std::move(w), cfg.dft_size / 2);
}

}  // namespace denoise
