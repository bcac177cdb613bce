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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "denoise/errors.h"
#include "denoise/fft.h"
#include "denoise/metrics.h"

namespace denoise {
namespace {

constexpr int kFrameLen = 256;   // 25.6 ms at 10 kHz
constexpr int kFrameHop = 128;
constexpr int kFftSize = 512;
constexpr int kNumBands = 15;
constexpr double kLowestCenterHz = 150.0;
constexpr int kSegmentFrames = 30;  // 384 ms
constexpr double kDynamicRangeDb = 40.0;
constexpr double kBetaDb = -15.0;

// 16 kHz -> 10 kHz windowed-sinc polyphase resampler: rate 5/8, 32 taps
// per output sample, Hann-windowed kernel, per-phase DC normalization.
constexpr int kUp = 5;
constexpr int kDown = 8;
constexpr int kKernelRadius = 16;
constexpr int kTaps = 2 * kKernelRadius;

std::vector<double> Resample16kTo10k(const std::vector<double>& x) {
  static const auto phases = [] {
    // Cutoff at the output Nyquist: 5 kHz = 5/16 cycles per input sample.
    const double fc = 2.0 * 5.0 / 16.0;
    std::array<std::array<double, kTaps>, kUp> h{};
    for (int r = 0; r < kUp; ++r) {
      double sum = 0.0;
      for (int j = 0; j < kTaps; ++j) {
        double t = kKernelRadius - 1 - j + static_cast<double>(r) / kUp;
        double sinc = t == 0.0 ? 1.0 : std::sin(M_PI * fc * t) / (M_PI * t);
        double win = 0.5 * (1.0 + std::cos(M_PI * t / kKernelRadius));
        h[r][j] = (t == 0.0 ? fc : sinc) * win;
        sum += h[r][j];
      }
      for (int j = 0; j < kTaps; ++j) h[r][j] /= sum;
    }
    return h;
  }();

  const int len = static_cast<int>(x.size());
  const int n_out = len * kUp / kDown;
  std::vector<double> y(n_out, 0.0);
  for (int n = 0; n < n_out; ++n) {
    int num = n * kDown;
    int q = num / kUp;
    int r = num % kUp;
    const auto& taps = phases[r];
    double acc = 0.0;
    for (int j = 0; j < kTaps; ++j) {
      int m = q - kKernelRadius + 1 + j;
      if (m >= 0 && m < len) acc += taps[j] * x[m];
    }
    y[n] = acc;
  }
  return y;
}

// MATLAB-style symmetric Hann without zero endpoints.
std::vector<double> Hanning(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = 0.5 * (1.0 - std::cos(2.0 * M_PI * (i + 1) / (n + 1)));
  }
  return w;
}

// Drops frames more than 40 dB below the loudest clean frame and compacts
// both signals by overlap-adding the kept windowed frames.
void RemoveSilentFrames(std::vector<double>& x, std::vector<double>& y) {
  const std::vector<double> w = Hanning(kFrameLen);
  const int len = static_cast<int>(x.size());
  if (len < kFrameLen) {
    x.clear();
    y.clear();
    return;
  }
  const int frames = (len - kFrameLen) / kFrameHop + 1;

  std::vector<double> energy_db(frames);
  double max_db = -1e300;
  for (int m = 0; m < frames; ++m) {
    double e = 0.0;
    for (int i = 0; i < kFrameLen; ++i) {
      double v = x[m * kFrameHop + i] * w[i];
      e += v * v;
    }
    energy_db[m] = 10.0 * std::log10(e + 1e-300);
    max_db = std::max(max_db, energy_db[m]);
  }

  std::vector<int> kept;
  for (int m = 0; m < frames; ++m) {
    if (energy_db[m] > max_db - kDynamicRangeDb) kept.push_back(m);
  }

  const int n_kept = static_cast<int>(kept.size());
  if (n_kept == 0) {
    x.clear();
    y.clear();
    return;
  }
  std::vector<double> xs((n_kept - 1) * kFrameHop + kFrameLen, 0.0);
  std::vector<double> ys(xs.size(), 0.0);
  for (int j = 0; j < n_kept; ++j) {
    int src = kept[j] * kFrameHop;
    int dst = j * kFrameHop;
    for (int i = 0; i < kFrameLen; ++i) {
      xs[dst + i] += x[src + i] * w[i];
      ys[dst + i] += y[src + i] * w[i];
    }
  }
  x = std::move(xs);
  y = std::move(ys);
}

// One-third-octave band power envelopes: rows are bands, columns frames.
struct BandMatrix {
  std::vector<std::vector<double>> values;  // [band][frame]
  int frames = 0;
};

BandMatrix ThirdOctaveBands(const std::vector<double>& x) {
  const std::vector<double> w = Hanning(kFrameLen);
  const int len = static_cast<int>(x.size());
  const int frames =
      len < kFrameLen ? 0 : (len - kFrameLen) / kFrameHop + 1;
  const int bins = kFftSize / 2 + 1;

  // Band edges at cf * 2^(+-1/6) around cf = 150 * 2^(k/3); bin i sits at
  // i * 10000 / 512 Hz. Each band takes bins with fl <= f < fr.
  static const auto band_of_bin = [] {
    std::array<int, kFftSize / 2 + 1> map{};
    for (int i = 0; i < kFftSize / 2 + 1; ++i) {
      double f = static_cast<double>(i) * 10000.0 / kFftSize;
      map[i] = -1;
      for (int k = 0; k < kNumBands; ++k) {
        double cf = kLowestCenterHz * std::pow(2.0, k / 3.0);
        if (f >= cf * std::pow(2.0, -1.0 / 6.0) &&
            f < cf * std::pow(2.0, 1.0 / 6.0)) {
          map[i] = k;
          break;
        }
      }
    }
    return map;
  }();

  BandMatrix out;
  out.frames = frames;
  out.values.assign(kNumBands, std::vector<double>(frames, 0.0));

  std::vector<std::complex<double>> buf(kFftSize);
  for (int m = 0; m < frames; ++m) {
    for (int i = 0; i < kFrameLen; ++i) {
      buf[i] = std::complex<double>(x[m * kFrameHop + i] * w[i], 0.0);
    }
    for (int i = kFrameLen; i < kFftSize; ++i) buf[i] = 0.0;
    Fft(buf);
    std::array<double, kNumBands> power{};
    for (int i = 0; i < bins; ++i) {
      int band = band_of_bin[i];
      if (band >= 0) power[band] += std::norm(buf[i]);
    }
    for (int k = 0; k < kNumBands; ++k) {
      out.values[k][m] = std::sqrt(power[k]);
    }
  }
  return out;
}

}  // namespace

double Stoi(const AudioSignal& clean, const AudioSignal& processed) {
  if (clean.samples.size() != processed.samples.size()) {
    throw LengthMismatch("clean and processed lengths differ");
  }

  std::vector<double> x = Resample16kTo10k(clean.samples);
  std::vector<double> y = Resample16kTo10k(processed.samples);
  RemoveSilentFrames(x, y);

  BandMatrix xb = ThirdOctaveBands(x);
  BandMatrix yb = ThirdOctaveBands(y);
  if (xb.frames < kSegmentFrames) {
    throw TooShort("under 384 ms of active speech");
  }

  const double clip_gain = 1.0 + std::pow(10.0, -kBetaDb / 20.0);
  double total = 0.0;
  int count = 0;
  std::array<double, kSegmentFrames> xs{};
  std::array<double, kSegmentFrames> ys{};

  for (int m = kSegmentFrames; m <= xb.frames; ++m) {
    for (int k = 0; k < kNumBands; ++k) {
      double x_energy = 0.0;
      double y_energy = 0.0;
      for (int i = 0; i < kSegmentFrames; ++i) {
        xs[i] = xb.values[k][m - kSegmentFrames + i];
        ys[i] = yb.values[k][m - kSegmentFrames + i];
        x_energy += xs[i] * xs[i];
        y_energy += ys[i] * ys[i];
      }
      // Scale the degraded segment to the clean energy, then clip its
      // per-sample overshoot at the -15 dB SDR bound.
      double alpha =
          y_energy == 0.0 ? 0.0 : std::sqrt(x_energy / y_energy);
      double mx = 0.0;
      double my = 0.0;
      for (int i = 0; i < kSegmentFrames; ++i) {
        ys[i] = std::min(alpha * ys[i], clip_gain * xs[i]);
        mx += xs[i];
        my += ys[i];
      }
      mx /= kSegmentFrames;
      my /= kSegmentFrames;
      double dot = 0.0;
      double nxx = 0.0;
      double nyy = 0.0;
      for (int i = 0; i < kSegmentFrames; ++i) {
        double dx = xs[i] - mx;
        double dy = ys[i] - my;
        dot += dx * dy;
        nxx += dx * dx;
        nyy += dy * dy;
      }
      double denom = std::sqrt(nxx * nyy);
      total += denom == 0.0 ? 0.0 : dot / denom;
      ++count;
    }
  }
  double score = total / count;
  return std::clamp(score, 0.0, 1.0);
}

}  // namespace denoise
