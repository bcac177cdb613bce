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

#include "denoise/stft.h"

#include <cmath>
#include <complex>
#include <vector>

#include "denoise/errors.h"
#include "denoise/fft.h"

namespace denoise {

Vector MakeWindow(WindowKind kind, int length) {
  Vector w(length);
  for (int n = 0; n < length; ++n) {
    double phase = 2.0 * M_PI * n / static_cast<double>(length);
    switch (kind) {
      case WindowKind::kPeriodicHamming:
        w[n] = 0.54 - 0.46 * std::cos(phase);
        break;
      case WindowKind::kPeriodicHann:
        w[n] = 0.5 - 0.5 * std::cos(phase);
        break;
      case WindowKind::kRect:
        w[n] = 1.0;
        break;
    }
  }
  return w;
}

StftResult Stft(const AudioSignal& signal, const StftConfig& cfg) {
  const int len = static_cast<int>(signal.samples.size());
  if (len < cfg.window_len) {
    throw SignalTooShort("signal shorter than one analysis window");
  }
  const int frames = (len - cfg.window_len) / cfg.hop + 1;
  const int bins = cfg.bins();
  const Vector window = MakeWindow(cfg.window_kind, cfg.window_len);

  StftResult result;
  result.magnitude.resize(frames, bins);
  result.phase.resize(frames, bins);

  std::vector<std::complex<double>> buf(cfg.dft_size);
  for (int t = 0; t < frames; ++t) {
    const double* frame = signal.samples.data() + t * cfg.hop;
    for (int n = 0; n < cfg.window_len; ++n) {
      buf[n] = std::complex<double>(frame[n] * window[n], 0.0);
    }
    for (int n = cfg.window_len; n < cfg.dft_size; ++n) {
      buf[n] = std::complex<double>(0.0, 0.0);
    }
    Fft(buf);
    for (int f = 0; f < bins; ++f) {
      result.magnitude(t, f) = std::abs(buf[f]);
      double p = std::atan2(buf[f].imag(), buf[f].real());
      // atan2 can return exactly -pi; phase is kept in (-pi, pi].
      if (p <= -M_PI) p = M_PI;
      result.phase(t, f) = p;
    }
  }
  return result;
}

LogPowerSpectrogram LogPower(const Matrix& magnitude, const StftConfig& cfg) {
  LogPowerSpectrogram out(magnitude.rows(), magnitude.cols());
  for (Eigen::Index t = 0; t < magnitude.rows(); ++t) {
    for (Eigen::Index f = 0; f < magnitude.cols(); ++f) {
      double m = magnitude(t, f);
      out(t, f) = std::log(std::max(m * m, cfg.power_floor));
    }
  }
  return out;
}

AudioSignal Reconstruct(const LogPowerSpectrogram& log_power_est,
                        const PhaseSpectrogram& noisy_phase,
                        const StftConfig& cfg, size_t out_len) {
  if (log_power_est.rows() != noisy_phase.rows() ||
      log_power_est.cols() != noisy_phase.cols()) {
    throw DimensionMismatch("log-power and phase spectrograms disagree");
  }
  if (log_power_est.cols() != cfg.bins()) {
    throw DimensionMismatch("spectrogram bin count does not match config");
  }

  const int frames = static_cast<int>(log_power_est.rows());
  const int bins = cfg.bins();
  const Vector window = MakeWindow(cfg.window_kind, cfg.window_len);
  const size_t span =
      static_cast<size_t>(frames - 1) * cfg.hop + cfg.window_len;

  std::vector<double> acc(span, 0.0);
  std::vector<double> env(span, 0.0);
  std::vector<std::complex<double>> buf(cfg.dft_size);

  for (int t = 0; t < frames; ++t) {
    for (int f = 0; f < bins; ++f) {
      double mag = std::exp(0.5 * log_power_est(t, f));
      double ph = noisy_phase(t, f);
      buf[f] = std::polar(mag, ph);
    }
    // Hermitian symmetry for the real inverse transform.
    for (int f = bins; f < cfg.dft_size; ++f) {
      buf[f] = std::conj(buf[cfg.dft_size - f]);
    }
    Ifft(buf);
    const size_t base = static_cast<size_t>(t) * cfg.hop;
    for (int n = 0; n < cfg.window_len; ++n) {
      acc[base + n] += buf[n].real() * window[n];
      env[base + n] += window[n] * window[n];
    }
  }

  AudioSignal out;
  out.sample_rate_hz = kSampleRateHz;
  out.samples.assign(out_len, 0.0);
  const size_t n = std::min(out_len, span);
  for (size_t i = 0; i < n; ++i) {
    out.samples[i] = acc[i] / std::max(env[i], 1e-8);
  }
  return out;
}

}  // namespace denoise
