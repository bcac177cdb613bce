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

#include "denoise/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <vector>

#include "denoise/audio_io.h"
#include "denoise/rng.h"

namespace denoise {
namespace {

constexpr double kFs = 16000.0;

// Two-pole resonator y[n] = g x[n] + 2 r cos(w) y[n-1] - r^2 y[n-2].
struct Resonator {
  double b0, a1, a2;
  double y1 = 0.0, y2 = 0.0;

  Resonator(double center_hz, double bandwidth_hz) {
    double r = std::exp(-M_PI * bandwidth_hz / kFs);
    a1 = 2.0 * r * std::cos(2.0 * M_PI * center_hz / kFs);
    a2 = -r * r;
    b0 = 1.0 - r;
  }

  double Step(double x) {
    double y = b0 * x + a1 * y1 + a2 * y2;
    y2 = y1;
    y1 = y;
    return y;
  }
};

struct OnePoleLp {
  double alpha;
  double y = 0.0;
  explicit OnePoleLp(double a) : alpha(a) {}
  double Step(double x) {
    y = alpha * y + (1.0 - alpha) * x;
    return y;
  }
};

void NormalizeRms(std::vector<double>& x, double target) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  double rms = std::sqrt(acc / x.size());
  if (rms <= 0.0) return;
  double g = target / rms;
  for (double& v : x) v *= g;
}

}  // namespace

AudioSignal SynthSpeech(uint64_t seed, double seconds) {
  Rng rng(seed);
  const int n = static_cast<int>(seconds * kFs);

  double f0_base = rng.Uniform(110.0, 200.0);
  double drift_rate = rng.Uniform(0.5, 1.2);
  double drift_phase = rng.Uniform(0.0, 2.0 * M_PI);
  double syllable_rate = rng.Uniform(3.0, 5.0);
  double syllable_phase = rng.Uniform(0.0, 2.0 * M_PI);

  Resonator f1(rng.Uniform(300.0, 800.0), 90.0);
  Resonator f2(rng.Uniform(900.0, 2200.0), 140.0);
  Resonator f3(rng.Uniform(2300.0, 3200.0), 220.0);

  // One mid-utterance pause plus edge silence carve unvoiced stretches.
  double pause_start = rng.Uniform(0.35, 0.6) * seconds;
  double pause_len = rng.Uniform(0.06, 0.12) * seconds;
  double lead = rng.Uniform(0.02, 0.05) * seconds;
  double tail = rng.Uniform(0.02, 0.05) * seconds;

  std::vector<double> out(n, 0.0);
  double phase = 0.0;
  for (int i = 0; i < n; ++i) {
    double t = i / kFs;
    double f0 = f0_base *
                (1.0 + 0.06 * std::sin(2.0 * M_PI * drift_rate * t +
                                       drift_phase));
    phase += f0 / kFs;
    double pulse = 0.0;
    if (phase >= 1.0) {
      phase -= 1.0;
      pulse = 1.0;
    }

    double excitation = pulse + 0.02 * rng.Gaussian();
    double voiced = f1.Step(excitation) + 0.6 * f2.Step(excitation) +
                    0.35 * f3.Step(excitation);

    double syllable =
        0.5 + 0.5 * std::sin(2.0 * M_PI * syllable_rate * t + syllable_phase);
    double env = 0.25 + 0.75 * syllable * syllable;
    if (t < lead || t > seconds - tail ||
        (t >= pause_start && t < pause_start + pause_len)) {
      env = 0.0;
    }
    out[i] = voiced * env;
  }
  NormalizeRms(out, 0.1);

  AudioSignal signal;
  signal.samples = std::move(out);
  return signal;
}

std::string NoiseKindName(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kHvacRumble:
      return "hvac_rumble";
    case NoiseKind::kFanMid:
      return "fan_mid";
    case NoiseKind::kPcWhine:
      return "pc_whine";
    case NoiseKind::kTyping:
      return "typing";
    case NoiseKind::kBabbleMod:
      return "babble_mod";
    case NoiseKind::kCopierSweep:
      return "copier_sweep";
    case NoiseKind::kAirconHiss:
      return "aircon_hiss";
    case NoiseKind::kPrinterBurst:
      return "printer_burst";
  }
  return "noise";
}

AudioSignal SynthNoise(NoiseKind kind, uint64_t seed, double seconds) {
  Rng rng(seed);
  const int n = static_cast<int>(seconds * kFs);
  std::vector<double> out(n, 0.0);

  switch (kind) {
    case NoiseKind::kHvacRumble: {
      OnePoleLp lp1(0.98), lp2(0.97);
      for (int i = 0; i < n; ++i) {
        double t = i / kFs;
        double am = 1.0 + 0.2 * std::sin(2.0 * M_PI * 0.3 * t);
        out[i] = lp2.Step(lp1.Step(rng.Gaussian())) * am;
      }
      break;
    }
    case NoiseKind::kFanMid: {
      Resonator band(420.0, 320.0);
      for (int i = 0; i < n; ++i) {
        double t = i / kFs;
        double hum = 0.15 * std::sin(2.0 * M_PI * 170.0 * t) +
                     0.06 * std::sin(2.0 * M_PI * 340.0 * t);
        out[i] = band.Step(rng.Gaussian()) + hum;
      }
      break;
    }
    case NoiseKind::kPcWhine: {
      OnePoleLp lp(0.4);
      for (int i = 0; i < n; ++i) {
        double t = i / kFs;
        double whine = 0.5 * std::sin(2.0 * M_PI * 2200.0 * t) +
                       0.2 * std::sin(2.0 * M_PI * 4400.0 * t);
        double hiss = rng.Gaussian() - lp.Step(rng.Gaussian());
        out[i] = whine + 0.15 * hiss;
      }
      break;
    }
    case NoiseKind::kTyping: {
      Resonator click(1800.0, 1200.0);
      int next_hit = static_cast<int>(rng.Uniform(0.0, 0.2) * kFs);
      int decay_left = 0;
      double decay = 0.0;
      for (int i = 0; i < n; ++i) {
        double x = 0.004 * rng.Gaussian();
        if (i == next_hit) {
          decay_left = static_cast<int>(rng.Uniform(0.008, 0.02) * kFs);
          decay = 1.0;
          next_hit = i + static_cast<int>(rng.Uniform(0.05, 0.25) * kFs);
        }
        if (decay_left > 0) {
          x += decay * rng.Gaussian();
          decay *= 0.9985;
          --decay_left;
        }
        out[i] = click.Step(x);
      }
      break;
    }
    case NoiseKind::kBabbleMod: {
      Resonator v1(500.0, 250.0), v2(1500.0, 400.0);
      OnePoleLp tilt(0.85);
      for (int i = 0; i < n; ++i) {
        double t = i / kFs;
        double g = rng.Gaussian();
        double shaped = tilt.Step(g) + 0.4 * v1.Step(g) + 0.2 * v2.Step(g);
        double am = (0.55 + 0.45 * std::sin(2.0 * M_PI * 4.0 * t)) *
                    (0.7 + 0.3 * std::sin(2.0 * M_PI * 0.7 * t + 1.0));
        out[i] = shaped * am;
      }
      break;
    }
    case NoiseKind::kCopierSweep: {
      for (int i = 0; i < n; ++i) {
        double t = i / kFs;
        double sweep_pos = t * 0.5 - std::floor(t * 0.5);
        double center = 300.0 + 1200.0 * sweep_pos;
        // Re-tuned resonator approximated by ring modulation of lowpassed
        // noise with the sweeping center frequency.
        double carrier = std::sin(2.0 * M_PI * center * t);
        double hum = 0.2 * std::sin(2.0 * M_PI * 90.0 * t);
        out[i] = 0.6 * carrier * rng.Uniform(0.4, 1.0) + hum +
                 0.1 * rng.Gaussian();
      }
      break;
    }
    case NoiseKind::kAirconHiss: {
      double prev = 0.0;
      OnePoleLp soft(0.3);
      for (int i = 0; i < n; ++i) {
        double g = rng.Gaussian();
        double hp = g - 0.7 * prev;
        prev = g;
        out[i] = 0.8 * hp + 0.4 * soft.Step(g);
      }
      break;
    }
    case NoiseKind::kPrinterBurst: {
      Resonator impact(2200.0, 900.0);
      const int period = static_cast<int>(kFs / 3.0);
      const int burst_len = static_cast<int>(0.03 * kFs);
      for (int i = 0; i < n; ++i) {
        double t = i / kFs;
        double x = 0.01 * rng.Gaussian();
        if (i % period < burst_len) {
          x += rng.Gaussian();
        }
        out[i] = impact.Step(x) + 0.05 * std::sin(2.0 * M_PI * 120.0 * t);
      }
      break;
    }
  }
  NormalizeRms(out, 0.1);

  AudioSignal signal;
  signal.samples = std::move(out);
  return signal;
}

void WriteCorpus(const std::string& root, const CorpusSpec& spec) {
  namespace fs = std::filesystem;
  const uint64_t kSpeechStream = 0x737065656368ULL;  // "speech"
  const uint64_t kNoiseStream = 0x6e6f697365ULL;     // "noise"

  struct CleanSplit {
    const char* dir;
    int count;
    uint64_t salt;
  };
  const CleanSplit splits[] = {
      {"clean_train", spec.train_clean, 1},
      {"clean_validation", spec.validation_clean, 2},
      {"clean_test", spec.test_clean, 3},
  };
  char name[64];
  for (const auto& split : splits) {
    fs::path dir = fs::path(root) / split.dir;
    fs::create_directories(dir);
    for (int i = 0; i < split.count; ++i) {
      uint64_t seed = DeriveSeed(spec.seed, kSpeechStream,
                                 split.salt * 1000000 + i);
      std::snprintf(name, sizeof name, "speech_%04d.wav", i);
      WriteWav(SynthSpeech(seed, spec.speech_seconds),
               (dir / name).string());
    }
  }

  fs::path train_dir = fs::path(root) / "noise_train";
  fs::path test_dir = fs::path(root) / "noise_test";
  fs::create_directories(train_dir);
  fs::create_directories(test_dir);
  int index = 0;
  for (NoiseKind kind : kTrainNoiseKinds) {
    uint64_t seed = DeriveSeed(spec.seed, kNoiseStream, index++);
    WriteWav(SynthNoise(kind, seed, spec.noise_seconds),
             (train_dir / (NoiseKindName(kind) + ".wav")).string());
  }
  for (NoiseKind kind : kTestNoiseKinds) {
    uint64_t seed = DeriveSeed(spec.seed, kNoiseStream, index++);
    WriteWav(SynthNoise(kind, seed, spec.noise_seconds),
             (test_dir / (NoiseKindName(kind) + ".wav")).string());
  }
}

}  // namespace denoise
