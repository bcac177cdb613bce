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

#include "denoise/metrics.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "denoise/errors.h"

namespace denoise {
namespace {

double MeanFrameL1(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch(std::string(what) + " spectrogram shapes differ");
  }
  double total = 0.0;
  for (Eigen::Index t = 0; t < a.rows(); ++t) {
    total += (a.row(t) - b.row(t)).cwiseAbs().sum();
  }
  return total / static_cast<double>(a.rows());
}

}  // namespace

double SpeechDistortion(const LogPowerSpectrogram& est,
                        const LogPowerSpectrogram& clean) {
  return MeanFrameL1(est, clean, "speech distortion");
}

double NoiseReduction(const LogPowerSpectrogram& est,
                      const LogPowerSpectrogram& noisy) {
  return MeanFrameL1(est, noisy, "noise reduction");
}

double SegmentalSnrDb(const AudioSignal& clean,
                      const AudioSignal& processed) {
  if (clean.samples.size() != processed.samples.size()) {
    throw LengthMismatch("clean and processed lengths differ");
  }
  constexpr size_t kFrame = 512;  // 32 ms at 16 kHz
  constexpr double kSilenceMeanSquare = 1e-6;  // -60 dBFS
  const size_t n = clean.samples.size();

  double total = 0.0;
  int frames = 0;
  for (size_t start = 0; start + kFrame <= n; start += kFrame) {
    double sig = 0.0;
    double err = 0.0;
    for (size_t i = start; i < start + kFrame; ++i) {
      double c = clean.samples[i];
      double d = c - processed.samples[i];
      sig += c * c;
      err += d * d;
    }
    if (sig / kFrame < kSilenceMeanSquare) continue;
    double snr = err == 0.0 ? 35.0 : 10.0 * std::log10(sig / err);
    total += std::clamp(snr, -10.0, 35.0);
    ++frames;
  }
  if (frames == 0) {
    throw AllSilent("no frame exceeds the clean-energy floor");
  }
  return total / frames;
}

std::vector<AggregateMetrics> Aggregate(
    const std::vector<UtteranceMetrics>& rows) {
  std::vector<AggregateMetrics> groups;
  for (const auto& row : rows) {
    AggregateMetrics* group = nullptr;
    for (auto& g : groups) {
      if (g.snr_db == row.snr_db && g.mode == row.mode) {
        group = &g;
        break;
      }
    }
    if (group == nullptr) {
      groups.push_back({row.snr_db, row.mode, 0, 0.0, 0.0, 0.0, 0.0});
      group = &groups.back();
    }
    group->count += 1;
    group->stoi += row.stoi;
    group->sd += row.sd;
    group->nr += row.nr;
    group->seg_snr_db += row.seg_snr_db;
  }
  for (auto& g : groups) {
    g.stoi /= g.count;
    g.sd /= g.count;
    g.nr /= g.count;
    g.seg_snr_db /= g.count;
  }
  return groups;
}

std::string FormatDouble(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string PerUtteranceCsv(const std::vector<UtteranceMetrics>& rows) {
  std::string out = "utterance_id,snr_db,mode,stoi,sd,nr,seg_snr_db\n";
  for (const auto& r : rows) {
    out += r.utterance_id;
    out += ',';
    out += FormatDouble(r.snr_db);
    out += ',';
    out += r.mode;
    out += ',';
    out += FormatDouble(r.stoi);
    out += ',';
    out += FormatDouble(r.sd);
    out += ',';
    out += FormatDouble(r.nr);
    out += ',';
    out += FormatDouble(r.seg_snr_db);
    out += '\n';
  }
  return out;
}

std::string AggregateCsv(const std::vector<AggregateMetrics>& rows) {
  std::string out = "snr_db,mode,count,stoi,sd,nr,seg_snr_db\n";
  for (const auto& r : rows) {
    out += FormatDouble(r.snr_db);
    out += ',';
    out += r.mode;
    out += ',';
    out += std::to_string(r.count);
    out += ',';
    out += FormatDouble(r.stoi);
    out += ',';
    out += FormatDouble(r.sd);
    out += ',';
    out += FormatDouble(r.nr);
    out += ',';
    out += FormatDouble(r.seg_snr_db);
    out += '\n';
  }
  return out;
}

}  // namespace denoise
