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

#ifndef DENOISE_METRICS_H_
#define DENOISE_METRICS_H_

#include <string>
#include <vector>

#include "denoise/audio.h"
#include "denoise/stft.h"
#include "denoise/types.h"

namespace denoise {

// Mean over frames of the per-frame L1 distance between the estimated and
// clean log-power spectra. Raises ShapeMismatch.
double SpeechDistortion(const LogPowerSpectrogram& est,
                        const LogPowerSpectrogram& clean);

// Same distance against the noisy spectrogram: how much the estimate moved
// away from its input. Raises ShapeMismatch.
double NoiseReduction(const LogPowerSpectrogram& est,
                      const LogPowerSpectrogram& noisy);

// Short-time objective intelligibility in [0, 1]: 10 kHz resampling,
// 40 dB silent-frame removal, 15 one-third-octave bands from 150 Hz,
// clipped normalized correlation over 384 ms segments. Raises
// LengthMismatch and TooShort (under 384 ms of active speech).
double Stoi(const AudioSignal& clean, const AudioSignal& processed);

// Mean over 32 ms frames of 10 log10(sum c^2 / sum (c-p)^2), clamped to
// [-10, 35] dB per frame; frames with clean energy below -60 dBFS are
// skipped. Raises LengthMismatch and AllSilent (no frame qualifies).
double SegmentalSnrDb(const AudioSignal& clean, const AudioSignal& processed);

// One evaluated utterance; mode names the processing variant.
struct UtteranceMetrics {
  std::string utterance_id;
  double snr_db = 0.0;
  std::string mode;
  double stoi = 0.0;
  double sd = 0.0;
  double nr = 0.0;
  double seg_snr_db = 0.0;
};

struct AggregateMetrics {
  double snr_db = 0.0;
  std::string mode;
  int count = 0;
  double stoi = 0.0;
  double sd = 0.0;
  double nr = 0.0;
  double seg_snr_db = 0.0;
};

// Arithmetic means grouped by (snr_db, mode), rows ordered by first
// appearance of the group.
std::vector<AggregateMetrics> Aggregate(
    const std::vector<UtteranceMetrics>& rows);

// CSV emission, UTF-8 with LF line endings.
// Header: utterance_id,snr_db,mode,stoi,sd,nr,seg_snr_db
std::string PerUtteranceCsv(const std::vector<UtteranceMetrics>& rows);
// Header: snr_db,mode,count,stoi,sd,nr,seg_snr_db
std::string AggregateCsv(const std::vector<AggregateMetrics>& rows);

// Shortest round-trip decimal formatting used by all CSV writers.
std::string FormatDouble(double v);

}  // namespace denoise

#endif  // DENOISE_METRICS_H_
