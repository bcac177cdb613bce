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

#ifndef DENOISE_PSYCHOACOUSTICS_H_
#define DENOISE_PSYCHOACOUSTICS_H_

#include "denoise/stft.h"
#include "denoise/types.h"

namespace denoise {

// Absolute threshold of hearing in dB SPL at fq hertz:
//   3.64 (fq/1000)^-0.8 - 6.5 exp(-0.6 (fq/1000 - 3.3)^2) + 1e-3 (fq/1000)^4.
// Raises NonPositiveFrequency for fq <= 0.
double AthDb(double fq_hz);

// Bark band index: 13 atan(0.00076 fq) + 3.5 atan((fq/7500)^2).
double Bark(double fq_hz);

// Center frequency of a DFT bin; bin 0 maps to 3/4 of one bin width so the
// threshold formula stays finite there.
double BinFrequencyHz(int bin, const StftConfig& cfg,
                      int sample_rate_hz = kSampleRateHz);

// Global hearing-threshold weights, one per bin. Thresholds are evaluated at
// the bin center frequencies f*fs/dft_size (bin 0 at 3/4 of its bin width),
// shifted so the minimum threshold is 1, inverted, and scaled so the square
// sum equals N = dft_size/2.
Vector AthWeights(const StftConfig& cfg, int sample_rate_hz = kSampleRateHz);

// Per-frame masking-threshold weights from a clean magnitude frame. Each
// masker bin spreads its level across the bark axis at +25 dB/bark below and
// -10 dB/bark above itself; the per-bin threshold is the max contribution.
// Thresholds are scaled to a maximum of 1; the weights are the |log10| of
// the scaled thresholds shifted to a minimum of 1 (their inverses when
// invert is set) and scaled so the square sum equals N.
//
// Bin levels enter as dB relative to the frame peak, floored at -120 dB and
// quantized to a 2^-20 dB grid, which makes the result exactly invariant to
// any positive gain on the input frame.
Vector MaskingWeights(const Vector& clean_magnitude_frame,
                      const StftConfig& cfg, bool invert = false,
                      int sample_rate_hz = kSampleRateHz);

}  // namespace denoise

#endif  // DENOISE_PSYCHOACOUSTICS_H_
