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

#ifndef DENOISE_AUDIO_H_
#define DENOISE_AUDIO_H_

#include <cstddef>
#include <vector>

namespace denoise {

inline constexpr int kSampleRateHz = 16000;

// Mono PCM waveform. Pipeline entry points require 16 kHz; intermediate
// stages (the intelligibility metric's internal resampler) may carry other
// rates. Samples are nominally in [-1, 1]; in-memory processing may
// overshoot, saturation happens at WAV write.
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate_hz = kSampleRateHz;

  size_t size() const { return samples.size(); }
};

}  // namespace denoise

#endif  // DENOISE_AUDIO_H_
