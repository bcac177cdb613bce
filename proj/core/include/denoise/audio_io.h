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

#ifndef DENOISE_AUDIO_IO_H_
#define DENOISE_AUDIO_IO_H_

#include <string>

#include "denoise/audio.h"

namespace denoise {

// Reads a mono 16 kHz WAV file. Accepts 16-bit PCM (samples divided by
// 32768) and 32-bit IEEE float (clamped to [-1, 1]). Any other rate,
// channel count, or encoding raises UnsupportedFormat; malformed
// containers raise CorruptFile; unreadable paths raise IoFailure.
AudioSignal ReadWav(const std::string& path);

// Writes 16-bit PCM mono WAV. Samples are clipped to [-1, 1] before
// quantization, so out-of-range values saturate instead of wrapping.
// Raises IoFailure when the destination cannot be written.
void WriteWav(const AudioSignal& signal, const std::string& path);

}  // namespace denoise

#endif  // DENOISE_AUDIO_IO_H_
