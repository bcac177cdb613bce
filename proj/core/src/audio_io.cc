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

#include "denoise/audio_io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "denoise/errors.h"

namespace denoise {
namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatIeeeFloat = 3;

uint16_t ReadU16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0]) | static_cast<uint16_t>(p[1]) << 8;
}

uint32_t ReadU32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

void PutU16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xFF));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void PutU32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 24) & 0xFF));
}

void PutTag(std::vector<uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

AudioSignal ReadWav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw IoFailure("read failed for " + path);

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw CorruptFile(path + " is not a RIFF/WAVE container");
  }

  bool have_fmt = false;
  uint16_t format = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits_per_sample = 0;
  const uint8_t* data = nullptr;
  uint32_t data_len = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t* chunk = bytes.data() + pos;
    uint32_t chunk_len = ReadU32(chunk + 4);
    if (pos + 8 + chunk_len > bytes.size()) {
      throw CorruptFile(path + " chunk overruns file");
    }
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (chunk_len < 16) throw CorruptFile(path + " fmt chunk too small");
      format = ReadU16(chunk + 8);
      channels = ReadU16(chunk + 10);
      sample_rate = ReadU32(chunk + 12);
      bits_per_sample = ReadU16(chunk + 22);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = chunk + 8;
      data_len = chunk_len;
    }
    // Chunks are word-aligned; odd sizes carry a pad byte.
    pos += 8 + chunk_len + (chunk_len & 1);
  }

  if (!have_fmt || data == nullptr) {
    throw CorruptFile(path + " missing fmt or data chunk");
  }
  if (channels != 1 || sample_rate != static_cast<uint32_t>(kSampleRateHz)) {
    throw UnsupportedFormat(path + " must be mono 16000 Hz");
  }

  AudioSignal signal;
  signal.sample_rate_hz = kSampleRateHz;
  if (format == kFormatPcm && bits_per_sample == 16) {
    size_t n = data_len / 2;
    signal.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      int16_t v = static_cast<int16_t>(ReadU16(data + 2 * i));
      signal.samples[i] = static_cast<double>(v) / 32768.0;
    }
  } else if (format == kFormatIeeeFloat && bits_per_sample == 32) {
    size_t n = data_len / 4;
    signal.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      uint32_t raw = ReadU32(data + 4 * i);
      float v;
      std::memcpy(&v, &raw, sizeof v);
      if (!std::isfinite(v)) throw CorruptFile(path + " non-finite sample");
      signal.samples[i] = std::clamp(static_cast<double>(v), -1.0, 1.0);
    }
  } else {
    throw UnsupportedFormat(path + " must be 16-bit PCM or 32-bit float");
  }
  return signal;
}

void WriteWav(const AudioSignal& signal, const std::string& path) {
  const uint32_t n = static_cast<uint32_t>(signal.samples.size());
  const uint32_t data_len = n * 2;

  std::vector<uint8_t> out;
  out.reserve(44 + data_len);
  PutTag(out, "RIFF");
  PutU32(out, 36 + data_len);
  PutTag(out, "WAVE");
  PutTag(out, "fmt ");
  PutU32(out, 16);
  PutU16(out, kFormatPcm);
  PutU16(out, 1);
  PutU32(out, static_cast<uint32_t>(signal.sample_rate_hz));
  PutU32(out, static_cast<uint32_t>(signal.sample_rate_hz) * 2);
  PutU16(out, 2);
  PutU16(out, 16);
  PutTag(out, "data");
  PutU32(out, data_len);
  for (uint32_t i = 0; i < n; ++i) {
    double clipped = std::clamp(signal.samples[i], -1.0, 1.0);
    long q = std::lround(clipped * 32768.0);
    q = std::clamp(q, -32768L, 32767L);
    PutU16(out, static_cast<uint16_t>(static_cast<int16_t>(q)));
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoFailure("cannot open " + path + " for writing");
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  file.flush();
  if (!file) throw IoFailure("write failed for " + path);
}

}  // namespace denoise
