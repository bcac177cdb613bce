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

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include <doctest.h>

#include "denoise/audio_io.h"
#include "denoise/errors.h"
#include "test_util.h"

using denoise::AudioSignal;
using denoise::ReadWav;
using denoise::WriteWav;
using denoise_test::Slurp;
using denoise_test::Spit;
using denoise_test::TempDir;

namespace {

void PutU16(std::string& s, uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>(v >> 8));
}

void PutU32(std::string& s, uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

// Minimal WAV with arbitrary format fields and payload.
std::string RawWav(uint16_t format, uint16_t channels, uint32_t rate,
                   uint16_t bits, const std::string& payload) {
  std::string data;
  data += "WAVEfmt ";
  PutU32(data, 16);
  PutU16(data, format);
  PutU16(data, channels);
  PutU32(data, rate);
  PutU32(data, rate * channels * bits / 8);
  PutU16(data, static_cast<uint16_t>(channels * bits / 8));
  PutU16(data, bits);
  data += "data";
  PutU32(data, static_cast<uint32_t>(payload.size()));
  data += payload;
  std::string out = "RIFF";
  PutU32(out, static_cast<uint32_t>(data.size()));
  out += data;
  return out;
}

}  // namespace

TEST_SUITE("audio_io") {

TEST_CASE("PCM16 scaling of known sample values") {
  TempDir dir("wav");
  std::string payload;
  PutU16(payload, 16384);
  PutU16(payload, static_cast<uint16_t>(-32768));
  PutU16(payload, 0);
  Spit(dir.file("a.wav"), RawWav(1, 1, 16000, 16, payload));
  AudioSignal sig = ReadWav(dir.file("a.wav"));
  REQUIRE(sig.samples.size() == 3);
  CHECK(sig.samples[0] == 0.5);
  CHECK(sig.samples[1] == -1.0);
  CHECK(sig.samples[2] == 0.0);
  CHECK(sig.sample_rate_hz == 16000);
}

TEST_CASE("round trip error bounded by one quantization step") {
  TempDir dir("wav");
  AudioSignal sig = denoise_test::GaussianSignal(4096, 77, 0.25);
  WriteWav(sig, dir.file("rt.wav"));
  AudioSignal back = ReadWav(dir.file("rt.wav"));
  REQUIRE(back.samples.size() == sig.samples.size());
  double max_err = 0.0;
  for (size_t i = 0; i < sig.samples.size(); ++i) {
    max_err = std::max(max_err, std::abs(back.samples[i] - sig.samples[i]));
  }
  CHECK(max_err <= 1.0 / 32768.0);
}

TEST_CASE("write clips out-of-range samples") {
  TempDir dir("wav");
  AudioSignal sig;
  sig.samples = {1.5, -2.0, 0.5};
  WriteWav(sig, dir.file("clip.wav"));
  AudioSignal back = ReadWav(dir.file("clip.wav"));
  CHECK(back.samples[0] == doctest::Approx(32767.0 / 32768.0));
  CHECK(back.samples[1] == -1.0);
  CHECK(back.samples[2] == 0.5);
}

TEST_CASE("float32 payloads are read and clamped") {
  TempDir dir("wav");
  std::string payload;
  const float values[] = {0.25f, -1.5f, 1.0f};
  for (float v : values) {
    char buf[4];
    std::memcpy(buf, &v, 4);
    payload.append(buf, 4);
  }
  Spit(dir.file("f.wav"), RawWav(3, 1, 16000, 32, payload));
  AudioSignal sig = ReadWav(dir.file("f.wav"));
  REQUIRE(sig.samples.size() == 3);
  CHECK(sig.samples[0] == 0.25);
  CHECK(sig.samples[1] == -1.0);
  CHECK(sig.samples[2] == 1.0);
}

TEST_CASE("unsupported formats are rejected") {
  TempDir dir("wav");
  std::string payload(4, '\0');
  Spit(dir.file("stereo.wav"), RawWav(1, 2, 16000, 16, payload));
  CHECK_THROWS_AS(ReadWav(dir.file("stereo.wav")), denoise::UnsupportedFormat);
  Spit(dir.file("cd.wav"), RawWav(1, 1, 44100, 16, payload));
  CHECK_THROWS_AS(ReadWav(dir.file("cd.wav")), denoise::UnsupportedFormat);
  Spit(dir.file("pcm8.wav"), RawWav(1, 1, 16000, 8, payload));
  CHECK_THROWS_AS(ReadWav(dir.file("pcm8.wav")), denoise::UnsupportedFormat);
}

TEST_CASE("corrupt containers are rejected") {
  TempDir dir("wav");
  Spit(dir.file("not.wav"), "this is not a riff file at all...");
  CHECK_THROWS_AS(ReadWav(dir.file("not.wav")), denoise::CorruptFile);

  std::string whole = RawWav(1, 1, 16000, 16, std::string(64, '\0'));
  Spit(dir.file("trunc.wav"), whole.substr(0, whole.size() - 10));
  CHECK_THROWS_AS(ReadWav(dir.file("trunc.wav")), denoise::CorruptFile);
}

TEST_CASE("missing file raises an io error") {
  CHECK_THROWS_AS(ReadWav("/nonexistent/nowhere.wav"), denoise::IoFailure);
}

TEST_CASE("unknown chunks before data are skipped") {
  TempDir dir("wav");
  std::string data;
  data += "WAVEfmt ";
  PutU32(data, 16);
  PutU16(data, 1);
  PutU16(data, 1);
  PutU32(data, 16000);
  PutU32(data, 32000);
  PutU16(data, 2);
  PutU16(data, 16);
  data += "LIST";
  PutU32(data, 5);
  data += "junk";
  data += '\0';
  data += '\0';  // pad byte: odd chunk sizes are word-aligned
  data += "data";
  PutU32(data, 2);
  PutU16(data, 16384);
  std::string out = "RIFF";
  PutU32(out, static_cast<uint32_t>(data.size()));
  out += data;
  Spit(dir.file("list.wav"), out);
  AudioSignal sig = ReadWav(dir.file("list.wav"));
  REQUIRE(sig.samples.size() == 1);
  CHECK(sig.samples[0] == 0.5);
}

TEST_CASE("written files read back bit-exactly") {
  TempDir dir("wav");
  AudioSignal sig;
  for (int i = -8; i <= 8; ++i) sig.samples.push_back(i / 8.0 * 0.9);
  WriteWav(sig, dir.file("x.wav"));
  AudioSignal a = ReadWav(dir.file("x.wav"));
  WriteWav(a, dir.file("y.wav"));
  CHECK(Slurp(dir.file("x.wav")) == Slurp(dir.file("y.wav")));
}

}  // TEST_SUITE
