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

#include "denoise/mixer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "denoise/errors.h"

namespace denoise {
namespace {

using nlohmann::json;

constexpr double kSilencePower = 1e-12;

// Stream tags for seed derivation, one per split.
uint64_t SplitStream(SplitKind split) {
  switch (split) {
    case SplitKind::kTrain:
      return 0x747261696eULL;       // "train"
    case SplitKind::kValidation:
      return 0x76616c696441ULL;     // "validA"
    case SplitKind::kTest:
      return 0x74657374ULL;         // "test"
  }
  return 0;
}

double MeanSquare(const std::vector<double>& x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return x.empty() ? 0.0 : acc / static_cast<double>(x.size());
}

}  // namespace

std::string SplitName(SplitKind split) {
  switch (split) {
    case SplitKind::kTrain:
      return "train";
    case SplitKind::kValidation:
      return "validation";
    case SplitKind::kTest:
      return "test";
  }
  return "train";
}

SplitKind ParseSplit(const std::string& name) {
  if (name == "train") return SplitKind::kTrain;
  if (name == "validation") return SplitKind::kValidation;
  if (name == "test") return SplitKind::kTest;
  throw ConfigError("unknown split '" + name + "'");
}

MixResult MixWithOffsets(const AudioSignal& clean,
                         const std::vector<AudioSignal>& noises,
                         double snr_db,
                         const std::vector<uint64_t>& offsets) {
  if (noises.empty() || noises.size() > kMaxNoisesPerMix) {
    throw ConfigError("mix requires 1 to 4 noises");
  }
  if (offsets.size() != noises.size()) {
    throw ConfigError("one offset per noise required");
  }

  const size_t len = clean.samples.size();
  double p_clean = MeanSquare(clean.samples);
  if (p_clean <= kSilencePower) {
    throw SilentClean("clean utterance power too low to define SNR");
  }

  // Equal-weight sum of the tiled noises.
  std::vector<double> mixture(len, 0.0);
  for (size_t i = 0; i < noises.size(); ++i) {
    const auto& noise = noises[i].samples;
    if (noise.empty()) throw SilentNoiseMixture("empty noise signal");
    const size_t n = noise.size();
    size_t pos = static_cast<size_t>(offsets[i] % n);
    for (size_t k = 0; k < len; ++k) {
      mixture[k] += noise[pos];
      if (++pos == n) pos = 0;
    }
  }

  double p_mix = MeanSquare(mixture);
  if (p_mix <= kSilencePower) {
    throw SilentNoiseMixture("noise mixture power too low to scale");
  }
  double gain = std::sqrt(p_clean / (p_mix * std::pow(10.0, snr_db / 10.0)));

  MixResult result;
  result.noisy.sample_rate_hz = clean.sample_rate_hz;
  result.scaled_noise.sample_rate_hz = clean.sample_rate_hz;
  result.noisy.samples.resize(len);
  result.scaled_noise.samples.resize(len);
  for (size_t k = 0; k < len; ++k) {
    double noisy = clean.samples[k] + gain * mixture[k];
    result.noisy.samples[k] = noisy;
    // Re-derived difference, so noisy - clean == scaled_noise holds exactly.
    result.scaled_noise.samples[k] = noisy - clean.samples[k];
  }
  return result;
}

MixResult Mix(const AudioSignal& clean, const std::vector<AudioSignal>& noises,
              double snr_db, Rng& rng) {
  std::vector<uint64_t> offsets;
  offsets.reserve(noises.size());
  for (const auto& noise : noises) {
    if (noise.samples.empty()) throw SilentNoiseMixture("empty noise signal");
    offsets.push_back(rng.Below(noise.samples.size()));
  }
  return MixWithOffsets(clean, noises, snr_db, offsets);
}

DatasetManifest BuildManifest(const std::vector<std::string>& clean_corpus,
                              const std::vector<std::string>& noise_corpus,
                              const std::vector<uint64_t>& noise_lengths,
                              SplitKind split, int count,
                              uint64_t global_seed) {
  if (clean_corpus.empty()) throw EmptyCorpus("clean corpus is empty");
  if (noise_corpus.empty()) throw EmptyCorpus("noise corpus is empty");
  if (noise_lengths.size() != noise_corpus.size()) {
    throw ConfigError("one noise length per noise path required");
  }
  if (count < 1) throw CountTooSmall("entry count must be positive");
  if (split != SplitKind::kTrain && count < kSnrGridSize) {
    throw CountTooSmall("validation/test splits must cover the SNR grid");
  }

  const int max_noises =
      std::min<int>(kMaxNoisesPerMix, static_cast<int>(noise_corpus.size()));

  DatasetManifest manifest;
  manifest.split = split;
  manifest.global_seed = global_seed;
  manifest.entries.reserve(count);

  for (int k = 0; k < count; ++k) {
    MixSpec spec;
    spec.seed = DeriveSeed(global_seed, SplitStream(split),
                           static_cast<uint64_t>(k));
    Rng rng(spec.seed);

    spec.clean = clean_corpus[k % clean_corpus.size()];

    // Draw order per entry: noise count, noise picks, SNR, offsets.
    int n_noises = 1 + static_cast<int>(rng.Below(max_noises));
    std::vector<size_t> pool(noise_corpus.size());
    for (size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    for (int i = 0; i < n_noises; ++i) {
      size_t pick = i + rng.Below(pool.size() - i);
      std::swap(pool[i], pool[pick]);
      spec.noises.push_back(noise_corpus[pool[i]]);
    }

    if (split == SplitKind::kTrain) {
      spec.snr_db = rng.Uniform(-5.0, 20.0);
    } else {
      spec.snr_db = kSnrGrid[k % kSnrGridSize];
    }

    for (int i = 0; i < n_noises; ++i) {
      spec.offsets.push_back(rng.Below(noise_lengths[pool[i]]));
    }
    manifest.entries.push_back(std::move(spec));
  }
  return manifest;
}

std::string SerializeManifest(const DatasetManifest& manifest) {
  std::string out;
  for (const auto& entry : manifest.entries) {
    json j;
    j["clean"] = entry.clean;
    j["noises"] = entry.noises;
    j["snr_db"] = entry.snr_db;
    j["offsets"] = entry.offsets;
    j["seed"] = entry.seed;
    out += j.dump();
    out += '\n';
  }
  return out;
}

DatasetManifest ParseManifest(const std::string& text, SplitKind split,
                              uint64_t global_seed) {
  DatasetManifest manifest;
  manifest.split = split;
  manifest.global_seed = global_seed;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
      MixSpec spec;
      spec.clean = j.at("clean").get<std::string>();
      spec.noises = j.at("noises").get<std::vector<std::string>>();
      spec.snr_db = j.at("snr_db").get<double>();
      spec.offsets = j.at("offsets").get<std::vector<uint64_t>>();
      spec.seed = j.at("seed").get<uint64_t>();
      if (spec.noises.empty() || spec.noises.size() > kMaxNoisesPerMix ||
          spec.offsets.size() != spec.noises.size()) {
        throw CorruptFile("manifest line " + std::to_string(line_no) +
                          " has inconsistent noise fields");
      }
      manifest.entries.push_back(std::move(spec));
    } catch (const json::exception& e) {
      throw CorruptFile("manifest line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  return manifest;
}

void SaveManifest(const DatasetManifest& manifest, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  std::string text = SerializeManifest(manifest);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoFailure("write failed for " + path);
}

DatasetManifest LoadManifest(const std::string& path, SplitKind split,
                             uint64_t global_seed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseManifest(buf.str(), split, global_seed);
}

}  // namespace denoise
