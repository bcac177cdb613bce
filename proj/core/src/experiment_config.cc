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

#include "denoise/experiment_config.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "denoise/errors.h"
#include "denoise/metrics.h"

namespace denoise {
namespace {

std::string Trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Raw key = value pair with the value still in source form.
struct RawValue {
  std::string text;
  int line;
};

class ValueReader {
 public:
  RawValue raw;

  std::string AsString() const {
    const std::string& t = raw.text;
    if (t.size() < 2 || t.front() != '"' || t.back() != '"') {
      throw ConfigError("line " + std::to_string(raw.line) +
                        ": expected a quoted string");
    }
    return t.substr(1, t.size() - 2);
  }

  bool AsBool() const {
    if (raw.text == "true") return true;
    if (raw.text == "false") return false;
    throw ConfigError("line " + std::to_string(raw.line) +
                      ": expected true or false");
  }

  int64_t AsInt() const {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(raw.text.data(),
                                     raw.text.data() + raw.text.size(), v);
    if (ec != std::errc() || ptr != raw.text.data() + raw.text.size()) {
      throw ConfigError("line " + std::to_string(raw.line) +
                        ": expected an integer");
    }
    return v;
  }

  uint64_t AsU64() const {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(raw.text.data(),
                                     raw.text.data() + raw.text.size(), v);
    if (ec != std::errc() || ptr != raw.text.data() + raw.text.size()) {
      throw ConfigError("line " + std::to_string(raw.line) +
                        ": expected an unsigned integer");
    }
    return v;
  }

  double AsDouble() const {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(raw.text.data(),
                                     raw.text.data() + raw.text.size(), v);
    if (ec != std::errc() || ptr != raw.text.data() + raw.text.size()) {
      throw ConfigError("line " + std::to_string(raw.line) +
                        ": expected a number");
    }
    return v;
  }
};

std::vector<int> ParseHidden(const std::string& s, int line) {
  std::vector<int> dims;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || v < 1) {
      throw ConfigError("line " + std::to_string(line) +
                        ": hidden must be comma-separated positive ints");
    }
    dims.push_back(v);
  }
  if (dims.empty()) {
    throw ConfigError("line " + std::to_string(line) +
                      ": hidden must list at least one layer");
  }
  return dims;
}

std::string HiddenToString(const std::vector<int>& dims) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(dims[i]);
  }
  return out;
}

std::string WindowKindName(WindowKind kind) {
  switch (kind) {
    case WindowKind::kPeriodicHann:
      return "hann";
    case WindowKind::kRect:
      return "rect";
    default:
      return "hamming";
  }
}

WindowKind ParseWindowKind(const std::string& name, int line) {
  if (name == "hamming") return WindowKind::kPeriodicHamming;
  if (name == "hann") return WindowKind::kPeriodicHann;
  if (name == "rect") return WindowKind::kRect;
  throw ConfigError("line " + std::to_string(line) +
                    ": window must be hamming, hann, or rect");
}

void Apply(ExperimentConfig& cfg, const std::string& section,
           const std::string& key, const ValueReader& v) {
  const std::string full = section + "." + key;
  if (full == "stft.window_len") {
    cfg.stft.window_len = static_cast<int>(v.AsInt());
  } else if (full == "stft.hop") {
    cfg.stft.hop = static_cast<int>(v.AsInt());
  } else if (full == "stft.dft_size") {
    cfg.stft.dft_size = static_cast<int>(v.AsInt());
  } else if (full == "stft.window") {
    cfg.stft.window_kind = ParseWindowKind(v.AsString(), v.raw.line);
  } else if (full == "stft.power_floor") {
    cfg.stft.power_floor = v.AsDouble();
  } else if (full == "feature.tau") {
    cfg.feature.tau = static_cast<int>(v.AsInt());
  } else if (full == "feature.mode") {
    cfg.feature.mode = ParseInputMode(v.AsString());
  } else if (full == "feature.stationary_frames") {
    cfg.feature.stationary_frames = static_cast<int>(v.AsInt());
  } else if (full == "train.minibatch") {
    cfg.train.minibatch = static_cast<int>(v.AsInt());
  } else if (full == "train.lambda") {
    cfg.train.lambda = v.AsDouble();
  } else if (full == "train.lr_initial") {
    cfg.train.lr_initial = v.AsDouble();
  } else if (full == "train.lr_after") {
    cfg.train.lr_after = v.AsDouble();
  } else if (full == "train.lr_switch_epoch") {
    cfg.train.lr_switch_epoch = static_cast<int>(v.AsInt());
  } else if (full == "train.epochs") {
    cfg.train.epochs = static_cast<int>(v.AsInt());
  } else if (full == "train.seed") {
    cfg.train.seed = v.AsU64();
  } else if (full == "train.loss") {
    cfg.loss = ParseLossKind(v.AsString());
  } else if (full == "train.invert_masking") {
    cfg.invert_masking = v.AsBool();
  } else if (full == "train.hidden") {
    cfg.hidden = ParseHidden(v.AsString(), v.raw.line);
  } else if (full == "mix.seed") {
    cfg.mix_seed = v.AsU64();
  } else if (full == "mix.train_count") {
    cfg.train_count = static_cast<int>(v.AsInt());
  } else if (full == "mix.validation_count") {
    cfg.validation_count = static_cast<int>(v.AsInt());
  } else if (full == "mix.test_count") {
    cfg.test_count = static_cast<int>(v.AsInt());
  } else if (full == "paths.clean_train") {
    cfg.paths.clean_train = v.AsString();
  } else if (full == "paths.clean_validation") {
    cfg.paths.clean_validation = v.AsString();
  } else if (full == "paths.clean_test") {
    cfg.paths.clean_test = v.AsString();
  } else if (full == "paths.noise_train") {
    cfg.paths.noise_train = v.AsString();
  } else if (full == "paths.noise_test") {
    cfg.paths.noise_test = v.AsString();
  } else if (full == "paths.work") {
    cfg.paths.work = v.AsString();
  } else {
    throw ConfigError("line " + std::to_string(v.raw.line) +
                      ": unknown key '" + full + "'");
  }
}

void Validate(const ExperimentConfig& cfg) {
  const auto& s = cfg.stft;
  if (!(s.hop >= 1 && s.hop <= s.window_len && s.window_len <= s.dft_size)) {
    throw ConfigError("stft requires 1 <= hop <= window_len <= dft_size");
  }
  if ((s.dft_size & (s.dft_size - 1)) != 0) {
    throw ConfigError("stft.dft_size must be a power of two");
  }
  if (!(s.power_floor > 0.0)) {
    throw ConfigError("stft.power_floor must be positive");
  }
  if (cfg.feature.tau < 0) throw ConfigError("feature.tau must be >= 0");
  if (cfg.feature.stationary_frames < 1) {
    throw ConfigError("feature.stationary_frames must be >= 1");
  }
  if (cfg.train.minibatch < 1) throw ConfigError("train.minibatch must be >= 1");
  if (cfg.train.lambda < 0.0) throw ConfigError("train.lambda must be >= 0");
  if (cfg.train.epochs < 1) throw ConfigError("train.epochs must be >= 1");
  if (cfg.train_count < 1 || cfg.validation_count < 1 || cfg.test_count < 1) {
    throw ConfigError("mix counts must be >= 1");
  }
}

}  // namespace

std::string ExperimentConfig::manifest_path(SplitKind split) const {
  return paths.work + "/manifests/" + SplitName(split) + ".jsonl";
}

std::string ExperimentConfig::mix_dir(SplitKind split) const {
  return paths.work + "/mix/" + SplitName(split);
}

std::string ExperimentConfig::stats_path(SplitKind split) const {
  return paths.work + "/manifests/" + SplitName(split) + "_stats.csv";
}

std::string ExperimentConfig::model_path() const {
  return paths.work + "/model.json";
}

std::string ExperimentConfig::history_path() const {
  return paths.work + "/history.csv";
}

std::string ExperimentConfig::enhanced_dir(SplitKind split) const {
  return paths.work + "/enhanced/" + SplitName(split);
}

std::string ExperimentConfig::reports_dir() const {
  return paths.work + "/reports";
}

std::string ExperimentConfig::clean_root(SplitKind split) const {
  switch (split) {
    case SplitKind::kTrain:
      return paths.clean_train;
    case SplitKind::kValidation:
      return paths.clean_validation;
    case SplitKind::kTest:
      return paths.clean_test;
  }
  return paths.clean_train;
}

std::string ExperimentConfig::noise_root(SplitKind split) const {
  // Validation shares the held-out noise corpus with the test split.
  return split == SplitKind::kTrain ? paths.noise_train : paths.noise_test;
}

int ExperimentConfig::count_for(SplitKind split) const {
  switch (split) {
    case SplitKind::kTrain:
      return train_count;
    case SplitKind::kValidation:
      return validation_count;
    case SplitKind::kTest:
      return test_count;
  }
  return train_count;
}

ExperimentConfig ParseExperimentConfig(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // Strip comments outside quotes.
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    line = Trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": unterminated section header");
      }
      section = Trim(line.substr(1, line.size() - 2));
      if (section.empty()) {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": empty section name");
      }
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    std::string key = Trim(line.substr(0, eq));
    std::string value = Trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": key outside any [section]");
    }
    ValueReader reader{{value, line_no}};
    Apply(cfg, section, key, reader);
  }
  Validate(cfg);
  return cfg;
}

std::string SerializeExperimentConfig(const ExperimentConfig& cfg) {
  std::string out;
  auto add = [&out](const std::string& s) { out += s; };
  add("[stft]\n");
  add("window_len = " + std::to_string(cfg.stft.window_len) + "\n");
  add("hop = " + std::to_string(cfg.stft.hop) + "\n");
  add("dft_size = " + std::to_string(cfg.stft.dft_size) + "\n");
  add("window = \"" + WindowKindName(cfg.stft.window_kind) + "\"\n");
  add("power_floor = " + FormatDouble(cfg.stft.power_floor) + "\n");
  add("\n[feature]\n");
  add("tau = " + std::to_string(cfg.feature.tau) + "\n");
  add("mode = \"" + InputModeName(cfg.feature.mode) + "\"\n");
  add("stationary_frames = " +
      std::to_string(cfg.feature.stationary_frames) + "\n");
  add("\n[train]\n");
  add("minibatch = " + std::to_string(cfg.train.minibatch) + "\n");
  add("lambda = " + FormatDouble(cfg.train.lambda) + "\n");
  add("lr_initial = " + FormatDouble(cfg.train.lr_initial) + "\n");
  add("lr_after = " + FormatDouble(cfg.train.lr_after) + "\n");
  add("lr_switch_epoch = " + std::to_string(cfg.train.lr_switch_epoch) + "\n");
  add("epochs = " + std::to_string(cfg.train.epochs) + "\n");
  add("seed = " + std::to_string(cfg.train.seed) + "\n");
  add("loss = \"" + LossKindName(cfg.loss) + "\"\n");
  add(std::string("invert_masking = ") +
      (cfg.invert_masking ? "true" : "false") + "\n");
  add("hidden = \"" + HiddenToString(cfg.hidden) + "\"\n");
  add("\n[mix]\n");
  add("seed = " + std::to_string(cfg.mix_seed) + "\n");
  add("train_count = " + std::to_string(cfg.train_count) + "\n");
  add("validation_count = " + std::to_string(cfg.validation_count) + "\n");
  add("test_count = " + std::to_string(cfg.test_count) + "\n");
  add("\n[paths]\n");
  add("clean_train = \"" + cfg.paths.clean_train + "\"\n");
  add("clean_validation = \"" + cfg.paths.clean_validation + "\"\n");
  add("clean_test = \"" + cfg.paths.clean_test + "\"\n");
  add("noise_train = \"" + cfg.paths.noise_train + "\"\n");
  add("noise_test = \"" + cfg.paths.noise_test + "\"\n");
  add("work = \"" + cfg.paths.work + "\"\n");
  return out;
}

ExperimentConfig LoadExperimentConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseExperimentConfig(buf.str());
}

void SaveExperimentConfig(const ExperimentConfig& cfg,
                          const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  std::string text = SerializeExperimentConfig(cfg);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoFailure("write failed for " + path);
}

}  // namespace denoise
