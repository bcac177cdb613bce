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

#ifndef DENOISE_EXPERIMENT_CONFIG_H_
#define DENOISE_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "denoise/mixer.h"
#include "denoise/mlp.h"
#include "denoise/pipeline.h"
#include "denoise/stft.h"

namespace denoise {

// Whole-experiment settings, stored as TOML-style sections of key = value
// lines. Unknown keys are rejected; omitted keys keep their defaults;
// serialization emits every key, so serialize-parse round trips are
// lossless.
struct ExperimentConfig {
  StftConfig stft;
  FeatureConfig feature;
  TrainConfig train;
  LossKind loss = LossKind::kMse;
  bool invert_masking = false;
  std::vector<int> hidden = {256, 256, 256};

  uint64_t mix_seed = 1;
  int train_count = 200;
  int validation_count = 30;
  int test_count = 30;

  struct Paths {
    std::string clean_train = "corpus/clean_train";
    std::string clean_validation = "corpus/clean_validation";
    std::string clean_test = "corpus/clean_test";
    std::string noise_train = "corpus/noise_train";
    std::string noise_test = "corpus/noise_test";
    std::string work = "work";
  } paths;

  // Derived locations under the work directory.
  std::string manifest_path(SplitKind split) const;
  std::string mix_dir(SplitKind split) const;
  std::string stats_path(SplitKind split) const;
  std::string model_path() const;
  std::string history_path() const;
  std::string enhanced_dir(SplitKind split) const;
  std::string reports_dir() const;

  std::string clean_root(SplitKind split) const;
  std::string noise_root(SplitKind split) const;
  int count_for(SplitKind split) const;
};

ExperimentConfig ParseExperimentConfig(const std::string& text);
std::string SerializeExperimentConfig(const ExperimentConfig& cfg);

ExperimentConfig LoadExperimentConfig(const std::string& path);
void SaveExperimentConfig(const ExperimentConfig& cfg,
                          const std::string& path);

}  // namespace denoise

#endif  // DENOISE_EXPERIMENT_CONFIG_H_
