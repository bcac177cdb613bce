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

#ifndef DENOISE_COMMANDS_H_
#define DENOISE_COMMANDS_H_

#include <functional>
#include <string>
#include <vector>

#include "denoise/experiment_config.h"
#include "denoise/metrics.h"
#include "denoise/mixer.h"

namespace denoise {

// Applies fn(i) for i in [0, n) across worker threads. Thread count comes
// from the DENOISE_THREADS environment variable (falling back to the
// hardware count); fn must only touch its own index's state.
void ParallelFor(int n, const std::function<void(int)>& fn);

// Utterance ids are "<split>_<index>" with a four-digit index; the noisy
// mix for an id lives at <mix_dir>/<id>.wav and its enhanced counterpart is
// <id>.enh.wav.
std::string UtteranceId(SplitKind split, int index);

struct MixOutputs {
  std::string manifest_path;
  std::string stats_path;
  std::vector<std::string> noisy_paths;
};

// Builds the split manifest from the configured corpora, synthesizes the
// noisy WAVs, and writes a stats CSV (header:
// utterance_id,clean,snr_requested_db,snr_measured_db) with the measured
// SNR of every file. count <= 0 uses the configured count for the split.
MixOutputs CmdMix(const ExperimentConfig& cfg, SplitKind split,
                  int count = 0);

struct TrainOutputs {
  std::string model_path;
  std::string history_path;
  int best_epoch = 0;
  double best_val_loss = 0.0;
};

// Assembles training pairs from the train and validation manifests, trains
// the configured network, and writes the best-validation model plus a
// per-epoch history CSV (header: epoch,train_loss,val_loss,lr).
TrainOutputs CmdTrain(const ExperimentConfig& cfg);

// Enhances input (a .jsonl manifest or a single WAV path) into out_dir,
// one "<stem>.enh.wav" per input file. Empty model_path defaults to the
// configured model location; baseline switches to the classical estimator
// (no model needed). Empty input defaults to the test manifest; empty
// out_dir defaults to the split's enhanced directory.
std::vector<std::string> CmdEnhance(const ExperimentConfig& cfg,
                                    const std::string& model_path,
                                    const std::string& input,
                                    const std::string& out_dir,
                                    bool baseline);

struct EvaluateOutputs {
  std::string per_utterance_path;
  std::string aggregate_path;
  std::vector<UtteranceMetrics> rows;
};

// Scores every manifest entry against its enhanced file and writes
// per-utterance and aggregate CSVs named after the split and mode label.
// Empty manifest/enhanced_dir default to the test split locations; empty
// mode_label defaults to the configured mode name (or "logmmse" via
// CmdEnhance's baseline output being evaluated separately).
EvaluateOutputs CmdEvaluate(const ExperimentConfig& cfg,
                            const std::string& manifest_path,
                            const std::string& enhanced_dir,
                            const std::string& mode_label);

}  // namespace denoise

#endif  // DENOISE_COMMANDS_H_
