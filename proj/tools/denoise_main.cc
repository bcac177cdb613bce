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

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "denoise/commands.h"
#include "denoise/errors.h"
#include "denoise/experiment_config.h"
#include "denoise/mixer.h"
#include "denoise/pipeline.h"

namespace {

struct CommonArgs {
  std::string config;
  std::string mode;
  std::string loss;
  uint64_t seed = 0;
  bool has_seed = false;
};

void AddCommon(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--config", args->config, "Experiment config file")
      ->required();
  cmd->add_option("--mode", args->mode, "Input mode override")
      ->check(CLI::IsMember({"bd", "bsd", "bed"}));
  cmd->add_option("--loss", args->loss, "Loss override")
      ->check(CLI::IsMember({"mse", "ath", "masking"}));
  cmd->add_option_function<uint64_t>(
         "--seed",
         [args](uint64_t v) {
           args->seed = v;
           args->has_seed = true;
         },
         "Seed override for mixing and training");
}

denoise::ExperimentConfig LoadWithOverrides(const CommonArgs& args) {
  denoise::ExperimentConfig cfg =
      denoise::LoadExperimentConfig(args.config);
  if (!args.mode.empty()) cfg.feature.mode = denoise::ParseInputMode(args.mode);
  if (!args.loss.empty()) cfg.loss = denoise::ParseLossKind(args.loss);
  if (args.has_seed) {
    cfg.mix_seed = args.seed;
    cfg.train.seed = args.seed;
  }
  return cfg;
}

int Run(int argc, char** argv) {
  CLI::App app{"Train and run feedforward speech enhancement models"};
  app.require_subcommand(1);

  CommonArgs mix_args;
  std::string mix_split;
  int mix_count = 0;
  CLI::App* mix = app.add_subcommand(
      "mix", "Build manifests and synthesize noisy mixtures");
  AddCommon(mix, &mix_args);
  mix->add_option("--split", mix_split, "Restrict to one split")
      ->check(CLI::IsMember({"train", "validation", "test"}));
  mix->add_option("--count", mix_count, "Utterance count override");

  CommonArgs train_args;
  CLI::App* train =
      app.add_subcommand("train", "Train a model from the mixed splits");
  AddCommon(train, &train_args);

  CommonArgs enh_args;
  std::string enh_model, enh_input, enh_out, enh_baseline;
  CLI::App* enhance =
      app.add_subcommand("enhance", "Enhance a manifest or a single WAV");
  AddCommon(enhance, &enh_args);
  enhance->add_option("--model", enh_model, "Model file (default from config)");
  enhance->add_option("--input", enh_input,
                      "Manifest (.jsonl) or WAV (default: test manifest)");
  enhance->add_option("--out", enh_out, "Output directory");
  enhance->add_option("--baseline", enh_baseline, "Classical baseline")
      ->check(CLI::IsMember({"logmmse"}));

  CommonArgs eval_args;
  std::string eval_manifest, eval_enhanced, eval_label, eval_baseline;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Score enhanced files against a manifest");
  AddCommon(evaluate, &eval_args);
  evaluate->add_option("--manifest", eval_manifest,
                       "Manifest to score (default: test manifest)");
  evaluate->add_option("--enhanced", eval_enhanced,
                       "Directory of .enh.wav files");
  evaluate->add_option("--label", eval_label, "Mode label for the CSV rows");
  evaluate->add_option("--baseline", eval_baseline,
                       "Label rows as this classical baseline")
      ->check(CLI::IsMember({"logmmse"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(mix)) {
    denoise::ExperimentConfig cfg = LoadWithOverrides(mix_args);
    std::vector<denoise::SplitKind> splits;
    if (mix_split.empty()) {
      splits = {denoise::SplitKind::kTrain, denoise::SplitKind::kValidation,
                denoise::SplitKind::kTest};
    } else {
      splits = {denoise::ParseSplit(mix_split)};
    }
    for (denoise::SplitKind split : splits) {
      denoise::MixOutputs out = denoise::CmdMix(cfg, split, mix_count);
      std::printf("mixed %zu utterances for %s\n  manifest: %s\n  stats: %s\n",
                  out.noisy_paths.size(), denoise::SplitName(split).c_str(),
                  out.manifest_path.c_str(), out.stats_path.c_str());
    }
    return 0;
  }

  if (app.got_subcommand(train)) {
    denoise::ExperimentConfig cfg = LoadWithOverrides(train_args);
    denoise::TrainOutputs out = denoise::CmdTrain(cfg);
    std::printf("best epoch %d (val loss %.6f)\n  model: %s\n  history: %s\n",
                out.best_epoch, out.best_val_loss, out.model_path.c_str(),
                out.history_path.c_str());
    return 0;
  }

  if (app.got_subcommand(enhance)) {
    denoise::ExperimentConfig cfg = LoadWithOverrides(enh_args);
    std::vector<std::string> written = denoise::CmdEnhance(
        cfg, enh_model, enh_input, enh_out, !enh_baseline.empty());
    std::printf("enhanced %zu file(s)\n", written.size());
    if (!written.empty()) std::printf("  last: %s\n", written.back().c_str());
    return 0;
  }

  denoise::ExperimentConfig cfg = LoadWithOverrides(eval_args);
  std::string label = eval_label;
  if (label.empty() && !eval_baseline.empty()) label = eval_baseline;
  denoise::EvaluateOutputs out =
      denoise::CmdEvaluate(cfg, eval_manifest, eval_enhanced, label);
  std::printf("scored %zu utterances\n  per-utterance: %s\n  aggregate: %s\n",
              out.rows.size(), out.per_utterance_path.c_str(),
              out.aggregate_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const denoise::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
