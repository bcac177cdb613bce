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

#include "denoise/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "denoise/audio_io.h"
#include "denoise/errors.h"
#include "denoise/pipeline.h"
#include "denoise/psychoacoustics.h"

namespace denoise {
namespace {

namespace fs = std::filesystem;

int ThreadBudget() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  const char* env = std::getenv("DENOISE_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  int v = std::atoi(env);
  return v < 1 ? 1 : std::min(v, hw);
}

// Sorted WAV basenames in dir; EmptyCorpus when none exist.
std::vector<std::string> ListWavs(const std::string& dir) {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".wav") {
      names.push_back(entry.path().filename().string());
    }
  }
  if (ec) throw IoFailure("cannot list " + dir + ": " + ec.message());
  if (names.empty()) throw EmptyCorpus("no WAV files under " + dir);
  std::sort(names.begin(), names.end());
  return names;
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoFailure("write failed for " + path);
}

double MeanSquare(const std::vector<double>& x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return x.empty() ? 0.0 : acc / static_cast<double>(x.size());
}

SplitKind SplitFromManifestPath(const std::string& path) {
  return ParseSplit(fs::path(path).stem().string());
}

// Stacks per-utterance pair sets into one dataset, entry order preserved.
Dataset ConcatDatasets(const std::vector<Dataset>& parts) {
  Eigen::Index rows = 0;
  for (const auto& part : parts) rows += part.inputs.rows();
  if (rows == 0 || parts.empty()) {
    throw EmptyDataset("no training frames assembled");
  }
  Dataset out;
  out.inputs.resize(rows, parts[0].inputs.cols());
  out.targets.resize(rows, parts[0].targets.cols());
  bool masked = parts[0].mask_weights.rows() > 0;
  if (masked) out.mask_weights.resize(rows, parts[0].mask_weights.cols());
  Eigen::Index at = 0;
  for (const auto& part : parts) {
    out.inputs.middleRows(at, part.inputs.rows()) = part.inputs;
    out.targets.middleRows(at, part.targets.rows()) = part.targets;
    if (masked) {
      out.mask_weights.middleRows(at, part.mask_weights.rows()) =
          part.mask_weights;
    }
    at += part.inputs.rows();
  }
  return out;
}

// Loads one split's aligned (clean, noisy) pairs into a dataset.
Dataset LoadSplitDataset(const ExperimentConfig& cfg, SplitKind split) {
  DatasetManifest manifest =
      LoadManifest(cfg.manifest_path(split), split, cfg.mix_seed);
  if (manifest.entries.empty()) {
    throw EmptyDataset("manifest for " + SplitName(split) + " is empty");
  }
  std::vector<Dataset> parts(manifest.entries.size());
  ParallelFor(static_cast<int>(manifest.entries.size()), [&](int i) {
    const MixSpec& entry = manifest.entries[i];
    AudioSignal clean =
        ReadWav(cfg.clean_root(split) + "/" + entry.clean);
    AudioSignal noisy = ReadWav(cfg.mix_dir(split) + "/" +
                                UtteranceId(split, i) + ".wav");
    parts[i] = MakeTrainingPairs(clean, noisy, cfg.feature, cfg.stft,
                                 cfg.loss, cfg.invert_masking);
  });
  Dataset set = ConcatDatasets(parts);
  if (cfg.loss == LossKind::kAth) {
    set.mask_weights = AthWeights(cfg.stft).transpose();
  }
  return set;
}

}  // namespace

void ParallelFor(int n, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  int workers = std::min(ThreadBudget(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string UtteranceId(SplitKind split, int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_%04d", index);
  return SplitName(split) + buf;
}

MixOutputs CmdMix(const ExperimentConfig& cfg, SplitKind split, int count) {
  const std::string clean_root = cfg.clean_root(split);
  const std::string noise_root = cfg.noise_root(split);
  std::vector<std::string> clean_names = ListWavs(clean_root);
  std::vector<std::string> noise_names = ListWavs(noise_root);

  std::vector<AudioSignal> noise_signals(noise_names.size());
  std::vector<uint64_t> noise_lengths(noise_names.size());
  for (size_t i = 0; i < noise_names.size(); ++i) {
    noise_signals[i] = ReadWav(noise_root + "/" + noise_names[i]);
    noise_lengths[i] = noise_signals[i].samples.size();
  }
  std::map<std::string, const AudioSignal*> noise_by_name;
  for (size_t i = 0; i < noise_names.size(); ++i) {
    noise_by_name[noise_names[i]] = &noise_signals[i];
  }

  if (count <= 0) count = cfg.count_for(split);
  DatasetManifest manifest = BuildManifest(
      clean_names, noise_names, noise_lengths, split, count, cfg.mix_seed);

  fs::create_directories(fs::path(cfg.paths.work) / "manifests");
  fs::create_directories(cfg.mix_dir(split));

  MixOutputs outputs;
  outputs.manifest_path = cfg.manifest_path(split);
  outputs.stats_path = cfg.stats_path(split);
  SaveManifest(manifest, outputs.manifest_path);

  const int n = static_cast<int>(manifest.entries.size());
  outputs.noisy_paths.resize(n);
  std::vector<double> measured(n, 0.0);
  ParallelFor(n, [&](int i) {
    const MixSpec& entry = manifest.entries[i];
    AudioSignal clean = ReadWav(clean_root + "/" + entry.clean);
    std::vector<AudioSignal> noises;
    noises.reserve(entry.noises.size());
    for (const auto& name : entry.noises) {
      auto it = noise_by_name.find(name);
      if (it == noise_by_name.end()) {
        throw CorruptFile("manifest names unknown noise " + name);
      }
      noises.push_back(*it->second);
    }
    MixResult mixed =
        MixWithOffsets(clean, noises, entry.snr_db, entry.offsets);
    measured[i] = 10.0 * std::log10(MeanSquare(clean.samples) /
                                    MeanSquare(mixed.scaled_noise.samples));
    std::string path =
        cfg.mix_dir(split) + "/" + UtteranceId(split, i) + ".wav";
    WriteWav(mixed.noisy, path);
    outputs.noisy_paths[i] = path;
  });

  std::string stats = "utterance_id,clean,snr_requested_db,snr_measured_db\n";
  for (int i = 0; i < n; ++i) {
    const MixSpec& entry = manifest.entries[i];
    stats += UtteranceId(split, i);
    stats += ',';
    stats += entry.clean;
    stats += ',';
    stats += FormatDouble(entry.snr_db);
    stats += ',';
    stats += FormatDouble(measured[i]);
    stats += '\n';
  }
  WriteTextFile(outputs.stats_path, stats);
  return outputs;
}

TrainOutputs CmdTrain(const ExperimentConfig& cfg) {
  Dataset train_set = LoadSplitDataset(cfg, SplitKind::kTrain);
  Dataset val_set = LoadSplitDataset(cfg, SplitKind::kValidation);

  std::vector<int> dims;
  dims.push_back(FeatureDim(cfg.feature, cfg.stft));
  for (int h : cfg.hidden) dims.push_back(h);
  dims.push_back(cfg.stft.bins());

  MlpModel model = InitMlp(dims, cfg.train.seed);
  TrainResult result = Train(std::move(model), train_set, val_set, cfg.train);

  TrainOutputs outputs;
  outputs.model_path = cfg.model_path();
  outputs.history_path = cfg.history_path();
  outputs.best_epoch = result.best_epoch;
  outputs.best_val_loss = result.best_val_loss;

  fs::create_directories(cfg.paths.work);
  SaveModel(result.best_model, outputs.model_path, result.best_val_loss,
            result.best_epoch);

  std::string history = "epoch,train_loss,val_loss,lr\n";
  for (const auto& row : result.history) {
    history += std::to_string(row.epoch);
    history += ',';
    history += FormatDouble(row.train_loss);
    history += ',';
    history += FormatDouble(row.val_loss);
    history += ',';
    history += FormatDouble(row.lr);
    history += '\n';
  }
  WriteTextFile(outputs.history_path, history);
  return outputs;
}

std::vector<std::string> CmdEnhance(const ExperimentConfig& cfg,
                                    const std::string& model_path,
                                    const std::string& input,
                                    const std::string& out_dir,
                                    bool baseline) {
  std::string in_path =
      input.empty() ? cfg.manifest_path(SplitKind::kTest) : input;

  std::vector<std::string> files;
  std::string out = out_dir;
  if (fs::path(in_path).extension() == ".jsonl") {
    SplitKind split = SplitFromManifestPath(in_path);
    DatasetManifest manifest = LoadManifest(in_path, split, cfg.mix_seed);
    for (size_t i = 0; i < manifest.entries.size(); ++i) {
      files.push_back(cfg.mix_dir(split) + "/" +
                      UtteranceId(split, static_cast<int>(i)) + ".wav");
    }
    if (out.empty()) out = cfg.enhanced_dir(split);
  } else {
    files.push_back(in_path);
    if (out.empty()) out = cfg.paths.work + "/enhanced/adhoc";
  }
  fs::create_directories(out);

  MlpModel model;
  if (!baseline) {
    model = LoadModel(model_path.empty() ? cfg.model_path() : model_path);
  }

  std::vector<std::string> results(files.size());
  ParallelFor(static_cast<int>(files.size()), [&](int i) {
    AudioSignal noisy = ReadWav(files[i]);
    AudioSignal enhanced =
        baseline ? LogMmseEnhance(noisy, cfg.stft)
                 : Enhance(model, noisy, cfg.feature, cfg.stft);
    std::string stem = fs::path(files[i]).stem().string();
    std::string path = out + "/" + stem + ".enh.wav";
    WriteWav(enhanced, path);
    results[i] = path;
  });
  return results;
}

EvaluateOutputs CmdEvaluate(const ExperimentConfig& cfg,
                            const std::string& manifest_path,
                            const std::string& enhanced_dir,
                            const std::string& mode_label) {
  std::string mpath =
      manifest_path.empty() ? cfg.manifest_path(SplitKind::kTest)
                            : manifest_path;
  SplitKind split = SplitFromManifestPath(mpath);
  DatasetManifest manifest = LoadManifest(mpath, split, cfg.mix_seed);
  std::string edir =
      enhanced_dir.empty() ? cfg.enhanced_dir(split) : enhanced_dir;
  std::string label =
      mode_label.empty() ? InputModeName(cfg.feature.mode) : mode_label;

  const int n = static_cast<int>(manifest.entries.size());
  EvaluateOutputs outputs;
  outputs.rows.resize(n);
  ParallelFor(n, [&](int i) {
    const MixSpec& entry = manifest.entries[i];
    std::string id = UtteranceId(split, i);
    std::string enhanced_path = edir + "/" + id + ".enh.wav";
    if (!fs::exists(enhanced_path)) {
      throw MissingEnhanced("no enhanced file for " + id + " under " + edir);
    }
    AudioSignal clean = ReadWav(cfg.clean_root(split) + "/" + entry.clean);
    AudioSignal noisy =
        ReadWav(cfg.mix_dir(split) + "/" + id + ".wav");
    AudioSignal enhanced = ReadWav(enhanced_path);

    LogPowerSpectrogram clean_lp =
        LogPower(Stft(clean, cfg.stft).magnitude, cfg.stft);
    LogPowerSpectrogram noisy_lp =
        LogPower(Stft(noisy, cfg.stft).magnitude, cfg.stft);
    LogPowerSpectrogram est_lp =
        LogPower(Stft(enhanced, cfg.stft).magnitude, cfg.stft);

    UtteranceMetrics& row = outputs.rows[i];
    row.utterance_id = id;
    row.snr_db = entry.snr_db;
    row.mode = label;
    row.stoi = Stoi(clean, enhanced);
    row.sd = SpeechDistortion(est_lp, clean_lp);
    row.nr = NoiseReduction(est_lp, noisy_lp);
    row.seg_snr_db = SegmentalSnrDb(clean, enhanced);
  });

  fs::create_directories(cfg.reports_dir());
  std::string base = cfg.reports_dir() + "/" + SplitName(split) + "_" + label;
  outputs.per_utterance_path = base + "_per_utterance.csv";
  outputs.aggregate_path = base + "_aggregate.csv";
  WriteTextFile(outputs.per_utterance_path, PerUtteranceCsv(outputs.rows));
  WriteTextFile(outputs.aggregate_path,
                AggregateCsv(Aggregate(outputs.rows)));
  return outputs;
}

}  // namespace denoise
