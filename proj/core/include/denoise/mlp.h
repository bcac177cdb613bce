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

#ifndef DENOISE_MLP_H_
#define DENOISE_MLP_H_

#include <cstdint>
#include <string>
#include <vector>

#include "denoise/types.h"

namespace denoise {

// Per-dimension standardization statistics for inputs and targets. Empty
// vectors mean identity (no normalization).
struct FeatureNorm {
  Vector in_mean, in_std, out_mean, out_std;

  bool has_input() const { return in_mean.size() > 0; }
  bool has_output() const { return out_mean.size() > 0; }
};

// Fully connected network: sigmoid hidden layers, identity output layer.
// weights[l] has shape (dims[l+1] x dims[l]), row-major.
struct MlpModel {
  std::vector<int> layer_dims;
  std::vector<Matrix> weights;
  std::vector<Vector> biases;
  FeatureNorm norm;

  int input_dim() const { return layer_dims.front(); }
  int output_dim() const { return layer_dims.back(); }
};

struct TrainConfig {
  int minibatch = 128;
  double lambda = 1e-5;
  double lr_initial = 0.05;
  double lr_after = 0.01;
  int lr_switch_epoch = 10;  // epochs 1..10 use lr_initial
  int epochs = 40;
  uint64_t seed = 0;
};

struct EpochStats {
  int epoch;  // 1-based
  double train_loss;
  double val_loss;
  double lr;
};

// Raw (unnormalized) features. mask_weights is either empty (unweighted or
// globally weighted loss), a single broadcast row, or one row per sample.
struct Dataset {
  Matrix inputs;
  Matrix targets;
  Matrix mask_weights;

  Eigen::Index size() const { return inputs.rows(); }
};

struct LossGrad {
  double loss = 0.0;
  std::vector<Matrix> d_weights;
  std::vector<Vector> d_biases;
};

struct TrainResult {
  MlpModel best_model;
  std::vector<EpochStats> history;
  int best_epoch = 0;
  double best_val_loss = 0.0;
};

// Glorot-uniform weights (+-sqrt(6/(fan_in+fan_out))), zero biases,
// deterministic in the seed. Raises BadDims for fewer than two dims or a
// non-positive dim.
MlpModel InitMlp(const std::vector<int>& layer_dims, uint64_t seed);

// Batch forward pass in normalized feature space; rows are samples.
Matrix Forward(const MlpModel& model, const Matrix& batch);

// Loss (1/K) sum_k ||w (.) (yhat_k - s_k)||^2 + lambda ||W||^2 and its
// analytic gradients. weights == nullptr gives the unweighted loss; a
// one-row matrix broadcasts; otherwise one weight row per sample. Biases
// are never regularized, and the lambda term is skipped entirely at
// lambda == 0 so unregularized gradients are exactly the data term.
LossGrad LossAndGrad(const MlpModel& model, const Matrix& batch_in,
                     const Matrix& batch_target, const Matrix* weights,
                     double lambda);

// Minibatch SGD with a seeded shuffle per epoch. Normalization statistics
// come from the training set only and are stored in the model before the
// first update. Returns the epoch snapshot with minimum validation loss
// (data term only) plus the per-epoch history. Raises EmptyDataset and
// DivergedLoss (any non-finite loss).
TrainResult Train(MlpModel model, const Dataset& train, const Dataset& val,
                  const TrainConfig& cfg);

// Normalization helpers used by training and inference.
Matrix NormalizeInputs(const FeatureNorm& norm, Matrix batch);
Matrix NormalizeTargets(const FeatureNorm& norm, Matrix batch);
Matrix DenormalizeOutputs(const FeatureNorm& norm, Matrix batch);

// Versioned JSON serialization with a CRC32 over the raw parameter bytes.
// Round trips are bit-exact. Load raises IoFailure (unreadable path),
// VersionMismatch (foreign version), ChecksumMismatch (corrupt or
// unparseable content), or BadDims (inconsistent shape fields).
void SaveModel(const MlpModel& model, const std::string& path,
               double best_val_loss = 0.0, int best_epoch = 0);
MlpModel LoadModel(const std::string& path);

}  // namespace denoise

#endif  // DENOISE_MLP_H_
