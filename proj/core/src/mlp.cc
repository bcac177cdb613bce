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

#include "denoise/mlp.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>
#include <zlib.h>

#include "denoise/errors.h"
#include "denoise/rng.h"

namespace denoise {
namespace {

using nlohmann::json;

constexpr int kModelFormatVersion = 1;
constexpr uint64_t kShuffleStream = 0x73687566666cULL;  // "shuffl"
constexpr double kStdFloor = 1e-8;

Matrix SigmoidInPlace(Matrix z) {
  z = ((-z.array()).exp() + 1.0).inverse().matrix();
  return z;
}

void CheckInputDim(const MlpModel& model, const Matrix& batch) {
  if (batch.cols() != model.input_dim()) {
    throw DimMismatch("batch width " + std::to_string(batch.cols()) +
                      " does not match model input dim " +
                      std::to_string(model.input_dim()));
  }
}

// Weight row for sample k: broadcast row 0 when the matrix has one row.
const auto WeightRow = [](const Matrix& w, Eigen::Index k) {
  return w.row(w.rows() == 1 ? 0 : k);
};

uint32_t ParameterCrc(const MlpModel& model) {
  uLong crc = crc32(0L, Z_NULL, 0);
  for (size_t l = 0; l < model.weights.size(); ++l) {
    crc = crc32(crc,
                reinterpret_cast<const Bytef*>(model.weights[l].data()),
                static_cast<uInt>(model.weights[l].size() * sizeof(double)));
    crc = crc32(crc,
                reinterpret_cast<const Bytef*>(model.biases[l].data()),
                static_cast<uInt>(model.biases[l].size() * sizeof(double)));
  }
  return static_cast<uint32_t>(crc);
}

Vector JsonToVector(const json& arr) {
  Vector v(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) v[i] = arr[i].get<double>();
  return v;
}

json VectorToJson(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

// Mean validation data-term loss over the whole set, evaluated in chunks.
double EvalDataLoss(const MlpModel& model, const Dataset& set, int chunk) {
  const Eigen::Index n = set.size();
  double total = 0.0;
  for (Eigen::Index start = 0; start < n; start += chunk) {
    Eigen::Index k = std::min<Eigen::Index>(chunk, n - start);
    Matrix in = NormalizeInputs(model.norm, set.inputs.middleRows(start, k));
    Matrix tgt =
        NormalizeTargets(model.norm, set.targets.middleRows(start, k));
    Matrix diff = Forward(model, in) - tgt;
    if (set.mask_weights.rows() > 1) {
      Matrix w = set.mask_weights.middleRows(start, k);
      diff = w.cwiseProduct(diff);
    } else if (set.mask_weights.rows() == 1) {
      diff = set.mask_weights.row(0).replicate(k, 1).cwiseProduct(diff);
    }
    total += diff.squaredNorm();
  }
  return total / static_cast<double>(n);
}

}  // namespace

MlpModel InitMlp(const std::vector<int>& layer_dims, uint64_t seed) {
  if (layer_dims.size() < 2) {
    throw BadDims("network needs at least input and output dims");
  }
  for (int d : layer_dims) {
    if (d < 1) throw BadDims("layer dims must be positive");
  }
  MlpModel model;
  model.layer_dims = layer_dims;
  Rng rng(seed);
  for (size_t l = 0; l + 1 < layer_dims.size(); ++l) {
    int fan_in = layer_dims[l];
    int fan_out = layer_dims[l + 1];
    double r = std::sqrt(6.0 / (fan_in + fan_out));
    Matrix w(fan_out, fan_in);
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      w.data()[i] = rng.Uniform(-r, r);
    }
    model.weights.push_back(std::move(w));
    model.biases.push_back(Vector::Zero(fan_out));
  }
  return model;
}

Matrix Forward(const MlpModel& model, const Matrix& batch) {
  CheckInputDim(model, batch);
  Matrix a = batch;
  const size_t layers = model.weights.size();
  for (size_t l = 0; l < layers; ++l) {
    Matrix z = a * model.weights[l].transpose();
    z.rowwise() += model.biases[l].transpose();
    a = (l + 1 < layers) ? SigmoidInPlace(std::move(z)) : std::move(z);
  }
  return a;
}

LossGrad LossAndGrad(const MlpModel& model, const Matrix& batch_in,
                     const Matrix& batch_target, const Matrix* weights,
                     double lambda) {
  CheckInputDim(model, batch_in);
  if (batch_target.rows() != batch_in.rows() ||
      batch_target.cols() != model.output_dim()) {
    throw DimMismatch("target batch shape mismatch");
  }
  if (weights != nullptr &&
      (weights->cols() != model.output_dim() ||
       (weights->rows() != 1 && weights->rows() != batch_in.rows()))) {
    throw DimMismatch("weight rows must broadcast or match the batch");
  }

  const Eigen::Index k = batch_in.rows();
  const size_t layers = model.weights.size();

  // Forward pass, keeping activations for backprop.
  std::vector<Matrix> act(layers + 1);
  act[0] = batch_in;
  for (size_t l = 0; l < layers; ++l) {
    Matrix z = act[l] * model.weights[l].transpose();
    z.rowwise() += model.biases[l].transpose();
    act[l + 1] = (l + 1 < layers) ? SigmoidInPlace(std::move(z))
                                  : std::move(z);
  }

  Matrix diff = act[layers] - batch_target;
  Matrix wdiff = diff;
  if (weights != nullptr) {
    for (Eigen::Index r = 0; r < k; ++r) {
      wdiff.row(r) = WeightRow(*weights, r).cwiseProduct(diff.row(r));
    }
  }

  LossGrad out;
  out.loss = wdiff.squaredNorm() / static_cast<double>(k);
  if (lambda != 0.0) {
    double reg = 0.0;
    for (const auto& w : model.weights) reg += w.squaredNorm();
    out.loss += lambda * reg;
  }

  // Output-layer error signal: (2/K) w^2 (.) diff.
  Matrix delta = wdiff;
  if (weights != nullptr) {
    for (Eigen::Index r = 0; r < k; ++r) {
      delta.row(r) = WeightRow(*weights, r).cwiseProduct(wdiff.row(r));
    }
  }
  delta *= 2.0 / static_cast<double>(k);

  out.d_weights.resize(layers);
  out.d_biases.resize(layers);
  for (size_t l = layers; l-- > 0;) {
    out.d_weights[l] = delta.transpose() * act[l];
    out.d_biases[l] = delta.colwise().sum().transpose();
    if (lambda != 0.0) {
      out.d_weights[l] += (2.0 * lambda) * model.weights[l];
    }
    if (l > 0) {
      Matrix back = delta * model.weights[l];
      delta = back.cwiseProduct(
          act[l].cwiseProduct((1.0 - act[l].array()).matrix()));
    }
  }
  return out;
}

Matrix NormalizeInputs(const FeatureNorm& norm, Matrix batch) {
  if (!norm.has_input()) return batch;
  batch.rowwise() -= norm.in_mean.transpose();
  batch.array().rowwise() /= norm.in_std.transpose().array();
  return batch;
}

Matrix NormalizeTargets(const FeatureNorm& norm, Matrix batch) {
  if (!norm.has_output()) return batch;
  batch.rowwise() -= norm.out_mean.transpose();
  batch.array().rowwise() /= norm.out_std.transpose().array();
  return batch;
}

Matrix DenormalizeOutputs(const FeatureNorm& norm, Matrix batch) {
  if (!norm.has_output()) return batch;
  batch.array().rowwise() *= norm.out_std.transpose().array();
  batch.rowwise() += norm.out_mean.transpose();
  return batch;
}

TrainResult Train(MlpModel model, const Dataset& train, const Dataset& val,
                  const TrainConfig& cfg) {
  if (train.size() == 0 || val.size() == 0) {
    throw EmptyDataset("training and validation sets must be non-empty");
  }

  // Standardization statistics from the training set only.
  FeatureNorm norm;
  norm.in_mean = train.inputs.colwise().mean().transpose();
  norm.in_std =
      ((train.inputs.rowwise() - norm.in_mean.transpose()).array().square())
          .colwise()
          .mean()
          .sqrt()
          .transpose()
          .matrix();
  norm.out_mean = train.targets.colwise().mean().transpose();
  norm.out_std =
      ((train.targets.rowwise() - norm.out_mean.transpose()).array().square())
          .colwise()
          .mean()
          .sqrt()
          .transpose()
          .matrix();
  for (Eigen::Index i = 0; i < norm.in_std.size(); ++i) {
    norm.in_std[i] = std::max(norm.in_std[i], kStdFloor);
  }
  for (Eigen::Index i = 0; i < norm.out_std.size(); ++i) {
    norm.out_std[i] = std::max(norm.out_std[i], kStdFloor);
  }
  model.norm = norm;

  const Eigen::Index n = train.size();
  const int k = cfg.minibatch;
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);

  TrainResult result;
  double best_val = std::numeric_limits<double>::infinity();

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    double lr = epoch <= cfg.lr_switch_epoch ? cfg.lr_initial : cfg.lr_after;
    Rng shuffle_rng(DeriveSeed(cfg.seed, kShuffleStream,
                               static_cast<uint64_t>(epoch)));
    shuffle_rng.Shuffle(order);

    double loss_sum = 0.0;
    int batches = 0;
    for (Eigen::Index start = 0; start < n; start += k) {
      Eigen::Index bs = std::min<Eigen::Index>(k, n - start);
      Matrix in(bs, train.inputs.cols());
      Matrix tgt(bs, train.targets.cols());
      for (Eigen::Index r = 0; r < bs; ++r) {
        in.row(r) = train.inputs.row(order[start + r]);
        tgt.row(r) = train.targets.row(order[start + r]);
      }
      in = NormalizeInputs(model.norm, std::move(in));
      tgt = NormalizeTargets(model.norm, std::move(tgt));

      Matrix w;
      const Matrix* w_ptr = nullptr;
      if (train.mask_weights.rows() == 1) {
        w_ptr = &train.mask_weights;
      } else if (train.mask_weights.rows() > 1) {
        w.resize(bs, train.mask_weights.cols());
        for (Eigen::Index r = 0; r < bs; ++r) {
          w.row(r) = train.mask_weights.row(order[start + r]);
        }
        w_ptr = &w;
      }

      LossGrad lg = LossAndGrad(model, in, tgt, w_ptr, cfg.lambda);
      if (!std::isfinite(lg.loss)) {
        throw DivergedLoss("non-finite training loss at epoch " +
                           std::to_string(epoch));
      }
      loss_sum += lg.loss;
      ++batches;
      for (size_t l = 0; l < model.weights.size(); ++l) {
        model.weights[l] -= lr * lg.d_weights[l];
        model.biases[l] -= lr * lg.d_biases[l];
      }
    }

    double val_loss = EvalDataLoss(model, val, k);
    if (!std::isfinite(val_loss)) {
      throw DivergedLoss("non-finite validation loss at epoch " +
                         std::to_string(epoch));
    }
    result.history.push_back(
        {epoch, loss_sum / std::max(batches, 1), val_loss, lr});
    if (val_loss < best_val) {
      best_val = val_loss;
      result.best_model = model;
      result.best_epoch = epoch;
      result.best_val_loss = val_loss;
    }
  }
  return result;
}

void SaveModel(const MlpModel& model, const std::string& path,
               double best_val_loss, int best_epoch) {
  json j;
  j["format_version"] = kModelFormatVersion;
  j["layer_dims"] = model.layer_dims;
  j["activation"] = "sigmoid";
  j["feature_norm"] = {
      {"mean", VectorToJson(model.norm.in_mean)},
      {"std", VectorToJson(model.norm.in_std)},
      {"target_mean", VectorToJson(model.norm.out_mean)},
      {"target_std", VectorToJson(model.norm.out_std)},
  };
  json layers = json::array();
  for (size_t l = 0; l < model.weights.size(); ++l) {
    json layer;
    json w = json::array();
    const double* data = model.weights[l].data();
    for (Eigen::Index i = 0; i < model.weights[l].size(); ++i) {
      w.push_back(data[i]);
    }
    layer["w"] = std::move(w);
    layer["b"] = VectorToJson(model.biases[l]);
    layers.push_back(std::move(layer));
  }
  j["layers"] = std::move(layers);
  j["best_val_loss"] = best_val_loss;
  j["best_epoch"] = best_epoch;
  j["checksum"] = ParameterCrc(model);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  std::string text = j.dump();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.put('\n');
  if (!out) throw IoFailure("write failed for " + path);
}

MlpModel LoadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();

  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception&) {
    throw ChecksumMismatch("model file is not parseable: " + path);
  }

  try {
    int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw VersionMismatch("model format version " +
                            std::to_string(version) + ", expected " +
                            std::to_string(kModelFormatVersion));
    }
    MlpModel model;
    model.layer_dims = j.at("layer_dims").get<std::vector<int>>();
    if (model.layer_dims.size() < 2) {
      throw BadDims("model file has fewer than two layer dims");
    }
    const auto& fn = j.at("feature_norm");
    model.norm.in_mean = JsonToVector(fn.at("mean"));
    model.norm.in_std = JsonToVector(fn.at("std"));
    model.norm.out_mean = JsonToVector(fn.at("target_mean"));
    model.norm.out_std = JsonToVector(fn.at("target_std"));

    const auto& layers = j.at("layers");
    if (layers.size() + 1 != model.layer_dims.size()) {
      throw BadDims("layer count does not match layer_dims");
    }
    for (size_t l = 0; l < layers.size(); ++l) {
      Eigen::Index rows = model.layer_dims[l + 1];
      Eigen::Index cols = model.layer_dims[l];
      const auto& w = layers[l].at("w");
      if (static_cast<Eigen::Index>(w.size()) != rows * cols) {
        throw BadDims("weight array size does not match dims");
      }
      Matrix wm(rows, cols);
      for (Eigen::Index i = 0; i < wm.size(); ++i) {
        wm.data()[i] = w[i].get<double>();
      }
      Vector b = JsonToVector(layers[l].at("b"));
      if (b.size() != rows) throw BadDims("bias size does not match dims");
      model.weights.push_back(std::move(wm));
      model.biases.push_back(std::move(b));
    }

    uint32_t stored = j.at("checksum").get<uint32_t>();
    uint32_t actual = ParameterCrc(model);
    if (stored != actual) {
      throw ChecksumMismatch("parameter checksum mismatch in " + path);
    }
    return model;
  } catch (const json::exception& e) {
    throw ChecksumMismatch("model file missing fields: " +
                           std::string(e.what()));
  }
}

}  // namespace denoise
