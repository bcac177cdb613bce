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

#ifndef DENOISE_ERRORS_H_
#define DENOISE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace denoise {

// Process exit codes reported by the CLI. Library errors carry the kind they
// should map to so command wrappers stay free of per-error switch statements.
enum class ErrorKind {
  kConfig = 2,
  kData = 3,
  kNumeric = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define DENOISE_DEFINE_ERROR(NAME, KIND)                    \
  class NAME : public Error {                               \
   public:                                                  \
    explicit NAME(const std::string& what)                  \
        : Error(ErrorKind::KIND, std::string(#NAME ": ") + what) {} \
  }

// Audio I/O.
DENOISE_DEFINE_ERROR(UnsupportedFormat, kData);
DENOISE_DEFINE_ERROR(CorruptFile, kData);
DENOISE_DEFINE_ERROR(IoFailure, kData);

// DSP.
DENOISE_DEFINE_ERROR(SignalTooShort, kData);
DENOISE_DEFINE_ERROR(DimensionMismatch, kData);
DENOISE_DEFINE_ERROR(TooFewFrames, kData);

// Mixing and manifests.
DENOISE_DEFINE_ERROR(SilentClean, kData);
DENOISE_DEFINE_ERROR(SilentNoiseMixture, kData);
DENOISE_DEFINE_ERROR(EmptyCorpus, kData);
DENOISE_DEFINE_ERROR(CountTooSmall, kConfig);

// Psychoacoustics.
DENOISE_DEFINE_ERROR(NonPositiveFrequency, kData);

// Network and training.
DENOISE_DEFINE_ERROR(BadDims, kConfig);
DENOISE_DEFINE_ERROR(DimMismatch, kConfig);
DENOISE_DEFINE_ERROR(EmptyDataset, kData);
DENOISE_DEFINE_ERROR(DivergedLoss, kNumeric);
DENOISE_DEFINE_ERROR(VersionMismatch, kData);
DENOISE_DEFINE_ERROR(ChecksumMismatch, kData);

// Pipeline.
DENOISE_DEFINE_ERROR(IndexOutOfRange, kData);
DENOISE_DEFINE_ERROR(LengthMismatch, kData);

// Metrics.
DENOISE_DEFINE_ERROR(ShapeMismatch, kData);
DENOISE_DEFINE_ERROR(TooShort, kData);
DENOISE_DEFINE_ERROR(AllSilent, kData);

// CLI.
DENOISE_DEFINE_ERROR(MissingEnhanced, kData);
DENOISE_DEFINE_ERROR(ConfigError, kConfig);

#undef DENOISE_DEFINE_ERROR

}  // namespace denoise

#endif  // DENOISE_ERRORS_H_
