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

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "denoise/errors.h"
#include "denoise/synth.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate a deterministic synthetic speech/noise corpus"};
  std::string root = "corpus";
  denoise::CorpusSpec spec;
  app.add_option("--out", root, "Corpus root directory");
  app.add_option("--train", spec.train_clean, "Clean training utterances");
  app.add_option("--validation", spec.validation_clean,
                 "Clean validation utterances");
  app.add_option("--test", spec.test_clean, "Clean test utterances");
  app.add_option("--speech-seconds", spec.speech_seconds,
                 "Utterance duration");
  app.add_option("--noise-seconds", spec.noise_seconds,
                 "Noise recording duration");
  app.add_option("--seed", spec.seed, "Corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    denoise::WriteCorpus(root, spec);
  } catch (const denoise::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  std::printf("corpus written under %s\n", root.c_str());
  return 0;
}
