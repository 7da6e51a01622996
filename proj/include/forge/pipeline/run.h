// Copyright 2026 The Forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end corpus construction and its manifest.
//
// Stages: ingest, normalize, segment, align, clean, split, then translit,
// bpe and vocab on the split files. Every artifact is written under the
// output directory and listed in manifest.json with its SHA-256. The
// manifest holds no timestamps or absolute paths, so identical inputs and
// configuration give identical bytes.

#ifndef FORGE_PIPELINE_RUN_H_
#define FORGE_PIPELINE_RUN_H_

#include <map>
#include <string>
#include <vector>

#include "forge/clean.h"
#include "forge/error.h"
#include "forge/pipeline/config.h"
#include "forge/pipeline/split.h"

namespace forge {

inline constexpr char kToolVersion[] = "forge 0.1.0";

// Wraps a failure with the stage and the input it was processing.
class StageError : public Error {
 public:
  StageError(const std::string &stage, const std::string &input,
             const std::string &detail)
      : Error("stage " + stage + " failed on " + input + ": " + detail),
        stage_(stage),
        input_(input) {}

  const std::string &stage() const { return stage_; }
  const std::string &input() const { return input_; }

 private:
  std::string stage_;
  std::string input_;
};

struct DocumentCounts {
  std::string id;
  std::string label;
  size_t source_sentences = 0;
  size_t target_sentences = 0;
  size_t pairs = 0;

  size_t source_unaligned() const { return source_sentences - pairs; }
  size_t target_unaligned() const { return target_sentences - pairs; }
};

struct Manifest {
  std::string tool_version = kToolVersion;
  std::string config_hash;
  uint64_t seed = 0;
  std::string source_lang;
  std::string target_lang;
  // "<document id>.<source|target>" -> SHA-256 of the raw input.
  std::map<std::string, std::string> inputs;
  // Data tables in effect -> SHA-256 of their contents.
  std::map<std::string, std::string> resources;
  std::vector<DocumentCounts> documents;
  size_t training_pairs = 0;
  std::vector<double> em_log_likelihood;
  RejectionReport clean;
  ResolvedSplit split;
  std::vector<size_t> bpe_merges;
  // Path relative to the output directory -> SHA-256.
  std::map<std::string, std::string> outputs;

  size_t TotalPairs() const;

  // Throws Error if any of the accounting identities fails: document pair
  // counts sum to the cleaning input, kept plus rejected equals input, and
  // the split covers exactly the kept pairs.
  void CheckAccounting() const;

  // Pretty-printed JSON with a trailing newline.
  std::string ToJson() const;
};

struct RunResult {
  Manifest manifest;
  std::string manifest_path;
  std::string manifest_hash;
};

// Runs every enabled stage and writes the outputs. `output_dir` overrides
// the configured directory when non-empty.
RunResult Run(const PipelineConfig &config, const std::string &output_dir = "");

}  // namespace forge

#endif  // FORGE_PIPELINE_RUN_H_
