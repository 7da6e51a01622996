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

// Pipeline configuration.
//
// The configuration is a JSON object. Unknown keys are rejected, relative
// paths resolve against the directory holding the file, and empty table
// paths select the tables shipped in the data directory. Example:
//
//   {
//     "source_lang": "am", "target_lang": "en", "seed": 7,
//     "documents": [
//       {"id": "news", "label": "News", "source": "news.am.html",
//        "target": "news.en.html", "boilerplate": "web_rules.tsv"}
//     ],
//     "split": {"dev": 5, "test": 5}
//   }

#ifndef FORGE_PIPELINE_CONFIG_H_
#define FORGE_PIPELINE_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "forge/align/aligner.h"
#include "forge/clean.h"
#include "forge/pipeline/split.h"
#include "forge/textnorm.h"

namespace forge {

struct DocumentSpec {
  std::string id;
  // Free-form source label (for example the publisher).
  std::string label;
  std::string source_path;
  std::string target_path;
  // Optional boilerplate rule file applied to both sides.
  std::string boilerplate_path;
};

struct StageToggles {
  bool normalize = true;
  bool segment = true;
  bool translit = true;
  bool bpe = true;
  bool vocab = true;
};

struct PipelineConfig {
  std::string source_lang = "am";
  std::string target_lang = "en";
  LangProfile source_profile = LangProfile::kEthiopic;
  LangProfile target_profile = LangProfile::kLatin;

  std::vector<DocumentSpec> documents;
  StageToggles stages;

  std::string source_table;
  std::string target_table;
  std::string source_wordlist;
  std::string target_wordlist;
  std::string translit_table;

  AlignConfig align;
  CleanConfig clean;

  // Merge counts to emit; one model is learned with the largest count and
  // the smaller models are its prefixes.
  std::vector<size_t> bpe_merges = {1000, 2000, 4000, 8000, 16000};
  bool bpe_joint = true;
  size_t vocab_top_k = 44000;

  SplitSizes split;
  uint64_t seed = 0;

  // Output directory; empty means "forge_out" beside the config file.
  std::string output_dir;

  // Canonical serialization (sorted keys, no whitespace) of the input
  // without output_dir, and its SHA-256.
  std::string canonical;
  std::string hash;
};

// Throws ConfigError naming the offending key.
PipelineConfig ParseConfig(std::string_view json_text, const std::string &base_dir);
PipelineConfig LoadConfig(const std::string &path);

}  // namespace forge

#endif  // FORGE_PIPELINE_CONFIG_H_
