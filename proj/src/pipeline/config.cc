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

#include "forge/pipeline/config.h"

#include <algorithm>
#include <filesystem>
#include <set>

#include "forge/error.h"
#include "forge/hash.h"
#include "forge/io.h"
#include "json.hpp"

namespace forge {
namespace {

using json = nlohmann::json;

void CheckKeys(const json &obj, const std::string &where,
               const std::set<std::string> &allowed) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto &[key, value] : obj.items()) {
    if (allowed.count(key) == 0) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
}

template <typename T>
T Get(const json &obj, const std::string &key, const std::string &where, T fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception &) {
    throw ConfigError(where + "." + key + ": wrong type");
  }
}

size_t GetCount(const json &obj, const std::string &key, const std::string &where,
                size_t fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer() || it->get<long long>() < 0) {
    throw ConfigError(where + "." + key + ": expected a non-negative integer");
  }
  return it->get<size_t>();
}

std::string Resolve(const std::string &base_dir, const std::string &path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

std::string GetPath(const json &obj, const std::string &key, const std::string &where,
                    const std::string &base_dir) {
  return Resolve(base_dir, Get<std::string>(obj, key, where, ""));
}

}  // namespace

PipelineConfig ParseConfig(std::string_view json_text, const std::string &base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  CheckKeys(root, "config",
            {"source_lang", "target_lang", "seed", "documents", "stages",
             "normalize", "segment", "translit", "align", "clean", "bpe",
             "vocab", "split", "output_dir"});

  PipelineConfig cfg;
  // The output location does not affect the results, so it is not hashed.
  json hashed = root;
  hashed.erase("output_dir");
  cfg.canonical = hashed.dump();
  cfg.hash = Sha256Hex(cfg.canonical);

  cfg.source_lang = Get<std::string>(root, "source_lang", "config", "am");
  cfg.target_lang = Get<std::string>(root, "target_lang", "config", "en");
  cfg.source_profile = ParseLangProfile(cfg.source_lang);
  cfg.target_profile = ParseLangProfile(cfg.target_lang);

  if (!root.contains("seed") || !root["seed"].is_number_integer()) {
    throw ConfigError("config.seed: an integer seed is required");
  }
  cfg.seed = root["seed"].get<uint64_t>();

  if (!root.contains("documents") || !root["documents"].is_array() ||
      root["documents"].empty()) {
    throw ConfigError("config.documents: at least one document is required");
  }
  std::set<std::string> ids;
  for (size_t i = 0; i < root["documents"].size(); ++i) {
    const json &d = root["documents"][i];
    const std::string where = "config.documents[" + std::to_string(i) + "]";
    CheckKeys(d, where, {"id", "label", "source", "target", "boilerplate"});
    DocumentSpec doc;
    doc.id = Get<std::string>(d, "id", where, "");
    if (doc.id.empty()) throw ConfigError(where + ".id: required");
    if (doc.id.find_first_of("/\\\t\n ") != std::string::npos) {
      throw ConfigError(where + ".id: must not contain separators or spaces");
    }
    if (!ids.insert(doc.id).second) throw ConfigError(where + ".id: duplicate id");
    doc.label = Get<std::string>(d, "label", where, doc.id);
    doc.source_path = GetPath(d, "source", where, base_dir);
    doc.target_path = GetPath(d, "target", where, base_dir);
    if (doc.source_path.empty() || doc.target_path.empty()) {
      throw ConfigError(where + ": source and target paths are required");
    }
    doc.boilerplate_path = GetPath(d, "boilerplate", where, base_dir);
    cfg.documents.push_back(std::move(doc));
  }

  if (root.contains("stages")) {
    const json &s = root["stages"];
    CheckKeys(s, "config.stages", {"normalize", "segment", "translit", "bpe", "vocab"});
    cfg.stages.normalize = Get<bool>(s, "normalize", "config.stages", true);
    cfg.stages.segment = Get<bool>(s, "segment", "config.stages", true);
    cfg.stages.translit = Get<bool>(s, "translit", "config.stages", true);
    cfg.stages.bpe = Get<bool>(s, "bpe", "config.stages", true);
    cfg.stages.vocab = Get<bool>(s, "vocab", "config.stages", true);
  }

  if (root.contains("normalize")) {
    const json &n = root["normalize"];
    CheckKeys(n, "config.normalize", {"source_table", "target_table"});
    cfg.source_table = GetPath(n, "source_table", "config.normalize", base_dir);
    cfg.target_table = GetPath(n, "target_table", "config.normalize", base_dir);
  }
  if (root.contains("segment")) {
    const json &n = root["segment"];
    CheckKeys(n, "config.segment", {"source_wordlist", "target_wordlist"});
    cfg.source_wordlist = GetPath(n, "source_wordlist", "config.segment", base_dir);
    cfg.target_wordlist = GetPath(n, "target_wordlist", "config.segment", base_dir);
  }
  if (root.contains("translit")) {
    CheckKeys(root["translit"], "config.translit", {"table"});
    cfg.translit_table = GetPath(root["translit"], "table", "config.translit", base_dir);
  }

  if (root.contains("align")) {
    const json &a = root["align"];
    const std::string where = "config.align";
    CheckKeys(a, where,
              {"pass1_threshold", "threshold", "iterations", "floor",
               "min_word_count", "bead_priors", "min_band"});
    cfg.align.pass1_threshold =
        Get<double>(a, "pass1_threshold", where, cfg.align.pass1_threshold);
    cfg.align.threshold = Get<double>(a, "threshold", where, cfg.align.threshold);
    cfg.align.iterations = Get<int>(a, "iterations", where, cfg.align.iterations);
    cfg.align.floor = Get<double>(a, "floor", where, cfg.align.floor);
    cfg.align.min_word_count =
        Get<int>(a, "min_word_count", where, cfg.align.min_word_count);
    cfg.align.lattice.min_band =
        GetCount(a, "min_band", where, cfg.align.lattice.min_band);
    if (a.contains("bead_priors")) {
      const json &p = a["bead_priors"];
      CheckKeys(p, where + ".bead_priors", {"1-1", "1-0", "0-1", "2-1", "1-2"});
      for (BeadType type : kBeadTypes) {
        cfg.align.bead_priors[BeadIndex(type)] =
            Get<double>(p, BeadTypeName(type), where + ".bead_priors",
                        cfg.align.bead_priors[BeadIndex(type)]);
      }
    }
  }
  try {
    cfg.align.Validate();
  } catch (const ConfigError &e) {
    throw ConfigError(std::string("config.align: ") + e.what());
  }

  if (root.contains("clean")) {
    const json &c = root["clean"];
    CheckKeys(c, "config.clean", {"max_tokens", "max_ratio"});
    cfg.clean.max_tokens = GetCount(c, "max_tokens", "config.clean", cfg.clean.max_tokens);
    cfg.clean.max_ratio = Get<double>(c, "max_ratio", "config.clean", cfg.clean.max_ratio);
  }
  try {
    cfg.clean.Validate();
  } catch (const ConfigError &e) {
    throw ConfigError(std::string("config.clean: ") + e.what());
  }

  if (root.contains("bpe")) {
    const json &b = root["bpe"];
    CheckKeys(b, "config.bpe", {"merges", "joint"});
    cfg.bpe_joint = Get<bool>(b, "joint", "config.bpe", true);
    if (b.contains("merges")) {
      const json &m = b["merges"];
      cfg.bpe_merges.clear();
      if (!m.is_array() || m.empty()) {
        throw ConfigError("config.bpe.merges: expected a non-empty list");
      }
      for (const json &v : m) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
          throw ConfigError("config.bpe.merges: expected non-negative integers");
        }
        cfg.bpe_merges.push_back(v.get<size_t>());
      }
      std::sort(cfg.bpe_merges.begin(), cfg.bpe_merges.end());
      cfg.bpe_merges.erase(std::unique(cfg.bpe_merges.begin(), cfg.bpe_merges.end()),
                           cfg.bpe_merges.end());
    }
  }
  if (root.contains("vocab")) {
    CheckKeys(root["vocab"], "config.vocab", {"top_k"});
    cfg.vocab_top_k = GetCount(root["vocab"], "top_k", "config.vocab", cfg.vocab_top_k);
    if (cfg.vocab_top_k < 1) throw ConfigError("config.vocab.top_k: must be >= 1");
  }

  if (!root.contains("split")) throw ConfigError("config.split: required");
  {
    const json &s = root["split"];
    CheckKeys(s, "config.split", {"train", "dev", "test"});
    if (s.contains("train")) cfg.split.train = GetCount(s, "train", "config.split", 0);
    cfg.split.dev = GetCount(s, "dev", "config.split", 0);
    cfg.split.test = GetCount(s, "test", "config.split", 0);
    if (cfg.split.dev == 0 || cfg.split.test == 0 ||
        (cfg.split.train && *cfg.split.train == 0)) {
      throw ConfigError("config.split: sizes must be positive");
    }
  }

  cfg.output_dir = Get<std::string>(root, "output_dir", "config", "");
  cfg.output_dir = Resolve(base_dir, cfg.output_dir.empty() ? "forge_out" : cfg.output_dir);
  return cfg;
}

PipelineConfig LoadConfig(const std::string &path) {
  const std::string base =
      std::filesystem::path(path).parent_path().string();
  return ParseConfig(ReadFile(path), base.empty() ? "." : base);
}

}  // namespace forge
