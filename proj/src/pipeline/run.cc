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

#include "forge/pipeline/run.h"

#include <cstdio>
#include <filesystem>
#include <functional>

#include "forge/align/aligner.h"
#include "forge/hash.h"
#include "forge/io.h"
#include "forge/pipeline/ingest.h"
#include "forge/segment.h"
#include "forge/subword.h"
#include "forge/textnorm.h"
#include "forge/translit.h"
#include "forge/unicode.h"
#include "json.hpp"

namespace forge {
namespace {

namespace fs = std::filesystem;

// Runs `body`, rethrowing toolkit errors as StageError.
template <typename Fn>
auto InStage(const std::string &stage, const std::string &input, Fn &&body) {
  try {
    return body();
  } catch (const StageError &) {
    throw;
  } catch (const std::exception &e) {
    throw StageError(stage, input, e.what());
  }
}

std::string FormatPosterior(double p) {
  char buf[32];
  snprintf(buf, sizeof(buf), "%.6f", p);
  return buf;
}

std::string PairLine(const AlignedPair &pair) {
  return pair.provenance + "\t" + std::to_string(pair.src_index) + "\t" +
         std::to_string(pair.tgt_index) + "\t" + FormatPosterior(pair.posterior) +
         "\t" + pair.src_sentence + "\t" + pair.tgt_sentence;
}

class OutputWriter {
 public:
  explicit OutputWriter(std::string root) : root_(std::move(root)) {}

  void Write(const std::string &relative, const std::string &contents) {
    const fs::path path = fs::path(root_) / relative;
    fs::create_directories(path.parent_path());
    WriteFile(path.string(), contents);
    hashes_[relative] = Sha256Hex(contents);
  }

  void WriteLines(const std::string &relative, const std::vector<std::string> &lines) {
    Write(relative, JoinLines(lines));
  }

  const std::map<std::string, std::string> &hashes() const { return hashes_; }
  const std::string &root() const { return root_; }

 private:
  std::string root_;
  std::map<std::string, std::string> hashes_;
};

std::vector<std::string> Column(const std::vector<AlignedPair> &pairs, bool source) {
  std::vector<std::string> out;
  out.reserve(pairs.size());
  for (const AlignedPair &p : pairs) out.push_back(source ? p.src_sentence : p.tgt_sentence);
  return out;
}

struct SideResources {
  NormalizationTable table;
  NegativeWordlist wordlist;
};

SideResources LoadSide(LangProfile profile, const std::string &table_path,
                       const std::string &wordlist_path, const std::string &side,
                       Manifest *manifest) {
  SideResources res;
  const std::string table_file =
      table_path.empty() ? DefaultNormalizationTablePath(profile) : table_path;
  const std::string wordlist_file =
      wordlist_path.empty() ? DefaultWordlistPath(profile) : wordlist_path;
  InStage("normalize", table_file, [&] {
    const std::string contents = ReadFile(table_file);
    res.table = ParseNormalizationTable(contents, profile);
    manifest->resources["normalize." + side] = Sha256Hex(contents);
    return 0;
  });
  InStage("segment", wordlist_file, [&] {
    const std::string contents = ReadFile(wordlist_file);
    res.wordlist = ParseWordlist(contents, profile);
    manifest->resources["segment." + side] = Sha256Hex(contents);
    return 0;
  });
  return res;
}

std::vector<std::string> ToSentences(const std::string &text, LangProfile profile,
                                     const SideResources &res,
                                     const StageToggles &stages,
                                     const std::string &input) {
  const std::string normalized =
      stages.normalize
          ? InStage("normalize", input,
                    [&] { return Normalize(text, profile, res.table); })
          : text;
  return InStage("segment", input, [&] {
    std::vector<std::string> sentences;
    for (const std::string &line : SplitLines(normalized)) {
      if (stages.segment) {
        for (std::string &s : SplitSentences(line, profile, res.wordlist)) {
          sentences.push_back(std::move(s));
        }
      } else {
        std::string trimmed = CollapseWhitespace(line);
        if (!trimmed.empty()) sentences.push_back(std::move(trimmed));
      }
    }
    return sentences;
  });
}

}  // namespace

size_t Manifest::TotalPairs() const {
  size_t total = 0;
  for (const DocumentCounts &doc : documents) total += doc.pairs;
  return total;
}

void Manifest::CheckAccounting() const {
  for (const DocumentCounts &doc : documents) {
    if (doc.pairs > doc.source_sentences || doc.pairs > doc.target_sentences) {
      throw Error("manifest: document " + doc.id + " has more pairs than sentences");
    }
  }
  if (TotalPairs() != clean.input) {
    throw Error("manifest: document pairs sum to " + std::to_string(TotalPairs()) +
                " but cleaning saw " + std::to_string(clean.input));
  }
  if (clean.kept + clean.rejected() != clean.input) {
    throw Error("manifest: cleaning counts do not add up");
  }
  if (split.total() != clean.kept) {
    throw Error("manifest: split covers " + std::to_string(split.total()) +
                " pairs but " + std::to_string(clean.kept) + " were kept");
  }
}

std::string Manifest::ToJson() const {
  using json = nlohmann::ordered_json;
  json j;
  j["tool_version"] = tool_version;
  j["config_sha256"] = config_hash;
  j["seed"] = seed;
  j["source_lang"] = source_lang;
  j["target_lang"] = target_lang;
  j["inputs"] = inputs;
  j["resources"] = resources;
  json docs = json::array();
  for (const DocumentCounts &d : documents) {
    docs.push_back({{"id", d.id},
                    {"label", d.label},
                    {"source_sentences", d.source_sentences},
                    {"target_sentences", d.target_sentences},
                    {"pairs", d.pairs},
                    {"source_unaligned", d.source_unaligned()},
                    {"target_unaligned", d.target_unaligned()}});
  }
  j["documents"] = docs;
  j["total_pairs"] = TotalPairs();
  j["align"] = {{"training_pairs", training_pairs},
                {"em_log_likelihood", em_log_likelihood}};
  j["clean"] = {{"input", clean.input},
                {"kept", clean.kept},
                {"rejected_empty", clean.empty},
                {"rejected_too_long", clean.too_long},
                {"rejected_ratio", clean.ratio}};
  j["split"] = {{"strategy", "uniform"},
                {"train", split.train},
                {"dev", split.dev},
                {"test", split.test},
                {"unassigned", split.unassigned}};
  j["bpe_merges"] = bpe_merges;
  j["outputs"] = outputs;
  return j.dump(2) + "\n";
}

RunResult Run(const PipelineConfig &config, const std::string &output_dir) {
  if (config.documents.empty()) throw ConfigError("no documents configured");
  OutputWriter out(output_dir.empty() ? config.output_dir : output_dir);

  Manifest manifest;
  manifest.config_hash = config.hash;
  manifest.seed = config.seed;
  manifest.source_lang = config.source_lang;
  manifest.target_lang = config.target_lang;

  const SideResources src_res =
      LoadSide(config.source_profile, config.source_table, config.source_wordlist,
               "source", &manifest);
  const SideResources tgt_res =
      LoadSide(config.target_profile, config.target_table, config.target_wordlist,
               "target", &manifest);

  // Ingest, normalize and segment each document.
  std::vector<DocumentPair> docs;
  for (const DocumentSpec &spec : config.documents) {
    BoilerplateRules rules;
    if (!spec.boilerplate_path.empty()) {
      rules = InStage("ingest", spec.id, [&] {
        const std::string contents = ReadFile(spec.boilerplate_path);
        manifest.resources["boilerplate." + spec.id] = Sha256Hex(contents);
        return ParseBoilerplateRules(contents);
      });
    }
    DocumentPair doc;
    doc.id = spec.id;
    for (int side = 0; side < 2; ++side) {
      const bool is_source = side == 0;
      const std::string name = spec.id + (is_source ? ".source" : ".target");
      const std::string &path = is_source ? spec.source_path : spec.target_path;
      const std::string text = InStage("ingest", name, [&] {
        const std::string raw = ReadFile(path);
        manifest.inputs[name] = Sha256Hex(raw);
        return StripMarkup(raw, rules);
      });
      const std::string &lang = is_source ? config.source_lang : config.target_lang;
      out.Write("ingest/" + spec.id + "." + lang + ".txt", text);
      Document &d = is_source ? doc.source : doc.target;
      d.id = spec.id;
      d.language = lang;
      d.sentences = ToSentences(text, is_source ? config.source_profile : config.target_profile,
                                is_source ? src_res : tgt_res, config.stages, name);
      out.WriteLines("sentences/" + spec.id + "." + lang + ".txt", d.sentences);
    }
    docs.push_back(std::move(doc));
  }

  const CorpusAlignment aligned =
      InStage("align", "corpus", [&] { return AlignCorpus(docs, config.align); });
  std::vector<AlignedPair> all_pairs;
  std::vector<std::string> aligned_lines;
  for (size_t i = 0; i < docs.size(); ++i) {
    DocumentCounts counts;
    counts.id = config.documents[i].id;
    counts.label = config.documents[i].label;
    counts.source_sentences = docs[i].source.sentences.size();
    counts.target_sentences = docs[i].target.sentences.size();
    counts.pairs = aligned.pairs[i].size();
    manifest.documents.push_back(counts);
    for (const AlignedPair &pair : aligned.pairs[i]) {
      aligned_lines.push_back(PairLine(pair));
      all_pairs.push_back(pair);
    }
  }
  manifest.training_pairs = aligned.training_pairs;
  manifest.em_log_likelihood = aligned.em_log_likelihood;
  out.WriteLines("aligned.tsv", aligned_lines);
  out.Write("ttable.tsv", aligned.table.ToTsv());

  const CleanResult cleaned =
      InStage("clean", "corpus", [&] { return FilterPairs(all_pairs, config.clean); });
  manifest.clean = cleaned.report;
  std::vector<std::string> clean_lines;
  for (const AlignedPair &pair : cleaned.kept) clean_lines.push_back(PairLine(pair));
  out.WriteLines("clean.tsv", clean_lines);

  const CorpusSplit split = InStage("split", "corpus", [&] {
    return SplitCorpus(cleaned.kept, config.split, config.seed);
  });
  manifest.split = split.sizes;
  const std::vector<std::pair<std::string, const std::vector<AlignedPair> *>> parts = {
      {"train", &split.train}, {"dev", &split.dev}, {"test", &split.test}};
  const std::string &src_lang = config.source_lang;
  const std::string &tgt_lang = config.target_lang;
  for (const auto &[name, pairs] : parts) {
    out.WriteLines("split/" + name + "." + src_lang, Column(*pairs, true));
    out.WriteLines("split/" + name + "." + tgt_lang, Column(*pairs, false));
  }

  if (config.stages.translit) {
    const std::string table_file = config.translit_table.empty()
                                       ? TranslitTable::DefaultPath()
                                       : config.translit_table;
    const TranslitTable table = InStage("translit", table_file, [&] {
      const std::string contents = ReadFile(table_file);
      manifest.resources["translit"] = Sha256Hex(contents);
      return TranslitTable::Parse(contents);
    });
    for (int side = 0; side < 2; ++side) {
      const bool is_source = side == 0;
      if ((is_source ? config.source_profile : config.target_profile) !=
          LangProfile::kEthiopic) {
        continue;
      }
      const std::string &lang = is_source ? src_lang : tgt_lang;
      for (const auto &[name, pairs] : parts) {
        std::vector<std::string> lines;
        for (const AlignedPair &pair : *pairs) {
          lines.push_back(InStage("translit", pair.provenance, [&] {
            return table.Romanize(is_source ? pair.src_sentence : pair.tgt_sentence);
          }));
        }
        out.WriteLines("translit/" + name + "." + lang + ".latn", lines);
      }
    }
  }

  if (config.stages.bpe) {
    manifest.bpe_merges = config.bpe_merges;
    const size_t max_merges = config.bpe_merges.back();
    // One model per side unless learning jointly.
    std::vector<std::pair<std::string, BpeModel>> models;
    const std::vector<std::string> train_src = Column(split.train, true);
    const std::vector<std::string> train_tgt = Column(split.train, false);
    InStage("bpe", "train", [&] {
      if (config.bpe_joint) {
        std::vector<std::string> lines = train_src;
        lines.insert(lines.end(), train_tgt.begin(), train_tgt.end());
        models.emplace_back("joint", LearnBpe(CountWords(lines), max_merges));
      } else {
        models.emplace_back(src_lang, LearnBpe(CountWords(train_src), max_merges));
        models.emplace_back(tgt_lang, LearnBpe(CountWords(train_tgt), max_merges));
      }
      return 0;
    });
    for (size_t n : config.bpe_merges) {
      const std::string dir = "bpe/" + std::to_string(n) + "/";
      std::vector<BpeEncoder> encoders;
      for (const auto &[name, model] : models) {
        BpeModel prefix;
        prefix.merges.assign(model.merges.begin(),
                             model.merges.begin() + std::min(n, model.merges.size()));
        out.Write(dir + "merges." + name + ".txt", prefix.ToText());
        encoders.emplace_back(std::move(prefix));
      }
      std::vector<std::string> train_tokens;
      for (const auto &[name, pairs] : parts) {
        for (int side = 0; side < 2; ++side) {
          BpeEncoder &encoder = encoders[encoders.size() == 1 ? 0 : side];
          std::vector<std::string> lines;
          for (const std::string &line : Column(*pairs, side == 0)) {
            lines.push_back(encoder.EncodeLine(line));
            if (name == "train") {
              for (std::string &tok : SplitWhitespace(lines.back())) {
                train_tokens.push_back(std::move(tok));
              }
            }
          }
          out.WriteLines(dir + name + "." + (side == 0 ? src_lang : tgt_lang), lines);
        }
      }
      if (config.stages.vocab) {
        out.Write(dir + "vocab.tsv", BuildVocab(train_tokens, config.vocab_top_k).ToTsv());
      }
    }
  } else if (config.stages.vocab) {
    std::vector<std::string> tokens;
    for (const AlignedPair &pair : split.train) {
      for (std::string &t : SplitWhitespace(pair.src_sentence)) tokens.push_back(std::move(t));
      for (std::string &t : SplitWhitespace(pair.tgt_sentence)) tokens.push_back(std::move(t));
    }
    out.Write("vocab.tsv", BuildVocab(tokens, config.vocab_top_k).ToTsv());
  }

  manifest.outputs = out.hashes();
  manifest.CheckAccounting();

  RunResult result;
  result.manifest = manifest;
  const std::string json_text = manifest.ToJson();
  result.manifest_path = (fs::path(out.root()) / "manifest.json").string();
  WriteFile(result.manifest_path, json_text);
  result.manifest_hash = Sha256Hex(json_text);
  return result;
}

}  // namespace forge
