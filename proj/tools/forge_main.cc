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

// forge: command-line front end for the corpus toolkit.

#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "forge/align/aligner.h"
#include "forge/clean.h"
#include "forge/error.h"
#include "forge/io.h"
#include "forge/metrics.h"
#include "forge/pipeline/config.h"
#include "forge/pipeline/run.h"
#include "forge/segment.h"
#include "forge/subword.h"
#include "forge/textnorm.h"
#include "forge/translit.h"
#include "forge/unicode.h"
#include "json.hpp"

namespace {

using forge::LangProfile;

std::string ReadInput(const std::string &path) {
  if (path.empty() || path == "-") return forge::ReadStream(std::cin);
  return forge::ReadFile(path);
}

void WriteOutput(const std::string &contents) {
  std::fwrite(contents.data(), 1, contents.size(), stdout);
}

std::string FormatDouble(double v, const char *fmt = "%.6f") {
  char buf[64];
  snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

struct NormalizeArgs {
  std::string lang;
  std::string table;
  std::string input;
};

void RunNormalize(const NormalizeArgs &args) {
  const LangProfile profile = forge::ParseLangProfile(args.lang);
  const forge::NormalizationTable table = forge::LoadNormalizationTable(
      args.table.empty() ? forge::DefaultNormalizationTablePath(profile) : args.table,
      profile);
  std::vector<std::string> lines;
  for (const std::string &line : forge::SplitLines(ReadInput(args.input))) {
    lines.push_back(forge::Normalize(line, profile, table));
  }
  WriteOutput(forge::JoinLines(lines));
}

struct SegmentArgs {
  std::string lang;
  std::string wordlist;
  std::string input;
};

void RunSegment(const SegmentArgs &args) {
  const LangProfile profile = forge::ParseLangProfile(args.lang);
  const forge::NegativeWordlist list = forge::LoadWordlist(
      args.wordlist.empty() ? forge::DefaultWordlistPath(profile) : args.wordlist,
      profile);
  std::vector<std::string> sentences;
  for (const std::string &line : forge::SplitLines(ReadInput(args.input))) {
    for (std::string &s : forge::SplitSentences(line, profile, list)) {
      sentences.push_back(std::move(s));
    }
  }
  WriteOutput(forge::JoinLines(sentences));
}

struct AlignArgs {
  std::string src;
  std::string tgt;
  double pass1_threshold = 0.99;
  double threshold = 0.5;
  int iterations = 4;
  std::string ttable_out;
};

void RunAlign(const AlignArgs &args) {
  forge::DocumentPair doc;
  doc.id = "input";
  doc.source.sentences = forge::ReadLines(args.src);
  doc.target.sentences = forge::ReadLines(args.tgt);
  forge::AlignConfig cfg;
  cfg.pass1_threshold = args.pass1_threshold;
  cfg.threshold = args.threshold;
  cfg.iterations = args.iterations;
  const forge::CorpusAlignment result = forge::AlignCorpus({doc}, cfg);
  std::string out;
  for (const forge::AlignedPair &pair : result.pairs[0]) {
    out += std::to_string(pair.src_index) + "\t" + std::to_string(pair.tgt_index) +
           "\t" + FormatDouble(pair.posterior) + "\t" + pair.src_sentence + "\t" +
           pair.tgt_sentence + "\n";
  }
  WriteOutput(out);
  if (!args.ttable_out.empty()) forge::WriteFile(args.ttable_out, result.table.ToTsv());
}

struct CleanArgs {
  size_t max_len = 80;
  double max_ratio = 9.0;
  std::string report;
  std::string input;
};

// Input lines are TSV whose last two columns are the source and target
// sentences, so both "src\ttgt" files and aligner output are accepted.
void RunClean(const CleanArgs &args) {
  forge::CleanConfig cfg;
  cfg.max_tokens = args.max_len;
  cfg.max_ratio = args.max_ratio;
  cfg.Validate();
  std::vector<std::string> kept;
  forge::RejectionReport report;
  size_t line_number = 0;
  for (const std::string &line : forge::SplitLines(ReadInput(args.input))) {
    ++line_number;
    const std::vector<std::string> cells = forge::SplitTabs(line);
    if (cells.size() < 2) {
      throw forge::InvalidArgument("line " + std::to_string(line_number) +
                                   ": expected at least two tab-separated columns");
    }
    ++report.input;
    switch (forge::Classify(forge::CountTokens(cells[cells.size() - 2]),
                            forge::CountTokens(cells.back()), cfg)) {
      case forge::RejectReason::kNone: kept.push_back(line); break;
      case forge::RejectReason::kEmpty: ++report.empty; break;
      case forge::RejectReason::kTooLong: ++report.too_long; break;
      case forge::RejectReason::kRatio: ++report.ratio; break;
    }
  }
  report.kept = kept.size();
  WriteOutput(forge::JoinLines(kept));
  if (!args.report.empty()) {
    nlohmann::ordered_json j = {{"input", report.input},
                                {"kept", report.kept},
                                {"rejected_empty", report.empty},
                                {"rejected_too_long", report.too_long},
                                {"rejected_ratio", report.ratio}};
    forge::WriteFile(args.report, j.dump(2) + "\n");
  }
}

struct TranslitArgs {
  bool to_latin = false;
  bool to_ethiopic = false;
  std::string table;
  std::string input;
};

void RunTranslit(const TranslitArgs &args) {
  const forge::TranslitTable table = forge::TranslitTable::Load(
      args.table.empty() ? forge::TranslitTable::DefaultPath() : args.table);
  std::vector<std::string> lines;
  for (const std::string &line : forge::SplitLines(ReadInput(args.input))) {
    lines.push_back(args.to_latin ? table.Romanize(line) : table.Deromanize(line));
  }
  WriteOutput(forge::JoinLines(lines));
}

struct BpeArgs {
  size_t merges = 4000;
  std::string codes;
  std::string input;
  bool trace = false;
};

void RunBpeLearn(const BpeArgs &args) {
  std::vector<forge::LearnedMerge> trace;
  const forge::BpeModel model = forge::LearnBpe(
      forge::CountWords(forge::SplitLines(ReadInput(args.input))), args.merges,
      args.trace ? &trace : nullptr);
  if (args.trace) {
    for (const forge::LearnedMerge &m : trace) {
      std::cerr << m.pair.first << ' ' << m.pair.second << '\t' << m.count << '\n';
    }
  }
  WriteOutput(model.ToText());
}

void RunBpeApply(const BpeArgs &args) {
  forge::BpeEncoder encoder(forge::BpeModel::FromText(forge::ReadFile(args.codes)));
  std::vector<std::string> lines;
  for (const std::string &line : forge::SplitLines(ReadInput(args.input))) {
    lines.push_back(encoder.EncodeLine(line));
  }
  WriteOutput(forge::JoinLines(lines));
}

void RunBpeUndo(const BpeArgs &args) {
  std::vector<std::string> lines;
  for (const std::string &line : forge::SplitLines(ReadInput(args.input))) {
    lines.push_back(forge::UndoBpeLine(line));
  }
  WriteOutput(forge::JoinLines(lines));
}

struct VocabArgs {
  size_t top_k = forge::kDefaultVocabSize;
  std::vector<std::string> inputs;
};

void RunVocab(const VocabArgs &args) {
  std::vector<std::string> lines;
  if (args.inputs.empty()) {
    lines = forge::SplitLines(ReadInput(""));
  } else {
    for (const std::string &path : args.inputs) {
      for (std::string &line : forge::SplitLines(ReadInput(path))) {
        lines.push_back(std::move(line));
      }
    }
  }
  WriteOutput(forge::BuildVocab(forge::CountWords(lines), args.top_k).ToTsv());
}

struct ScoreArgs {
  std::string metric = "bleu";
  std::string hyp;
  std::string ref;
  bool json = false;
};

void RunScore(const ScoreArgs &args) {
  const std::vector<std::string> hyps = forge::ReadLines(args.hyp);
  const std::vector<std::string> refs = forge::ReadLines(args.ref);
  nlohmann::ordered_json j;
  std::string text;
  if (args.metric == "bleu") {
    std::vector<forge::Tokens> h, r;
    for (const std::string &line : hyps) h.push_back(forge::SplitWhitespace(line));
    for (const std::string &line : refs) r.push_back(forge::SplitWhitespace(line));
    const forge::BleuScore s = forge::CorpusBleu(h, r);
    j = {{"metric", "bleu"},
         {"score", s.score},
         {"precisions", s.precisions},
         {"matches", s.matches},
         {"totals", s.totals},
         {"brevity_penalty", s.brevity_penalty},
         {"hyp_len", s.hyp_len},
         {"ref_len", s.ref_len}};
    text = "BLEU = " + FormatDouble(s.score, "%.2f") + " (BP = " +
           FormatDouble(s.brevity_penalty, "%.4f") + ", hyp_len = " +
           std::to_string(s.hyp_len) + ", ref_len = " + std::to_string(s.ref_len) + ")\n";
  } else {
    if (hyps.size() != refs.size()) {
      throw forge::InvalidArgument("hypothesis and reference counts differ");
    }
    nlohmann::ordered_json sentences = nlohmann::ordered_json::array();
    for (size_t i = 0; i < hyps.size(); ++i) {
      forge::CharTerScore s;
      try {
        s = forge::CharacterScore(hyps[i], refs[i]);
      } catch (const forge::InvalidArgument &e) {
        throw forge::InvalidArgument("sentence " + std::to_string(i) + ": " + e.what());
      }
      sentences.push_back({{"score", s.score},
                           {"shifts", s.shifts},
                           {"char_edits", s.char_edits},
                           {"hyp_chars", s.hyp_chars}});
    }
    const double score = forge::CorpusCharacter(hyps, refs);
    j = {{"metric", "character"}, {"score", score}, {"sentences", sentences}};
    text = "CharacTER = " + FormatDouble(score, "%.4f") + "\n";
  }
  WriteOutput(args.json ? j.dump(2) + "\n" : text);
}

struct RunArgs {
  std::string config;
  std::string out;
};

void RunPipeline(const RunArgs &args) {
  const forge::PipelineConfig config = forge::LoadConfig(args.config);
  const forge::RunResult result = forge::Run(config, args.out);
  const forge::Manifest &m = result.manifest;
  std::cerr << "documents: " << m.documents.size() << ", pairs: " << m.TotalPairs()
            << ", kept: " << m.clean.kept << ", split: " << m.split.train << "/"
            << m.split.dev << "/" << m.split.test << "\n";
  WriteOutput(result.manifest_path + "\t" + result.manifest_hash + "\n");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Parallel corpus construction toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", forge::kToolVersion);

  const std::vector<std::string> langs = {"am", "en", "ethiopic", "latin"};

  NormalizeArgs norm;
  auto *norm_cmd = app.add_subcommand("normalize", "Normalize text from stdin");
  norm_cmd->add_option("--lang", norm.lang, "Language profile")
      ->required()->check(CLI::IsMember(langs));
  norm_cmd->add_option("--table", norm.table, "Normalization table (TSV)");
  norm_cmd->add_option("--input", norm.input, "Input file (default stdin)");

  SegmentArgs seg;
  auto *seg_cmd = app.add_subcommand("segment", "Split text into one sentence per line");
  seg_cmd->add_option("--lang", seg.lang, "Language profile")
      ->required()->check(CLI::IsMember(langs));
  seg_cmd->add_option("--wordlist", seg.wordlist, "Abbreviation/clitic list");
  seg_cmd->add_option("--input", seg.input, "Input file (default stdin)");

  AlignArgs align;
  auto *align_cmd = app.add_subcommand("align", "Align one document pair");
  align_cmd->add_option("--src", align.src, "Source sentences")->required();
  align_cmd->add_option("--tgt", align.tgt, "Target sentences")->required();
  align_cmd->add_option("--pass1-threshold", align.pass1_threshold,
                        "Posterior for Model 1 training pairs");
  align_cmd->add_option("--threshold", align.threshold, "Output posterior threshold");
  align_cmd->add_option("--iters", align.iterations, "EM iterations");
  align_cmd->add_option("--ttable-out", align.ttable_out, "Write the Model 1 table");

  CleanArgs clean;
  auto *clean_cmd = app.add_subcommand("clean", "Filter sentence pairs");
  clean_cmd->add_option("--max-len", clean.max_len, "Maximum tokens per side");
  clean_cmd->add_option("--max-ratio", clean.max_ratio, "Maximum length ratio");
  clean_cmd->add_option("--report", clean.report, "Write rejection counts (JSON)");
  clean_cmd->add_option("--input", clean.input, "Input file (default stdin)");

  TranslitArgs tl;
  auto *tl_cmd = app.add_subcommand("translit", "Romanize or deromanize text");
  auto *to_latin = tl_cmd->add_flag("--to-latin", tl.to_latin, "Ethiopic to Latin");
  auto *to_eth = tl_cmd->add_flag("--to-ethiopic", tl.to_ethiopic, "Latin to Ethiopic");
  to_latin->excludes(to_eth);
  tl_cmd->add_option("--table", tl.table, "Transliteration table (TSV)");
  tl_cmd->add_option("--input", tl.input, "Input file (default stdin)");

  BpeArgs bpe;
  auto *bpe_cmd = app.add_subcommand("bpe", "Byte pair encoding");
  bpe_cmd->require_subcommand(1);
  auto *learn_cmd = bpe_cmd->add_subcommand("learn", "Learn merges from text");
  learn_cmd->add_option("--merges", bpe.merges, "Number of merges");
  learn_cmd->add_flag("--trace", bpe.trace, "Print merge counts to stderr");
  learn_cmd->add_option("--input", bpe.input, "Input file (default stdin)");
  auto *apply_cmd = bpe_cmd->add_subcommand("apply", "Segment text");
  apply_cmd->add_option("--codes", bpe.codes, "Merge file")->required();
  apply_cmd->add_option("--input", bpe.input, "Input file (default stdin)");
  auto *undo_cmd = bpe_cmd->add_subcommand("undo", "Join subwords back into words");
  undo_cmd->add_option("--input", bpe.input, "Input file (default stdin)");

  VocabArgs vocab;
  auto *vocab_cmd = app.add_subcommand("vocab", "Frequency-ranked vocabulary");
  vocab_cmd->add_option("--top-k", vocab.top_k, "Vocabulary size")
      ->check(CLI::Range(size_t{1}, std::numeric_limits<size_t>::max()));
  vocab_cmd->add_option("inputs", vocab.inputs, "Input files (default stdin)");

  ScoreArgs score;
  auto *score_cmd = app.add_subcommand("score", "Score hypotheses against references");
  score_cmd->add_option("--metric", score.metric, "bleu or character")
      ->check(CLI::IsMember({"bleu", "character"}));
  score_cmd->add_option("--hyp", score.hyp, "Hypothesis file")->required();
  score_cmd->add_option("--ref", score.ref, "Reference file")->required();
  score_cmd->add_flag("--json", score.json, "Print a JSON report");

  RunArgs run;
  auto *run_cmd = app.add_subcommand("run", "Run the full pipeline");
  run_cmd->add_option("--config", run.config, "Pipeline config (JSON)")->required();
  run_cmd->add_option("--out", run.out, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*norm_cmd) {
      RunNormalize(norm);
    } else if (*seg_cmd) {
      RunSegment(seg);
    } else if (*align_cmd) {
      RunAlign(align);
    } else if (*clean_cmd) {
      RunClean(clean);
    } else if (*tl_cmd) {
      if (tl.to_latin == tl.to_ethiopic) {
        std::cerr << "forge translit: pass exactly one of --to-latin, --to-ethiopic\n";
        return 2;
      }
      RunTranslit(tl);
    } else if (*learn_cmd) {
      RunBpeLearn(bpe);
    } else if (*apply_cmd) {
      RunBpeApply(bpe);
    } else if (*undo_cmd) {
      RunBpeUndo(bpe);
    } else if (*vocab_cmd) {
      RunVocab(vocab);
    } else if (*score_cmd) {
      RunScore(score);
    } else if (*run_cmd) {
      RunPipeline(run);
    }
  } catch (const forge::Error &e) {
    std::cerr << "forge: error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "forge: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
