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

#include "forge/align/model1.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

#include "forge/error.h"
#include "forge/io.h"
#include "forge/unicode.h"

namespace forge {

int WordVocab::Add(std::string_view word) {
  auto [it, inserted] =
      ids_.try_emplace(std::string(word), static_cast<int>(words_.size()));
  if (inserted) words_.emplace_back(word);
  return it->second;
}

int WordVocab::Find(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? -1 : it->second;
}

TTable::TTable(double floor) : floor_(floor) {
  if (!(floor > 0.0)) throw ConfigError("probability floor must be positive");
  AddSource(kNullWord);
}

int TTable::AddSource(std::string_view word) {
  const int id = source_vocab_.Add(word);
  if (static_cast<size_t>(id) >= rows_.size()) rows_.resize(id + 1);
  return id;
}

int TTable::AddTarget(std::string_view word) { return target_vocab_.Add(word); }

void TTable::Set(int src, int tgt, double prob) { rows_[src][tgt] = prob; }

double TTable::Prob(int src, int tgt) const {
  if (src < 0 || tgt < 0) return floor_;
  const auto &row = rows_[src];
  auto it = row.find(tgt);
  return it == row.end() ? floor_ : it->second;
}

double TTable::Prob(std::string_view src, std::string_view tgt) const {
  return Prob(source_vocab_.Find(src), target_vocab_.Find(tgt));
}

namespace {

std::vector<int> LookupIds(const WordVocab &vocab,
                           const std::vector<std::string> &words) {
  const int rare = vocab.Find(kRareWord);
  std::vector<int> ids;
  ids.reserve(words.size());
  for (const std::string &w : words) {
    const int id = vocab.Find(w);
    ids.push_back(id >= 0 ? id : rare);
  }
  return ids;
}

}  // namespace

std::vector<int> TTable::SourceIds(const std::vector<std::string> &words) const {
  std::vector<int> ids = LookupIds(source_vocab_, words);
  // The NULL word is never a real source token.
  for (int &id : ids) {
    if (id == 0) id = -1;
  }
  return ids;
}

std::vector<int> TTable::TargetIds(const std::vector<std::string> &words) const {
  return LookupIds(target_vocab_, words);
}

std::string TTable::ToTsv() const {
  std::string out;
  char buf[64];
  for (size_t s = 0; s < rows_.size(); ++s) {
    std::vector<std::pair<std::string_view, double>> row;
    row.reserve(rows_[s].size());
    for (const auto &[t, p] : rows_[s]) {
      row.emplace_back(target_vocab_.word(t), p);
    }
    std::sort(row.begin(), row.end());
    for (const auto &[word, p] : row) {
      snprintf(buf, sizeof(buf), "%.17g", p);
      out += source_vocab_.word(static_cast<int>(s));
      out.push_back('\t');
      out += word;
      out.push_back('\t');
      out += buf;
      out.push_back('\n');
    }
  }
  return out;
}

TTable TTable::FromTsv(std::string_view contents, double floor) {
  TTable table(floor);
  size_t line_number = 0;
  for (const std::string &line : SplitLines(contents)) {
    ++line_number;
    if (line.empty()) continue;
    const std::vector<std::string> cells = SplitTabs(line);
    if (cells.size() != 3) {
      throw ConfigError("t-table line " + std::to_string(line_number) +
                        ": expected src<TAB>tgt<TAB>prob");
    }
    char *end = nullptr;
    const double p = std::strtod(cells[2].c_str(), &end);
    if (end == cells[2].c_str() || *end != '\0' || p < 0.0) {
      throw ConfigError("t-table line " + std::to_string(line_number) +
                        ": bad probability");
    }
    table.Set(table.AddSource(cells[0]), table.AddTarget(cells[1]), p);
  }
  return table;
}

namespace {

struct EncodedPair {
  std::vector<int> src;
  std::vector<int> tgt;
};

// One pass over the corpus: returns the log-likelihood under `table` and,
// when `counts` is non-null, accumulates expected counts.
double ExpectationStep(const std::vector<EncodedPair> &corpus,
                       const TTable &table, bool use_null,
                       std::vector<std::unordered_map<int, double>> *counts) {
  double log_likelihood = 0.0;
  std::vector<double> probs;
  for (const EncodedPair &pair : corpus) {
    const double norm =
        static_cast<double>(pair.src.size()) + (use_null ? 1.0 : 0.0);
    for (int t : pair.tgt) {
      probs.clear();
      double denom = 0.0;
      if (use_null) {
        probs.push_back(table.Prob(0, t));
        denom += probs.back();
      }
      for (int s : pair.src) {
        probs.push_back(table.Prob(s, t));
        denom += probs.back();
      }
      log_likelihood += std::log(denom / norm);
      if (counts == nullptr) continue;
      size_t k = 0;
      if (use_null) (*counts)[0][t] += probs[k++] / denom;
      for (int s : pair.src) (*counts)[s][t] += probs[k++] / denom;
    }
  }
  return log_likelihood;
}

}  // namespace

Ibm1Result TrainIbm1(const std::vector<TokenPair> &corpus,
                     const Ibm1Options &options) {
  if (corpus.empty()) throw InvalidArgument("Model 1 training needs >= 1 pair");
  if (options.iterations < 1) {
    throw InvalidArgument("Model 1 training needs >= 1 iteration");
  }
  Ibm1Result result{TTable(options.floor), {}};
  TTable &table = result.table;

  std::vector<EncodedPair> encoded;
  encoded.reserve(corpus.size());
  for (const auto &[src, tgt] : corpus) {
    EncodedPair pair;
    for (const std::string &w : src) pair.src.push_back(table.AddSource(w));
    for (const std::string &w : tgt) pair.tgt.push_back(table.AddTarget(w));
    encoded.push_back(std::move(pair));
  }

  // Uniform over co-occurring targets.
  std::vector<std::unordered_set<int>> cooc(table.num_sources());
  for (const EncodedPair &pair : encoded) {
    for (int t : pair.tgt) {
      if (options.use_null) cooc[0].insert(t);
      for (int s : pair.src) cooc[s].insert(t);
    }
  }
  for (size_t s = 0; s < cooc.size(); ++s) {
    const double p = 1.0 / static_cast<double>(cooc[s].size());
    for (int t : cooc[s]) table.Set(static_cast<int>(s), t, p);
  }

  for (int iter = 0; iter < options.iterations; ++iter) {
    std::vector<std::unordered_map<int, double>> counts(table.num_sources());
    result.log_likelihood.push_back(
        ExpectationStep(encoded, table, options.use_null, &counts));
    for (size_t s = 0; s < counts.size(); ++s) {
      double total = 0.0;
      for (const auto &[t, c] : counts[s]) total += c;
      for (const auto &[t, c] : counts[s]) {
        table.Set(static_cast<int>(s), t, c / total);
      }
    }
  }
  result.log_likelihood.push_back(
      ExpectationStep(encoded, table, options.use_null, nullptr));
  return result;
}

Ibm1Result TrainIbm1(const std::vector<AlignedPair> &pairs,
                     const Ibm1Options &options) {
  std::vector<TokenPair> corpus;
  corpus.reserve(pairs.size());
  for (const AlignedPair &p : pairs) {
    corpus.emplace_back(SplitWhitespace(p.src_sentence),
                        SplitWhitespace(p.tgt_sentence));
  }
  return TrainIbm1(corpus, options);
}

double Model1LogProb(const std::vector<int> &src_ids,
                     const std::vector<int> &tgt_ids, const TTable &table) {
  const double norm = static_cast<double>(src_ids.size()) + 1.0;
  double total = 0.0;
  for (int t : tgt_ids) {
    double sum = table.Prob(0, t);
    for (int s : src_ids) sum += table.Prob(s, t);
    total += std::log(sum / norm);
  }
  return total;
}

double Model1LogProb(const std::vector<std::string> &src,
                     const std::vector<std::string> &tgt, const TTable &table) {
  return Model1LogProb(table.SourceIds(src), table.TargetIds(tgt), table);
}

std::vector<TokenPair> MapRareWords(const std::vector<TokenPair> &corpus,
                                    int min_count) {
  if (min_count <= 1) return corpus;
  std::unordered_map<std::string, int> src_counts;
  std::unordered_map<std::string, int> tgt_counts;
  for (const auto &[src, tgt] : corpus) {
    for (const std::string &w : src) ++src_counts[w];
    for (const std::string &w : tgt) ++tgt_counts[w];
  }
  std::vector<TokenPair> mapped = corpus;
  for (auto &[src, tgt] : mapped) {
    for (std::string &w : src) {
      if (src_counts[w] < min_count) w = kRareWord;
    }
    for (std::string &w : tgt) {
      if (tgt_counts[w] < min_count) w = kRareWord;
    }
  }
  return mapped;
}

}  // namespace forge
