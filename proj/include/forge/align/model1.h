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

// IBM Model 1 lexical translation table and its EM trainer.

#ifndef FORGE_ALIGN_MODEL1_H_
#define FORGE_ALIGN_MODEL1_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "forge/align/types.h"

namespace forge {

inline constexpr char kNullWord[] = "<NULL>";
inline constexpr char kRareWord[] = "<RARE>";

// String <-> dense id mapping.
class WordVocab {
 public:
  int Add(std::string_view word);
  // -1 when absent.
  int Find(std::string_view word) const;
  const std::string &word(int id) const { return words_[id]; }
  size_t size() const { return words_.size(); }

 private:
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> words_;
};

// t(target | source). Source id 0 is the NULL word. Each row is a
// distribution over target ids; pairs absent from a row score the floor.
class TTable {
 public:
  explicit TTable(double floor = 1e-9);

  double floor() const { return floor_; }
  const WordVocab &source_vocab() const { return source_vocab_; }
  const WordVocab &target_vocab() const { return target_vocab_; }

  int AddSource(std::string_view word);
  int AddTarget(std::string_view word);
  void Set(int src, int tgt, double prob);

  double Prob(int src, int tgt) const;
  double Prob(std::string_view src, std::string_view tgt) const;

  const std::unordered_map<int, double> &Row(int src) const {
    return rows_[src];
  }
  size_t num_sources() const { return rows_.size(); }

  // Maps words to ids for scoring: known words map to themselves, unknown
  // words to the RARE symbol when the vocabulary has one, otherwise -1
  // (always scored with the floor).
  std::vector<int> SourceIds(const std::vector<std::string> &words) const;
  std::vector<int> TargetIds(const std::vector<std::string> &words) const;

  // TSV "src\ttgt\tprob", rows in source-id order, targets sorted by word.
  std::string ToTsv() const;
  static TTable FromTsv(std::string_view contents, double floor = 1e-9);

 private:
  double floor_;
  WordVocab source_vocab_;
  WordVocab target_vocab_;
  std::vector<std::unordered_map<int, double>> rows_;
};

struct Ibm1Options {
  int iterations = 4;
  bool use_null = true;
  double floor = 1e-9;
};

struct Ibm1Result {
  TTable table;
  // Corpus log-likelihood under the table after k iterations, k = 0..n.
  std::vector<double> log_likelihood;
};

using TokenPair = std::pair<std::vector<std::string>, std::vector<std::string>>;

// Standard Model 1 EM. Rows are initialized uniform over the target words
// co-occurring with each source word. Throws InvalidArgument on an empty
// corpus or iterations < 1.
Ibm1Result TrainIbm1(const std::vector<TokenPair> &corpus,
                     const Ibm1Options &options = {});
Ibm1Result TrainIbm1(const std::vector<AlignedPair> &pairs,
                     const Ibm1Options &options = {});

// sum over target words of log( sum_{s in src + NULL} t(t|s) / (|src|+1) ).
double Model1LogProb(const std::vector<int> &src_ids,
                     const std::vector<int> &tgt_ids, const TTable &table);
double Model1LogProb(const std::vector<std::string> &src,
                     const std::vector<std::string> &tgt, const TTable &table);

// Replaces words seen fewer than min_count times on their side with RARE.
std::vector<TokenPair> MapRareWords(const std::vector<TokenPair> &corpus,
                                    int min_count);

}  // namespace forge

#endif  // FORGE_ALIGN_MODEL1_H_
