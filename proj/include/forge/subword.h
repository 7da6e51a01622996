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

// Byte pair encoding and frequency-ranked vocabularies.
//
// Words are split into codepoints followed by a separate end-of-word symbol
// "</w>". Merges may join the end-of-word symbol like any other symbol. In
// applied output a trailing "</w>" is attached to the last piece of its
// word, so a piece ending in "</w>" closes a word.
//
// Among equally frequent pairs the lexicographically smallest (left, right)
// byte-wise wins, which makes learned models reproducible.

#ifndef FORGE_SUBWORD_H_
#define FORGE_SUBWORD_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace forge {

inline constexpr char kEndOfWord[] = "</w>";

using SymbolPair = std::pair<std::string, std::string>;

struct BpeModel {
  std::vector<SymbolPair> merges;
  std::string eow_marker = kEndOfWord;

  // One merge per line, "left right".
  std::string ToText() const;
  static BpeModel FromText(std::string_view contents);
};

struct LearnedMerge {
  SymbolPair pair;
  long long count = 0;
};

// Greedy BPE over a word-frequency map. Stops after num_merges merges or
// when no pair occurs at least twice. `trace`, when given, receives the
// count of each learned merge.
BpeModel LearnBpe(const std::map<std::string, long long> &word_counts,
                  size_t num_merges, std::vector<LearnedMerge> *trace = nullptr);

// Word counts over whitespace tokens of the given lines.
std::map<std::string, long long> CountWords(const std::vector<std::string> &lines);

// Segments words with a model. Results are memoized per word.
class BpeEncoder {
 public:
  explicit BpeEncoder(BpeModel model);

  std::vector<std::string> EncodeWord(std::string_view word);
  std::vector<std::string> Encode(const std::vector<std::string> &words);
  // Whitespace-tokenizes, encodes and joins pieces with single spaces.
  std::string EncodeLine(std::string_view line);

 private:
  BpeModel model_;
  std::map<SymbolPair, size_t> ranks_;
  std::unordered_map<std::string, std::vector<std::string>> cache_;
};

std::vector<std::string> ApplyBpe(const std::vector<std::string> &words,
                                  const BpeModel &model);

// Joins pieces until one ends with the end-of-word marker. A dangling
// trailing group without a marker is flushed as the last word.
std::vector<std::string> UndoBpe(const std::vector<std::string> &pieces,
                                 std::string_view eow_marker = kEndOfWord);
std::string UndoBpeLine(std::string_view line,
                        std::string_view eow_marker = kEndOfWord);

struct Vocabulary {
  // Counts non-increasing; equal counts ordered by token bytes.
  std::vector<std::pair<std::string, long long>> entries;

  std::string ToTsv() const;
};

inline constexpr size_t kDefaultVocabSize = 44000;

Vocabulary BuildVocab(const std::vector<std::string> &tokens,
                      size_t top_k = kDefaultVocabSize);
Vocabulary BuildVocab(const std::map<std::string, long long> &counts,
                      size_t top_k = kDefaultVocabSize);

}  // namespace forge

#endif  // FORGE_SUBWORD_H_
