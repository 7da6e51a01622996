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

#include "forge/subword.h"

#include <algorithm>
#include <cstdint>
#include <set>

#include "forge/error.h"
#include "forge/io.h"
#include "forge/unicode.h"

namespace forge {
namespace {

std::vector<std::string> InitialSymbols(std::string_view word) {
  std::vector<std::string> symbols;
  for (char32_t cp : DecodeUtf8(word)) {
    std::string s;
    AppendUtf8(cp, &s);
    symbols.push_back(std::move(s));
  }
  symbols.emplace_back(kEndOfWord);
  return symbols;
}

using PairKey = uint64_t;

PairKey MakeKey(int left, int right) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(left)) << 32) |
         static_cast<uint32_t>(right);
}
int KeyLeft(PairKey key) { return static_cast<int>(key >> 32); }
int KeyRight(PairKey key) { return static_cast<int>(key & 0xffffffffu); }

class BpeLearner {
 public:
  explicit BpeLearner(const std::map<std::string, long long> &word_counts)
      : queue_(QueueOrder{&symbols_}) {
    for (const auto &[word, count] : word_counts) {
      if (word.empty() || count <= 0) continue;
      std::vector<int> ids;
      for (const std::string &s : InitialSymbols(word)) ids.push_back(Intern(s));
      words_.push_back(std::move(ids));
      freqs_.push_back(count);
    }
    for (size_t w = 0; w < words_.size(); ++w) AddWordPairs(w, +1);
    for (const auto &[key, count] : pair_counts_) {
      if (count > 0) queue_.insert({count, key});
    }
  }

  bool Step(LearnedMerge *merge) {
    if (queue_.empty()) return false;
    const auto [count, key] = *queue_.begin();
    if (count < 2) return false;
    const int left = KeyLeft(key), right = KeyRight(key);
    merge->pair = {symbols_[left], symbols_[right]};
    merge->count = count;
    const int merged = Intern(symbols_[left] + symbols_[right]);

    std::vector<int> affected = where_[key];
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    for (int w : affected) {
      std::vector<int> &ids = words_[w];
      bool present = false;
      for (size_t k = 0; k + 1 < ids.size(); ++k) {
        if (ids[k] == left && ids[k + 1] == right) {
          present = true;
          break;
        }
      }
      if (!present) continue;
      AddWordPairs(w, -1);
      std::vector<int> next;
      next.reserve(ids.size());
      for (size_t k = 0; k < ids.size(); ++k) {
        if (k + 1 < ids.size() && ids[k] == left && ids[k + 1] == right) {
          next.push_back(merged);
          ++k;
        } else {
          next.push_back(ids[k]);
        }
      }
      ids = std::move(next);
      AddWordPairs(w, +1);
    }
    where_.erase(key);
    return true;
  }

 private:
  struct QueueEntry {
    long long count;
    PairKey key;
  };
  struct QueueOrder {
    const std::vector<std::string> *symbols;
    bool operator()(const QueueEntry &a, const QueueEntry &b) const {
      if (a.count != b.count) return a.count > b.count;
      const std::string &al = (*symbols)[KeyLeft(a.key)];
      const std::string &bl = (*symbols)[KeyLeft(b.key)];
      if (al != bl) return al < bl;
      return (*symbols)[KeyRight(a.key)] < (*symbols)[KeyRight(b.key)];
    }
  };

  int Intern(const std::string &symbol) {
    auto [it, inserted] =
        symbol_ids_.try_emplace(symbol, static_cast<int>(symbols_.size()));
    if (inserted) symbols_.push_back(symbol);
    return it->second;
  }

  void AdjustPair(PairKey key, long long delta, int word) {
    long long &count = pair_counts_[key];
    if (count > 0) queue_.erase({count, key});
    count += delta;
    if (count > 0) queue_.insert({count, key});
    if (delta > 0) where_[key].push_back(word);
  }

  void AddWordPairs(size_t w, int sign) {
    const std::vector<int> &ids = words_[w];
    for (size_t k = 0; k + 1 < ids.size(); ++k) {
      AdjustPair(MakeKey(ids[k], ids[k + 1]), sign * freqs_[w],
                 static_cast<int>(w));
    }
  }

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, int> symbol_ids_;
  std::vector<std::vector<int>> words_;
  std::vector<long long> freqs_;
  std::unordered_map<PairKey, long long> pair_counts_;
  std::unordered_map<PairKey, std::vector<int>> where_;
  std::set<QueueEntry, QueueOrder> queue_;
};

}  // namespace

std::string BpeModel::ToText() const {
  std::string out;
  for (const auto &[left, right] : merges) {
    out += left;
    out.push_back(' ');
    out += right;
    out.push_back('\n');
  }
  return out;
}

BpeModel BpeModel::FromText(std::string_view contents) {
  BpeModel model;
  size_t line_number = 0;
  std::set<SymbolPair> seen;
  for (const std::string &line : SplitLines(contents)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    const size_t space = line.find(' ');
    if (space == std::string::npos || space == 0 || space + 1 == line.size() ||
        line.find(' ', space + 1) != std::string::npos) {
      throw ConfigError("merge file line " + std::to_string(line_number) +
                        ": expected 'left right'");
    }
    SymbolPair pair{line.substr(0, space), line.substr(space + 1)};
    if (!seen.insert(pair).second) {
      throw ConfigError("merge file line " + std::to_string(line_number) +
                        ": duplicate merge");
    }
    model.merges.push_back(std::move(pair));
  }
  return model;
}

BpeModel LearnBpe(const std::map<std::string, long long> &word_counts,
                  size_t num_merges, std::vector<LearnedMerge> *trace) {
  BpeModel model;
  BpeLearner learner(word_counts);
  LearnedMerge merge;
  while (model.merges.size() < num_merges && learner.Step(&merge)) {
    model.merges.push_back(merge.pair);
    if (trace != nullptr) trace->push_back(merge);
  }
  return model;
}

std::map<std::string, long long> CountWords(const std::vector<std::string> &lines) {
  std::map<std::string, long long> counts;
  for (const std::string &line : lines) {
    for (std::string &token : SplitWhitespace(line)) ++counts[std::move(token)];
  }
  return counts;
}

BpeEncoder::BpeEncoder(BpeModel model) : model_(std::move(model)) {
  for (size_t r = 0; r < model_.merges.size(); ++r) {
    ranks_.emplace(model_.merges[r], r);
  }
}

std::vector<std::string> BpeEncoder::EncodeWord(std::string_view word) {
  auto cached = cache_.find(std::string(word));
  if (cached != cache_.end()) return cached->second;

  std::vector<std::string> symbols = InitialSymbols(word);
  while (symbols.size() > 1) {
    size_t best_rank = ranks_.size();
    for (size_t k = 0; k + 1 < symbols.size(); ++k) {
      auto it = ranks_.find({symbols[k], symbols[k + 1]});
      if (it != ranks_.end() && it->second < best_rank) best_rank = it->second;
    }
    if (best_rank == ranks_.size()) break;
    const SymbolPair &pair = model_.merges[best_rank];
    std::vector<std::string> next;
    next.reserve(symbols.size());
    for (size_t k = 0; k < symbols.size(); ++k) {
      if (k + 1 < symbols.size() && symbols[k] == pair.first &&
          symbols[k + 1] == pair.second) {
        next.push_back(symbols[k] + symbols[k + 1]);
        ++k;
      } else {
        next.push_back(std::move(symbols[k]));
      }
    }
    symbols = std::move(next);
  }
  if (symbols.size() > 1 && symbols.back() == kEndOfWord) {
    symbols[symbols.size() - 2] += kEndOfWord;
    symbols.pop_back();
  }
  cache_.emplace(std::string(word), symbols);
  return symbols;
}

std::vector<std::string> BpeEncoder::Encode(const std::vector<std::string> &words) {
  std::vector<std::string> pieces;
  for (const std::string &word : words) {
    for (std::string &piece : EncodeWord(word)) pieces.push_back(std::move(piece));
  }
  return pieces;
}

std::string BpeEncoder::EncodeLine(std::string_view line) {
  std::string out;
  for (const std::string &piece : Encode(SplitWhitespace(line))) {
    if (!out.empty()) out.push_back(' ');
    out += piece;
  }
  return out;
}

std::vector<std::string> ApplyBpe(const std::vector<std::string> &words,
                                  const BpeModel &model) {
  BpeEncoder encoder(model);
  return encoder.Encode(words);
}

std::vector<std::string> UndoBpe(const std::vector<std::string> &pieces,
                                 std::string_view eow_marker) {
  std::vector<std::string> words;
  std::string current;
  for (const std::string &piece : pieces) {
    if (piece.size() >= eow_marker.size() &&
        piece.compare(piece.size() - eow_marker.size(), eow_marker.size(),
                      eow_marker) == 0) {
      current.append(piece, 0, piece.size() - eow_marker.size());
      words.push_back(std::move(current));
      current.clear();
    } else {
      current += piece;
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::string UndoBpeLine(std::string_view line, std::string_view eow_marker) {
  std::string out;
  for (const std::string &word : UndoBpe(SplitWhitespace(line), eow_marker)) {
    if (!out.empty()) out.push_back(' ');
    out += word;
  }
  return out;
}

std::string Vocabulary::ToTsv() const {
  std::string out;
  for (const auto &[token, count] : entries) {
    out += token;
    out.push_back('\t');
    out += std::to_string(count);
    out.push_back('\n');
  }
  return out;
}

Vocabulary BuildVocab(const std::map<std::string, long long> &counts,
                      size_t top_k) {
  if (top_k < 1) throw InvalidArgument("vocabulary size must be >= 1");
  Vocabulary vocab;
  vocab.entries.assign(counts.begin(), counts.end());
  std::stable_sort(vocab.entries.begin(), vocab.entries.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  if (vocab.entries.size() > top_k) vocab.entries.resize(top_k);
  return vocab;
}

Vocabulary BuildVocab(const std::vector<std::string> &tokens, size_t top_k) {
  std::map<std::string, long long> counts;
  for (const std::string &token : tokens) ++counts[token];
  return BuildVocab(counts, top_k);
}

}  // namespace forge
