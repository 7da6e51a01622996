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

#include <random>

#include <gtest/gtest.h>

#include "forge/error.h"
#include "forge/subword.h"
#include "forge/unicode.h"
#include "support/generators.h"

namespace forge {
namespace {

const std::map<std::string, long long> kToy = {
    {"low", 5}, {"lower", 2}, {"newest", 6}, {"widest", 3}};

TEST(BpeLearnTest, FirstMergeOnToyCorpus) {
  std::vector<LearnedMerge> trace;
  const BpeModel model = LearnBpe(kToy, 10, &trace);
  ASSERT_FALSE(trace.empty());
  EXPECT_EQ(trace[0].pair, SymbolPair("e", "s"));
  EXPECT_EQ(trace[0].count, 9);
  EXPECT_EQ(model.merges[1], SymbolPair("es", "t"));
  EXPECT_EQ(model.merges[2], SymbolPair("est", kEndOfWord));
}

TEST(BpeLearnTest, ZeroMergesIsCharacterLevel) {
  const BpeModel model = LearnBpe(kToy, 0);
  EXPECT_TRUE(model.merges.empty());
  EXPECT_EQ(ApplyBpe({"low"}, model),
            (std::vector<std::string>{"l", "o", "w</w>"}));
}

TEST(BpeLearnTest, StopsWhenNoPairRepeats) {
  const BpeModel model = LearnBpe({{"ab", 1}}, 100);
  EXPECT_TRUE(model.merges.empty());
}

TEST(BpeLearnTest, TiesBreakLexicographically) {
  // "b c" and "a b" both occur twice; ("a", "b") sorts first.
  std::vector<LearnedMerge> trace;
  LearnBpe({{"abc", 2}}, 1, &trace);
  ASSERT_EQ(trace.size(), 1u);
  EXPECT_EQ(trace[0].pair, SymbolPair("a", "b"));
}

// The incremental learner against a learner that recounts every pair from
// scratch at each step.
std::vector<SymbolPair> NaiveBpe(const std::map<std::string, long long> &counts,
                                 size_t merges) {
  std::vector<std::pair<std::vector<std::string>, long long>> words;
  for (const auto &[w, c] : counts) {
    std::vector<std::string> symbols;
    for (char32_t cp : DecodeUtf8(w)) symbols.push_back(EncodeUtf8(std::u32string(1, cp)));
    symbols.emplace_back(kEndOfWord);
    words.emplace_back(symbols, c);
  }
  std::vector<SymbolPair> out;
  while (out.size() < merges) {
    std::map<SymbolPair, long long> pairs;
    for (const auto &[s, c] : words) {
      for (size_t k = 0; k + 1 < s.size(); ++k) pairs[{s[k], s[k + 1]}] += c;
    }
    SymbolPair best;
    long long best_count = 0;
    for (const auto &[p, c] : pairs) {
      if (c > best_count) {
        best = p;
        best_count = c;
      }
    }
    if (best_count < 2) break;
    out.push_back(best);
    for (auto &[s, c] : words) {
      std::vector<std::string> next;
      for (size_t k = 0; k < s.size(); ++k) {
        if (k + 1 < s.size() && s[k] == best.first && s[k + 1] == best.second) {
          next.push_back(s[k] + s[k + 1]);
          ++k;
        } else {
          next.push_back(s[k]);
        }
      }
      s = next;
    }
  }
  return out;
}

TEST(BpeLearnTest, MatchesNaiveRecount) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<std::string, long long> counts;
    for (int k = 0; k < 60; ++k) {
      std::string w;
      for (size_t n = testgen::Uniform(rng, 1, 7); n > 0; --n) {
        w.push_back("abcde"[testgen::Uniform(rng, 0, 4)]);
      }
      counts[w] += static_cast<long long>(testgen::Uniform(rng, 1, 5));
    }
    EXPECT_EQ(LearnBpe(counts, 200).merges, NaiveBpe(counts, 200));
  }
}

TEST(BpeApplyTest, KnownSegmentation) {
  const BpeModel model = LearnBpe(kToy, 10);
  EXPECT_EQ(ApplyBpe({"lowest"}, model),
            (std::vector<std::string>{"low", "est</w>"}));
}

TEST(BpeApplyTest, UnseenCharactersStayCharacterLevel) {
  const BpeModel model = LearnBpe(kToy, 10);
  EXPECT_EQ(ApplyBpe({"xyz"}, model), (std::vector<std::string>{"x", "y", "z</w>"}));
}

TEST(BpeUndoTest, RoundTripAndDangling) {
  const BpeModel model = LearnBpe(kToy, 10);
  const std::vector<std::string> words = {"lowest", "newer", "wider", "ሰላም"};
  EXPECT_EQ(UndoBpe(ApplyBpe(words, model)), words);
  EXPECT_EQ(UndoBpe({"lo", "w</w>", "ne"}), (std::vector<std::string>{"low", "ne"}));
  EXPECT_EQ(UndoBpeLine("lo w</w> ne west</w>"), "low newest");
}

TEST(BpeModelTest, TextRoundTrip) {
  const BpeModel model = LearnBpe(kToy, 10);
  EXPECT_EQ(BpeModel::FromText(model.ToText()).merges, model.merges);
  EXPECT_THROW(BpeModel::FromText("a\n"), ConfigError);
  EXPECT_THROW(BpeModel::FromText("a b\na b\n"), ConfigError);
}

TEST(VocabTest, FrequencyRanked) {
  const Vocabulary v = BuildVocab(std::vector<std::string>{"a", "a", "b"}, 1);
  ASSERT_EQ(v.entries.size(), 1u);
  EXPECT_EQ(v.entries[0], (std::pair<std::string, long long>{"a", 2}));
}

TEST(VocabTest, TiesBreakLexicographically) {
  const Vocabulary v = BuildVocab(std::vector<std::string>{"b", "a"}, 1);
  EXPECT_EQ(v.entries[0].first, "a");
}

TEST(VocabTest, DefaultSizeAndSmallCorpus) {
  EXPECT_EQ(kDefaultVocabSize, 44000u);
  EXPECT_EQ(BuildVocab(std::vector<std::string>{"x", "y"}).entries.size(), 2u);
  EXPECT_THROW(BuildVocab(std::vector<std::string>{"x"}, 0), InvalidArgument);
}

}  // namespace
}  // namespace forge
