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
#include "forge/metrics.h"
#include "forge/unicode.h"
#include "oracles/bleu_brute_force.h"
#include "oracles/edit_oracle.h"
#include "support/generators.h"

namespace forge {
namespace {

Tokens Split(const std::string &s) { return SplitWhitespace(s); }

TEST(BleuTest, IdentityIsExactlyHundred) {
  const std::vector<Tokens> corpus = {Split("the cat sat on the mat"),
                                      Split("a b c d e")};
  const BleuScore s = CorpusBleu(corpus, corpus);
  EXPECT_EQ(s.score, 100.0);
  EXPECT_EQ(s.brevity_penalty, 1.0);
}

TEST(BleuTest, ClippedUnigramPrecision) {
  const BleuScore s = CorpusBleu({Split("the the the the the the the")},
                                 {Split("the cat is on the mat")});
  EXPECT_NEAR(s.precisions[0], 2.0 / 7.0, 1e-15);
  EXPECT_EQ(s.matches[0], 2);
  EXPECT_EQ(s.totals[0], 7);
}

TEST(BleuTest, NoFourGramMatchScoresZero) {
  const BleuScore s = CorpusBleu({Split("a b c d")}, {Split("a b c e")});
  EXPECT_EQ(s.score, 0.0);
  EXPECT_GT(s.precisions[0], 0.0);
}

TEST(BleuTest, BrevityPenalty) {
  const BleuScore s = CorpusBleu({Split("a b c d")}, {Split("a b c d e f")});
  EXPECT_NEAR(s.brevity_penalty, std::exp(1.0 - 6.0 / 4.0), 1e-15);
}

TEST(BleuTest, Errors) {
  EXPECT_THROW(CorpusBleu({}, {}), InvalidArgument);
  EXPECT_THROW(CorpusBleu({Split("a")}, {}), InvalidArgument);
}

std::vector<std::vector<Tokens>> RandomCorpusPair(std::mt19937_64 &rng) {
  const size_t sentences = testgen::Uniform(rng, 1, 5);
  std::vector<Tokens> hyps, refs;
  for (size_t s = 0; s < sentences; ++s) {
    for (auto *side : {&hyps, &refs}) {
      Tokens t;
      for (size_t k = testgen::Uniform(rng, 0, 8); k > 0; --k) {
        t.push_back(std::string(1, "ab"[testgen::Uniform(rng, 0, 1)]));
      }
      side->push_back(t);
    }
  }
  return {hyps, refs};
}

TEST(BleuTest, MatchesBruteForceOnRandomCorpora) {
  std::mt19937_64 rng(4);
  int nonzero = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto corpora = RandomCorpusPair(rng);
    const BleuScore s = CorpusBleu(corpora[0], corpora[1]);
    const oracle::BruteBleu b = oracle::CorpusBleu(corpora[0], corpora[1]);
    ASSERT_NEAR(s.score, b.score, 1e-12);
    ASSERT_NEAR(s.brevity_penalty, b.brevity_penalty, 1e-12);
    for (int n = 0; n < 4; ++n) ASSERT_NEAR(s.precisions[n], b.precisions[n], 1e-12);
    EXPECT_GE(s.score, 0.0);
    EXPECT_LE(s.score, 100.0);
    nonzero += s.score > 0.0;
  }
  EXPECT_GT(nonzero, 20);
}

TEST(BleuTest, CorpusOrderDoesNotMatter) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto corpora = RandomCorpusPair(rng);
    const double before = CorpusBleu(corpora[0], corpora[1]).score;
    std::reverse(corpora[0].begin(), corpora[0].end());
    std::reverse(corpora[1].begin(), corpora[1].end());
    EXPECT_EQ(CorpusBleu(corpora[0], corpora[1]).score, before);
  }
}

TEST(CharacterTest, Identity) {
  const CharTerScore s = CharacterScore("hello world", "hello world");
  EXPECT_EQ(s.score, 0.0);
  EXPECT_EQ(s.shifts, 0);
}

TEST(CharacterTest, SingleSubstitution) {
  const CharTerScore s = CharacterScore("abcd", "abce");
  EXPECT_EQ(s.shifts, 0);
  EXPECT_EQ(s.char_edits, 1);
  EXPECT_EQ(s.score, 0.25);
  EXPECT_EQ(oracle::EditDistance(U"abcd", U"abce"), 1);
}

TEST(CharacterTest, SingleShift) {
  const CharTerScore s = CharacterScore("world hello", "hello world");
  EXPECT_EQ(s.shifts, 1);
  EXPECT_EQ(s.char_edits, 0);
  EXPECT_EQ(s.hyp_chars, 11);
  EXPECT_DOUBLE_EQ(s.score, 1.0 / 11.0);
  const auto best = oracle::BestSingleShift({U"world", U"hello"}, {U"hello", U"world"});
  EXPECT_EQ(best, (std::pair<long long, long long>{1, 0}));
}

TEST(CharacterTest, EmptyHypothesis) {
  EXPECT_THROW(CharacterScore("", "abc"), InvalidArgument);
  EXPECT_THROW(CorpusCharacter({"a", " "}, {"a", "b"}), InvalidArgument);
}

TEST(CharacterTest, CorpusIsMacroAverage) {
  EXPECT_EQ(CorpusCharacter({"abc", "xyz"}, {"abc", "xyz"}), 0.0);
  const double a = CharacterScore("abcd", "abce").score;
  const double b = CharacterScore("world hello", "hello world").score;
  EXPECT_DOUBLE_EQ(CorpusCharacter({"abcd", "world hello"}, {"abce", "hello world"}),
                   (a + b) / 2.0);
  EXPECT_DOUBLE_EQ(CorpusCharacter({"abcd"}, {"abce"}), a);
}

TEST(CharacterTest, EditDistanceMatchesOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const std::u32string a = DecodeUtf8(testgen::RandomMixedScript(rng, 12));
    const std::u32string b = DecodeUtf8(testgen::RandomMixedScript(rng, 12));
    ASSERT_EQ(EditDistance(a, b), oracle::EditDistance(a, b));
  }
}

TEST(CharacterTest, ShiftsNeverCostMoreThanPlainEdits) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::u32string> ref;
    for (size_t k = testgen::Uniform(rng, 1, 5); k > 0; --k) {
      ref.push_back(DecodeUtf8(testgen::RandomLatinWord(rng, 1, 4)));
    }
    std::vector<std::u32string> hyp = ref;
    std::shuffle(hyp.begin(), hyp.end(), rng);
    const std::string h = EncodeUtf8(oracle::Join(hyp));
    const std::string r = EncodeUtf8(oracle::Join(ref));
    const CharTerScore s = CharacterScore(h, r);
    const long long plain = oracle::EditDistance(oracle::Join(hyp), oracle::Join(ref));
    EXPECT_LE(s.shifts + s.char_edits, plain);
    EXPECT_GE(s.score, 0.0);
  }
}

}  // namespace
}  // namespace forge
