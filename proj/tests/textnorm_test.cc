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
#include <set>

#include <gtest/gtest.h>

#include "forge/error.h"
#include "forge/textnorm.h"
#include "forge/unicode.h"
#include "support/generators.h"

namespace forge {
namespace {

class TextnormTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    am_ = new NormalizationTable(LoadNormalizationTable(
        DefaultNormalizationTablePath(LangProfile::kEthiopic), LangProfile::kEthiopic));
    en_ = new NormalizationTable(LoadNormalizationTable(
        DefaultNormalizationTablePath(LangProfile::kLatin), LangProfile::kLatin));
  }
  static void TearDownTestSuite() {
    delete am_;
    delete en_;
  }
  static NormalizationTable *am_;
  static NormalizationTable *en_;
};

NormalizationTable *TextnormTest::am_ = nullptr;
NormalizationTable *TextnormTest::en_ = nullptr;

TEST_F(TextnormTest, QuotesBecomeAsciiDoubleQuote) {
  EXPECT_EQ(NormalizePunctuation("«ሰላም»", *am_), "\"ሰላም\"");
  EXPECT_EQ(NormalizePunctuation("‹‹ሰላም››", *am_), "\"ሰላም\"");
  EXPECT_EQ(NormalizePunctuation("‘‘hi’’", *am_), "\"hi\"");
}

TEST_F(TextnormTest, DoubleWordSeparatorBecomesFullStop) {
  EXPECT_EQ(NormalizePunctuation("ነው፡፡", *am_), "ነው።");
}

TEST_F(TextnormTest, SingleWordSeparatorBecomesSpace) {
  EXPECT_EQ(NormalizePunctuation("ሰላም፡ነው", *am_), "ሰላም ነው");
}

TEST_F(TextnormTest, UnaffectedTextIsIdentity) {
  EXPECT_EQ(NormalizePunctuation("abc def", *am_), "abc def");
  EXPECT_EQ(NormalizePunctuation("abc def", *en_), "abc def");
}

TEST_F(TextnormTest, HomophoneFolding) {
  EXPECT_EQ(FoldHomophones("ሐሳብ", *am_), "ሀሳብ");
  EXPECT_EQ(FoldHomophones("ሠላም", *am_), "ሰላም");
  EXPECT_EQ(FoldHomophones("ሰላም", *am_), "ሰላም");
  EXPECT_EQ(FoldHomophones("ዐይን", *am_), "አይን");
  EXPECT_EQ(FoldHomophones("ፀሐይ", *am_), "ጸሀይ");
  EXPECT_EQ(FoldHomophones("ኀይል", *am_), "ሀይል");
}

TEST_F(TextnormTest, LowercaseLatin) {
  EXPECT_EQ(LowercaseLatin("Hello World"), "hello world");
  EXPECT_EQ(LowercaseLatin("ሰላም"), "ሰላም");
  EXPECT_EQ(LowercaseLatin("MT4all!"), "mt4all!");
}

TEST_F(TextnormTest, ProfileComposition) {
  EXPECT_EQ(Normalize("«ሐሳብ»፡፡", LangProfile::kEthiopic, *am_), "\"ሀሳብ\"።");
  EXPECT_EQ(Normalize("He said «Hi».", LangProfile::kLatin, *en_), "he said \"hi\".");
  EXPECT_EQ(Normalize("", LangProfile::kLatin, *en_), "");
  EXPECT_EQ(Normalize("", LangProfile::kEthiopic, *am_), "");
}

TEST_F(TextnormTest, DecomposedInputIsComposedFirst) {
  EXPECT_EQ(Normalize("Café", LangProfile::kLatin, *en_), "café");
}

TEST_F(TextnormTest, UnknownProfileIsConfigError) {
  EXPECT_THROW(ParseLangProfile("klingon"), ConfigError);
  EXPECT_EQ(ParseLangProfile("am"), LangProfile::kEthiopic);
  EXPECT_EQ(ParseLangProfile("en"), LangProfile::kLatin);
}

TEST_F(TextnormTest, ShippedTablesAreClosed) {
  for (const NormalizationTable *t : {am_, en_}) {
    EXPECT_NO_THROW(t->Validate());
    for (const auto &[from, to] : t->homophone_map) {
      EXPECT_TRUE(IsEthiopic(from));
      EXPECT_TRUE(IsEthiopic(to));
      EXPECT_EQ(t->homophone_map.count(to), 0u) << "chained fold";
    }
    for (const auto &[from, to] : t->punct_map) {
      EXPECT_LE(to.size(), from.size());
    }
  }
}

TEST_F(TextnormTest, RejectsBadRows) {
  EXPECT_THROW(ParseNormalizationTable("a\tbc\n", LangProfile::kLatin), ConfigError);
  EXPECT_THROW(ParseNormalizationTable("x\n", LangProfile::kLatin), ConfigError);
  // Not closed: "a" maps to "b" which maps elsewhere.
  EXPECT_THROW(ParseNormalizationTable("a\tb\nb\tc\n", LangProfile::kLatin), ConfigError);
}

TEST_F(TextnormTest, IdempotentOnRandomMixedScript) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string x = testgen::RandomMixedScript(rng, 40);
    for (const auto &[profile, table] :
         {std::pair{LangProfile::kEthiopic, am_}, std::pair{LangProfile::kLatin, en_}}) {
      const std::string once = Normalize(x, profile, *table);
      ASSERT_EQ(Normalize(once, profile, *table), once) << x;
      const std::string p = NormalizePunctuation(x, *table);
      ASSERT_EQ(NormalizePunctuation(p, *table), p) << x;
      const std::string f = FoldHomophones(x, *table);
      ASSERT_EQ(FoldHomophones(f, *table), f) << x;
    }
    const std::string l = LowercaseLatin(x);
    ASSERT_EQ(LowercaseLatin(l), l) << x;
  }
}

TEST_F(TextnormTest, PunctuationNeverLengthens) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::u32string x = DecodeUtf8(testgen::RandomMixedScript(rng, 30));
    EXPECT_LE(NormalizePunctuation(x, *am_).size(), x.size());
    EXPECT_LE(NormalizePunctuation(x, *en_).size(), x.size());
  }
}

TEST_F(TextnormTest, IntroducesOnlyTableTargets) {
  std::set<char32_t> targets;
  for (const auto &[from, to] : am_->punct_map) targets.insert(to.begin(), to.end());
  for (const auto &[from, to] : am_->homophone_map) targets.insert(to);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string x = testgen::RandomMixedScript(rng, 30);
    const std::u32string composed = ToNfc(DecodeUtf8(x));
    const std::set<char32_t> allowed(composed.begin(), composed.end());
    for (char32_t cp : DecodeUtf8(Normalize(x, LangProfile::kEthiopic, *am_))) {
      ASSERT_TRUE(allowed.count(cp) || targets.count(cp)) << x;
    }
  }
}

}  // namespace
}  // namespace forge
