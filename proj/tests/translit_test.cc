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

#include <gtest/gtest.h>

#include "forge/error.h"
#include "forge/translit.h"
#include "forge/unicode.h"

namespace forge {
namespace {

const TranslitTable &Table() {
  static const TranslitTable table = TranslitTable::Load(TranslitTable::DefaultPath());
  return table;
}

TEST(TranslitTest, Examples) {
  EXPECT_EQ(Table().Romanize("ሀ"), "ha");
  EXPECT_EQ(Table().Deromanize("ha"), "ሀ");
  EXPECT_EQ(Table().Romanize("ሰላም።"), "salāme.");
  EXPECT_EQ(Table().Romanize("abc 12"), "abc 12");
}

TEST(TranslitTest, EveryRowRoundTrips) {
  ASSERT_EQ(Table().forward().size(), 245u);
  for (const auto &[cp, image] : Table().forward()) {
    const std::string key = EncodeUtf8(std::u32string(1, cp));
    EXPECT_EQ(Table().Romanize(key), EncodeUtf8(image));
    EXPECT_EQ(Table().Deromanize(Table().Romanize(key)), key);
  }
}

TEST(TranslitTest, EveryPairOfRowsRoundTrips) {
  for (const auto &[a, ia] : Table().forward()) {
    for (const auto &[b, ib] : Table().forward()) {
      const std::string text = EncodeUtf8(std::u32string{a, b});
      ASSERT_EQ(Table().Deromanize(Table().Romanize(text)), text);
    }
  }
}

TEST(TranslitTest, ImagesArePrefixFree) {
  const auto &images = Table().reverse();
  for (const auto &[a, ca] : images) {
    for (const auto &[b, cb] : images) {
      if (a == b) continue;
      ASSERT_NE(b.compare(0, a.size(), a), 0)
          << EncodeUtf8(a) << " is a prefix of " << EncodeUtf8(b);
    }
  }
}

TEST(TranslitTest, LoadRejectsPrefixCollision) {
  EXPECT_THROW(TranslitTable::Parse("ሀ\tha\nሁ\thau\n"), ConfigError);
  EXPECT_THROW(TranslitTable::Parse("ሀ\tha\nሁ\tha\n"), ConfigError);
  EXPECT_THROW(TranslitTable::Parse("ሀ\tha\nሀ\thu\n"), ConfigError);
  EXPECT_THROW(TranslitTable::Parse("a\tha\n"), ConfigError);
  EXPECT_NO_THROW(TranslitTable::Parse("ሀ\tha\nሁ\thu\n"));
}

TEST(TranslitTest, UnmappedCharacterNamesCodepoint) {
  try {
    Table().Romanize("ሰ፩");
    FAIL() << "expected an error";
  } catch (const UnmappedCharacterError &e) {
    EXPECT_EQ(e.codepoint(), U'፩');
    EXPECT_EQ(e.offset(), 1u);
    EXPECT_NE(std::string(e.what()).find("U+1369"), std::string::npos);
  }
}

TEST(TranslitTest, IncompleteImageIsDecodeError) {
  // "ʷ" starts only labiovelar images.
  EXPECT_THROW(Table().Deromanize("ʷ"), DecodeError);
}

}  // namespace
}  // namespace forge
