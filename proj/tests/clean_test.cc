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

#include "forge/clean.h"
#include "forge/error.h"
#include "support/generators.h"

namespace forge {
namespace {

std::string Words(size_t n) {
  std::vector<std::string> words(n, "w");
  return testgen::JoinWords(words);
}

AlignedPair Pair(size_t src, size_t tgt) {
  AlignedPair p;
  p.src_sentence = Words(src);
  p.tgt_sentence = Words(tgt);
  return p;
}

TEST(CleanTest, LengthLimit) {
  const CleanConfig cfg;
  EXPECT_EQ(Classify(80, 80, cfg), RejectReason::kNone);
  EXPECT_EQ(Classify(81, 80, cfg), RejectReason::kTooLong);
  EXPECT_EQ(Classify(80, 81, cfg), RejectReason::kTooLong);
}

TEST(CleanTest, RatioLimit) {
  const CleanConfig cfg;
  EXPECT_EQ(Classify(18, 2, cfg), RejectReason::kNone);   // 9.0
  EXPECT_EQ(Classify(19, 2, cfg), RejectReason::kRatio);  // 9.5
  EXPECT_EQ(Classify(2, 19, cfg), RejectReason::kRatio);
}

TEST(CleanTest, EmptySideRejected) {
  const CleanConfig cfg;
  EXPECT_EQ(Classify(0, 3, cfg), RejectReason::kEmpty);
  EXPECT_EQ(Classify(3, 0, cfg), RejectReason::kEmpty);
}

TEST(CleanTest, FilterCountsAddUp) {
  const std::vector<AlignedPair> pairs = {Pair(80, 70), Pair(81, 70), Pair(18, 2),
                                          Pair(19, 2),  Pair(0, 4),   Pair(5, 5)};
  const CleanResult r = FilterPairs(pairs);
  EXPECT_EQ(r.report.input, 6u);
  EXPECT_EQ(r.report.kept, 3u);
  EXPECT_EQ(r.report.too_long, 1u);
  EXPECT_EQ(r.report.ratio, 1u);
  EXPECT_EQ(r.report.empty, 1u);
  EXPECT_EQ(r.report.kept + r.report.rejected(), r.report.input);
  EXPECT_EQ(r.kept[1].src_sentence, Words(18));
}

TEST(CleanTest, InvalidConfig) {
  CleanConfig cfg;
  cfg.max_ratio = 0.5;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg = CleanConfig();
  cfg.max_tokens = 0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
}

}  // namespace
}  // namespace forge
