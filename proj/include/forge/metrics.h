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

// Corpus BLEU and CharacTER.
//
// BLEU is unsmoothed, single-reference and scores pre-tokenized input.
// CharacTER counts every codepoint of the space-joined hypothesis,
// including the spaces, as a hypothesis character.

#ifndef FORGE_METRICS_H_
#define FORGE_METRICS_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

using Tokens = std::vector<std::string>;

inline constexpr int kBleuOrder = 4;

struct BleuScore {
  double score = 0.0;
  std::array<double, kBleuOrder> precisions{};
  std::array<long long, kBleuOrder> matches{};
  std::array<long long, kBleuOrder> totals{};
  double brevity_penalty = 0.0;
  long long hyp_len = 0;
  long long ref_len = 0;
};

// Throws InvalidArgument on a length mismatch or an empty corpus. An order
// with no hypothesis n-grams has precision 0.
BleuScore CorpusBleu(const std::vector<Tokens> &hyps,
                     const std::vector<Tokens> &refs);

struct CharTerScore {
  double score = 0.0;
  long long shifts = 0;
  long long char_edits = 0;
  long long hyp_chars = 0;
};

inline constexpr size_t kMaxShiftWords = 5;

// Greedy shift search over word blocks of up to kMaxShiftWords words that
// also occur in the reference. The first shift (by start, then longer
// blocks, then destination) that lowers shift cost plus character edit
// distance is applied; the search repeats until no shift helps. Throws
// InvalidArgument on an empty hypothesis.
CharTerScore CharacterScore(std::string_view hyp, std::string_view ref);

// Mean of per-sentence scores. Throws InvalidArgument naming the index of an
// empty hypothesis.
double CorpusCharacter(const std::vector<std::string> &hyps,
                       const std::vector<std::string> &refs);

// Character-level Levenshtein distance over codepoints.
long long EditDistance(std::u32string_view a, std::u32string_view b);

}  // namespace forge

#endif  // FORGE_METRICS_H_
