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

#include "forge/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "forge/error.h"
#include "forge/unicode.h"

namespace forge {
namespace {

std::map<std::vector<std::string>, long long> NgramCounts(const Tokens &tokens,
                                                          size_t n) {
  std::map<std::vector<std::string>, long long> counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[Tokens(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return counts;
}

std::u32string JoinWords(const std::vector<std::u32string> &words) {
  std::u32string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(U' ');
    out += words[i];
  }
  return out;
}

std::vector<std::u32string> SplitWords(std::string_view text) {
  std::vector<std::u32string> words;
  for (const std::string &w : SplitWhitespace(text)) words.push_back(DecodeUtf8(w));
  return words;
}

// Moves words [start, start+len) so that they begin at `dest` in the
// sequence with the block removed.
std::vector<std::u32string> ApplyShift(const std::vector<std::u32string> &words,
                                       size_t start, size_t len, size_t dest) {
  std::vector<std::u32string> rest;
  rest.reserve(words.size());
  rest.insert(rest.end(), words.begin(), words.begin() + start);
  rest.insert(rest.end(), words.begin() + start + len, words.end());
  rest.insert(rest.begin() + dest, words.begin() + start,
              words.begin() + start + len);
  return rest;
}

bool OccursIn(const std::vector<std::u32string> &haystack,
              const std::vector<std::u32string> &words, size_t start, size_t len) {
  for (size_t i = 0; i + len <= haystack.size(); ++i) {
    if (std::equal(words.begin() + start, words.begin() + start + len,
                   haystack.begin() + i)) {
      return true;
    }
  }
  return false;
}

}  // namespace

BleuScore CorpusBleu(const std::vector<Tokens> &hyps,
                     const std::vector<Tokens> &refs) {
  if (hyps.size() != refs.size()) {
    throw InvalidArgument("hypothesis and reference counts differ: " +
                          std::to_string(hyps.size()) + " vs " +
                          std::to_string(refs.size()));
  }
  if (hyps.empty()) throw InvalidArgument("empty corpus");

  BleuScore bleu;
  for (size_t s = 0; s < hyps.size(); ++s) {
    bleu.hyp_len += static_cast<long long>(hyps[s].size());
    bleu.ref_len += static_cast<long long>(refs[s].size());
    for (int n = 1; n <= kBleuOrder; ++n) {
      const auto hyp_counts = NgramCounts(hyps[s], n);
      const auto ref_counts = NgramCounts(refs[s], n);
      for (const auto &[gram, count] : hyp_counts) {
        bleu.totals[n - 1] += count;
        auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) bleu.matches[n - 1] += std::min(count, it->second);
      }
    }
  }

  double log_sum = 0.0;
  bool any_zero = false;
  for (int n = 0; n < kBleuOrder; ++n) {
    bleu.precisions[n] = bleu.totals[n] == 0
                             ? 0.0
                             : static_cast<double>(bleu.matches[n]) /
                                   static_cast<double>(bleu.totals[n]);
    if (bleu.precisions[n] == 0.0) {
      any_zero = true;
    } else {
      log_sum += std::log(bleu.precisions[n]);
    }
  }
  if (bleu.hyp_len == 0) {
    bleu.brevity_penalty = 0.0;
  } else if (bleu.hyp_len < bleu.ref_len) {
    bleu.brevity_penalty =
        std::exp(1.0 - static_cast<double>(bleu.ref_len) /
                           static_cast<double>(bleu.hyp_len));
  } else {
    bleu.brevity_penalty = 1.0;
  }
  bleu.score =
      any_zero ? 0.0 : 100.0 * bleu.brevity_penalty * std::exp(log_sum / kBleuOrder);
  return bleu;
}

long long EditDistance(std::u32string_view a, std::u32string_view b) {
  std::vector<long long> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = static_cast<long long>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    long long diagonal = row[0];
    row[0] = static_cast<long long>(i);
    for (size_t j = 1; j <= b.size(); ++j) {
      const long long above = row[j];
      row[j] = std::min({above + 1, row[j - 1] + 1,
                         diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[b.size()];
}

CharTerScore CharacterScore(std::string_view hyp, std::string_view ref) {
  std::vector<std::u32string> hyp_words = SplitWords(hyp);
  const std::vector<std::u32string> ref_words = SplitWords(ref);
  const std::u32string hyp_text = JoinWords(hyp_words);
  if (hyp_text.empty()) throw InvalidArgument("empty hypothesis");
  const std::u32string ref_text = JoinWords(ref_words);

  CharTerScore result;
  result.hyp_chars = static_cast<long long>(hyp_text.size());
  long long edits = EditDistance(hyp_text, ref_text);

  bool improved = true;
  while (improved && edits > 0) {
    improved = false;
    const size_t n = hyp_words.size();
    for (size_t start = 0; start < n && !improved; ++start) {
      const size_t max_len = std::min(kMaxShiftWords, n - start);
      for (size_t len = max_len; len >= 1 && !improved; --len) {
        if (!OccursIn(ref_words, hyp_words, start, len)) continue;
        for (size_t dest = 0; dest + len <= n; ++dest) {
          if (dest == start) continue;
          std::vector<std::u32string> shifted =
              ApplyShift(hyp_words, start, len, dest);
          const long long after = EditDistance(JoinWords(shifted), ref_text);
          if (after + 1 < edits) {
            hyp_words = std::move(shifted);
            edits = after;
            ++result.shifts;
            improved = true;
            break;
          }
        }
      }
    }
  }
  result.char_edits = edits;
  result.score = static_cast<double>(result.shifts + result.char_edits) /
                 static_cast<double>(result.hyp_chars);
  return result;
}

double CorpusCharacter(const std::vector<std::string> &hyps,
                       const std::vector<std::string> &refs) {
  if (hyps.size() != refs.size()) {
    throw InvalidArgument("hypothesis and reference counts differ");
  }
  if (hyps.empty()) throw InvalidArgument("empty corpus");
  double total = 0.0;
  for (size_t i = 0; i < hyps.size(); ++i) {
    try {
      total += CharacterScore(hyps[i], refs[i]).score;
    } catch (const InvalidArgument &e) {
      throw InvalidArgument("sentence " + std::to_string(i) + ": " + e.what());
    }
  }
  return total / static_cast<double>(hyps.size());
}

}  // namespace forge
