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

// Brute-force corpus BLEU. N-grams are compared position by position with
// no hashing or maps.

#ifndef FORGE_TESTS_ORACLES_BLEU_BRUTE_FORCE_H_
#define FORGE_TESTS_ORACLES_BLEU_BRUTE_FORCE_H_

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace oracle {

using Sentence = std::vector<std::string>;

inline bool SameGram(const Sentence &a, size_t i, const Sentence &b, size_t j,
                     size_t n) {
  for (size_t k = 0; k < n; ++k) {
    if (a[i + k] != b[j + k]) return false;
  }
  return true;
}

inline long long CountGram(const Sentence &s, const Sentence &gram_src,
                           size_t start, size_t n) {
  long long c = 0;
  for (size_t j = 0; j + n <= s.size(); ++j) c += SameGram(s, j, gram_src, start, n);
  return c;
}

struct BruteBleu {
  double score = 0.0;
  double precisions[4] = {0, 0, 0, 0};
  double brevity_penalty = 0.0;
};

inline BruteBleu CorpusBleu(const std::vector<Sentence> &hyps,
                            const std::vector<Sentence> &refs) {
  long long matches[4] = {0, 0, 0, 0};
  long long totals[4] = {0, 0, 0, 0};
  long long hyp_len = 0, ref_len = 0;
  for (size_t s = 0; s < hyps.size(); ++s) {
    const Sentence &h = hyps[s];
    const Sentence &r = refs[s];
    hyp_len += h.size();
    ref_len += r.size();
    for (size_t n = 1; n <= 4; ++n) {
      for (size_t i = 0; i + n <= h.size(); ++i) {
        ++totals[n - 1];
        // Clip once per distinct gram, at its first occurrence.
        bool first = true;
        for (size_t k = 0; k < i; ++k) {
          if (SameGram(h, k, h, i, n)) {
            first = false;
            break;
          }
        }
        if (!first) continue;
        matches[n - 1] += std::min(CountGram(h, h, i, n), CountGram(r, h, i, n));
      }
    }
  }
  BruteBleu out;
  double log_sum = 0.0;
  bool zero = false;
  for (int n = 0; n < 4; ++n) {
    out.precisions[n] = totals[n] ? double(matches[n]) / double(totals[n]) : 0.0;
    if (out.precisions[n] == 0.0) zero = true;
    else log_sum += std::log(out.precisions[n]);
  }
  if (hyp_len == 0) out.brevity_penalty = 0.0;
  else if (hyp_len < ref_len) out.brevity_penalty = std::exp(1.0 - double(ref_len) / double(hyp_len));
  else out.brevity_penalty = 1.0;
  out.score = zero ? 0.0 : 100.0 * out.brevity_penalty * std::exp(log_sum / 4.0);
  return out;
}

}  // namespace oracle

#endif  // FORGE_TESTS_ORACLES_BLEU_BRUTE_FORCE_H_
