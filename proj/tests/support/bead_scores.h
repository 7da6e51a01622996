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

// Independent bead scores for the enumeration oracle, written directly
// from the model definitions rather than through the library's scorers.

#ifndef FORGE_TESTS_SUPPORT_BEAD_SCORES_H_
#define FORGE_TESTS_SUPPORT_BEAD_SCORES_H_

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "forge/align/length_model.h"
#include "forge/align/model1.h"
#include "forge/align/types.h"
#include "forge/unicode.h"
#include "oracles/lattice_enumerator.h"

namespace testgen {

inline double PoissonLog(int k, double mean) {
  if (mean == 0.0) return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return k * std::log(mean) - mean - std::lgamma(k + 1.0);
}

// Words of sentences [begin, begin + count).
inline std::vector<std::string> SpanWords(const std::vector<std::string> &sentences,
                                          size_t begin, int count) {
  std::vector<std::string> words;
  for (int k = 0; k < count; ++k) {
    for (std::string &w : forge::SplitWhitespace(sentences[begin + k])) {
      words.push_back(std::move(w));
    }
  }
  return words;
}

inline double LengthScore(int shape, int ls, int lt, const forge::LengthModel &model) {
  const double prior = std::log(model.bead_priors[shape]);
  const int di = oracle::kShapes[shape][0], dj = oracle::kShapes[shape][1];
  if (di > 0 && dj > 0) return prior + PoissonLog(lt, model.ratio * ls);
  if (di > 0) return prior - model.ratio * ls;
  return prior - lt / model.ratio;
}

inline double Model1Score(const std::vector<std::string> &src,
                          const std::vector<std::string> &tgt,
                          const forge::TTable &table) {
  double total = 0.0;
  for (const std::string &t : tgt) {
    double sum = table.Prob(forge::kNullWord, t);
    for (const std::string &s : src) sum += table.Prob(s, t);
    total += std::log(sum / (src.size() + 1.0));
  }
  return total;
}

// table == nullptr scores with the length model only.
inline oracle::ShapeScorer OracleScorer(const forge::DocumentPair &doc,
                                        const forge::LengthModel &model,
                                        const forge::TTable *table) {
  return [&doc, model, table](int shape, size_t i, size_t j) {
    const int di = oracle::kShapes[shape][0], dj = oracle::kShapes[shape][1];
    const std::vector<std::string> src = SpanWords(doc.source.sentences, i, di);
    const std::vector<std::string> tgt = SpanWords(doc.target.sentences, j, dj);
    double score = LengthScore(shape, static_cast<int>(src.size()),
                               static_cast<int>(tgt.size()), model);
    if (table != nullptr) score += Model1Score(src, tgt, *table);
    return score;
  };
}

}  // namespace testgen

#endif  // FORGE_TESTS_SUPPORT_BEAD_SCORES_H_
