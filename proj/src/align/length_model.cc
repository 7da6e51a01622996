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

#include "forge/align/length_model.h"

#include <cmath>
#include <limits>
#include <numeric>

#include "forge/error.h"
#include "forge/unicode.h"

namespace forge {

const char *BeadTypeName(BeadType type) {
  switch (type) {
    case BeadType::k11: return "1-1";
    case BeadType::k10: return "1-0";
    case BeadType::k01: return "0-1";
    case BeadType::k21: return "2-1";
    case BeadType::k12: return "1-2";
  }
  return "?";
}

void LengthModel::Validate() const {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw ConfigError("length ratio must be positive");
  }
  double sum = 0.0;
  for (double p : bead_priors) {
    if (!(p > 0.0)) throw ConfigError("bead priors must be positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ConfigError("bead priors must sum to 1");
  }
}

double LogPoisson(int k, double mean) {
  if (mean <= 0.0) {
    return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  return k * std::log(mean) - mean - std::lgamma(static_cast<double>(k) + 1.0);
}

double LengthLogProb(BeadType type, int src_tokens, int tgt_tokens,
                     const LengthModel &model) {
  const double log_prior = std::log(model.prior(type));
  switch (type) {
    case BeadType::k10:
      return log_prior + LogPoisson(0, model.ratio * src_tokens);
    case BeadType::k01:
      return log_prior + LogPoisson(0, tgt_tokens / model.ratio);
    default:
      return log_prior + LogPoisson(tgt_tokens, model.ratio * src_tokens);
  }
}

double LengthBeadLogProb(const Bead &bead, std::span<const int> src_lens,
                         std::span<const int> tgt_lens,
                         const LengthModel &model) {
  int ls = 0;
  int lt = 0;
  for (size_t i = bead.src.begin; i < bead.src.end; ++i) ls += src_lens[i];
  for (size_t j = bead.tgt.begin; j < bead.tgt.end; ++j) lt += tgt_lens[j];
  return LengthLogProb(bead.type, ls, lt, model);
}

std::vector<int> TokenCounts(const std::vector<std::string> &sentences) {
  std::vector<int> counts;
  counts.reserve(sentences.size());
  for (const std::string &s : sentences) {
    counts.push_back(static_cast<int>(CountTokens(s)));
  }
  return counts;
}

LengthModel FitLengthModel(const std::vector<DocumentPair> &docs,
                           const std::array<double, 5> &bead_priors) {
  long long src_total = 0;
  long long tgt_total = 0;
  for (const DocumentPair &doc : docs) {
    for (int n : TokenCounts(doc.source.sentences)) src_total += n;
    for (int n : TokenCounts(doc.target.sentences)) tgt_total += n;
  }
  if (src_total == 0) {
    throw DegenerateCorpusError(
        "cannot fit length model: corpus has no source tokens");
  }
  if (tgt_total == 0) {
    throw DegenerateCorpusError(
        "cannot fit length model: corpus has no target tokens");
  }
  LengthModel model;
  model.ratio = static_cast<double>(tgt_total) / static_cast<double>(src_total);
  model.bead_priors = bead_priors;
  model.Validate();
  return model;
}

}  // namespace forge
