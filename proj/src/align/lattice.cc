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

#include "forge/align/lattice.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <unordered_map>

#include "forge/unicode.h"

namespace forge {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double LogAdd(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

// Banded (n+1) x (m+1) grid of doubles; cells outside the band read as
// -infinity.
class BandedGrid {
 public:
  BandedGrid(size_t n, size_t m, size_t band) : lo_(n + 1), hi_(n + 1), offset_(n + 1) {
    size_t total = 0;
    for (size_t i = 0; i <= n; ++i) {
      const double center = n == 0 ? 0.0 : static_cast<double>(i) * m / n;
      const double lo = std::ceil(center - static_cast<double>(band) - 1e-9);
      const double hi = std::floor(center + static_cast<double>(band) + 1e-9);
      lo_[i] = lo < 0 ? 0 : static_cast<size_t>(lo);
      hi_[i] = std::min<size_t>(m, hi < 0 ? 0 : static_cast<size_t>(hi));
      offset_[i] = total;
      total += hi_[i] >= lo_[i] ? hi_[i] - lo_[i] + 1 : 0;
    }
    values_.assign(total, kNegInf);
  }

  bool Contains(size_t i, size_t j) const {
    return i < lo_.size() && j >= lo_[i] && j <= hi_[i];
  }
  size_t lo(size_t i) const { return lo_[i]; }
  size_t hi(size_t i) const { return hi_[i]; }
  size_t Index(size_t i, size_t j) const { return offset_[i] + (j - lo_[i]); }
  size_t size() const { return values_.size(); }

  double Get(size_t i, size_t j) const {
    return Contains(i, j) ? values_[Index(i, j)] : kNegInf;
  }
  double &At(size_t i, size_t j) { return values_[Index(i, j)]; }

 private:
  std::vector<size_t> lo_, hi_, offset_;
  std::vector<double> values_;
};

LatticeResult RunBand(size_t n, size_t m, size_t band, const BeadScorer &scorer,
                      const LatticeOptions &options, bool *hit_edge) {
  BandedGrid alpha(n, m, band);
  BandedGrid beta(n, m, band);
  // Bead scores keyed by start node, one slot per bead type; -inf when the
  // end node falls outside the band or the lattice.
  std::vector<std::array<double, 5>> scores(alpha.size());
  for (size_t i = 0; i <= n; ++i) {
    for (size_t j = alpha.lo(i); j <= alpha.hi(i); ++j) {
      auto &slot = scores[alpha.Index(i, j)];
      for (BeadType type : kBeadTypes) {
        const size_t ei = i + SourceCount(type), ej = j + TargetCount(type);
        slot[BeadIndex(type)] =
            ei <= n && ej <= m && alpha.Contains(ei, ej) ? scorer(type, i, j)
                                                          : kNegInf;
      }
    }
  }

  alpha.At(0, 0) = 0.0;
  for (size_t i = 0; i <= n; ++i) {
    for (size_t j = alpha.lo(i); j <= alpha.hi(i); ++j) {
      if (i == 0 && j == 0) continue;
      double acc = kNegInf;
      for (BeadType type : kBeadTypes) {
        const size_t di = SourceCount(type), dj = TargetCount(type);
        if (di > i || dj > j || !alpha.Contains(i - di, j - dj)) continue;
        const double prev = alpha.Get(i - di, j - dj);
        if (prev == kNegInf) continue;
        acc = LogAdd(acc, prev + scores[alpha.Index(i - di, j - dj)][BeadIndex(type)]);
      }
      alpha.At(i, j) = acc;
    }
  }

  beta.At(n, m) = 0.0;
  for (size_t i = n + 1; i-- > 0;) {
    for (size_t j = beta.hi(i) + 1; j-- > beta.lo(i);) {
      if (i == n && j == m) continue;
      double acc = kNegInf;
      const auto &slot = scores[beta.Index(i, j)];
      for (BeadType type : kBeadTypes) {
        const double s = slot[BeadIndex(type)];
        if (s == kNegInf) continue;
        const double next = beta.Get(i + SourceCount(type), j + TargetCount(type));
        if (next == kNegInf) continue;
        acc = LogAdd(acc, s + next);
      }
      beta.At(i, j) = acc;
    }
  }

  LatticeResult result;
  result.band = band;
  result.log_forward_total = alpha.Get(n, m);
  result.log_backward_total = beta.Get(0, 0);
  const double z = result.log_forward_total;
  *hit_edge = false;
  if (z == kNegInf) return result;

  for (size_t i = 0; i <= n; ++i) {
    for (size_t j = alpha.lo(i); j <= alpha.hi(i); ++j) {
      const double a = alpha.Get(i, j);
      if (a == kNegInf) continue;
      const bool at_edge = (j <= alpha.lo(i) && alpha.lo(i) > 0) ||
                           (j >= alpha.hi(i) && alpha.hi(i) < m);
      if (at_edge && std::exp(a + beta.Get(i, j) - z) > options.edge_mass) {
        *hit_edge = true;
      }
      const auto &slot = scores[alpha.Index(i, j)];
      for (BeadType type : kBeadTypes) {
        const double s = slot[BeadIndex(type)];
        if (s == kNegInf) continue;
        const size_t ei = i + SourceCount(type), ej = j + TargetCount(type);
        const double p = std::exp(a + s + beta.Get(ei, ej) - z);
        if (p < options.min_posterior) continue;
        result.beads.push_back(
            Bead{type, Span{i, ei}, Span{j, ej}, std::min(p, 1.0)});
      }
    }
  }
  return result;
}

}  // namespace

LatticeResult ForwardBackward(size_t num_src, size_t num_tgt,
                              const BeadScorer &scorer,
                              const LatticeOptions &options) {
  if (num_src == 0 || num_tgt == 0) return {};
  const size_t full = std::max(num_src, num_tgt);
  size_t band = std::max<size_t>(options.min_band, 1);
  while (true) {
    bool hit_edge = false;
    LatticeResult result =
        RunBand(num_src, num_tgt, std::min(band, full), scorer, options, &hit_edge);
    if (band >= full || (!hit_edge && result.log_forward_total !=
                                          -std::numeric_limits<double>::infinity())) {
      return result;
    }
    band *= 2;
  }
}

SentenceFeatures ExtractFeatures(const std::vector<std::string> &sentences) {
  SentenceFeatures features;
  features.lengths.reserve(sentences.size());
  features.tokens.reserve(sentences.size());
  for (const std::string &s : sentences) {
    features.tokens.push_back(SplitWhitespace(s));
    features.lengths.push_back(static_cast<int>(features.tokens.back().size()));
  }
  return features;
}

namespace {

int SumLengths(const std::vector<int> &lengths, size_t begin, int count) {
  int total = 0;
  for (int k = 0; k < count; ++k) total += lengths[begin + k];
  return total;
}

}  // namespace

BeadScorer LengthScorer(const SentenceFeatures &src,
                        const SentenceFeatures &tgt, const LengthModel &model) {
  return [&src, &tgt, model](BeadType type, size_t i, size_t j) {
    return LengthLogProb(type, SumLengths(src.lengths, i, SourceCount(type)),
                         SumLengths(tgt.lengths, j, TargetCount(type)), model);
  };
}

BeadScorer CombinedScorer(const SentenceFeatures &src,
                          const SentenceFeatures &tgt, const LengthModel &model,
                          const TTable &table) {
  struct State {
    std::vector<std::vector<int>> src_ids;
    std::vector<std::vector<int>> tgt_ids;
  };
  auto state = std::make_shared<State>();
  for (const auto &tokens : src.tokens) {
    state->src_ids.push_back(table.SourceIds(tokens));
  }
  for (const auto &tokens : tgt.tokens) {
    state->tgt_ids.push_back(table.TargetIds(tokens));
  }
  BeadScorer length = LengthScorer(src, tgt, model);
  return [state, length, &table](BeadType type, size_t i, size_t j) {
    std::vector<int> s, t;
    for (int k = 0; k < SourceCount(type); ++k) {
      s.insert(s.end(), state->src_ids[i + k].begin(), state->src_ids[i + k].end());
    }
    for (int k = 0; k < TargetCount(type); ++k) {
      t.insert(t.end(), state->tgt_ids[j + k].begin(), state->tgt_ids[j + k].end());
    }
    return length(type, i, j) + Model1LogProb(s, t, table);
  };
}

LatticeResult Pass1Posteriors(const DocumentPair &doc, const LengthModel &model,
                              const LatticeOptions &options) {
  const SentenceFeatures src = ExtractFeatures(doc.source.sentences);
  const SentenceFeatures tgt = ExtractFeatures(doc.target.sentences);
  return ForwardBackward(src.lengths.size(), tgt.lengths.size(),
                         LengthScorer(src, tgt, model), options);
}

LatticeResult Pass2Posteriors(const DocumentPair &doc, const LengthModel &model,
                              const TTable &table,
                              const LatticeOptions &options) {
  const SentenceFeatures src = ExtractFeatures(doc.source.sentences);
  const SentenceFeatures tgt = ExtractFeatures(doc.target.sentences);
  return ForwardBackward(src.lengths.size(), tgt.lengths.size(),
                         CombinedScorer(src, tgt, model, table), options);
}

}  // namespace forge
