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

// Poisson sentence-length model.
//
// For beads with sentences on both sides the target token count is Poisson
// with mean ratio * (source token count). A 1-0 bead is scored as a source
// span that produced zero target tokens, Poisson(0; ratio * ls) = -ratio*ls
// in log space; a 0-1 bead symmetrically as Poisson(0; lt / ratio).

#ifndef FORGE_ALIGN_LENGTH_MODEL_H_
#define FORGE_ALIGN_LENGTH_MODEL_H_

#include <array>
#include <span>
#include <vector>

#include "forge/align/types.h"

namespace forge {

struct LengthModel {
  double ratio = 1.0;
  // Indexed by BeadIndex(); order 1-1, 1-0, 0-1, 2-1, 1-2.
  std::array<double, 5> bead_priors = {0.94, 0.02, 0.02, 0.01, 0.01};

  double prior(BeadType type) const { return bead_priors[BeadIndex(type)]; }

  // Throws ConfigError unless ratio > 0, every prior > 0 and priors sum to 1.
  void Validate() const;
};

// log Poisson(k; mean), with Poisson(0; 0) = 1 and Poisson(k>0; 0) = 0.
double LogPoisson(int k, double mean);

// Length score of a bead given its total token counts.
double LengthLogProb(BeadType type, int src_tokens, int tgt_tokens,
                     const LengthModel &model);

// Same, summing per-sentence token counts over the bead's spans.
double LengthBeadLogProb(const Bead &bead, std::span<const int> src_lens,
                         std::span<const int> tgt_lens,
                         const LengthModel &model);

// ratio = total target tokens / total source tokens; priors keep the
// defaults passed in. Throws DegenerateCorpusError on zero source tokens.
LengthModel FitLengthModel(const std::vector<DocumentPair> &docs,
                           const std::array<double, 5> &bead_priors =
                               LengthModel().bead_priors);

std::vector<int> TokenCounts(const std::vector<std::string> &sentences);

}  // namespace forge

#endif  // FORGE_ALIGN_LENGTH_MODEL_H_
