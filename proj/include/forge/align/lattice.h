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

// Forward-backward over the monotone bead lattice.
//
// Node (i, j) means "the first i source and j target sentences are
// aligned". A bead of type (di, dj) starting at (i, j) ends at
// (i + di, j + dj). All arithmetic is in log space.
//
// The lattice is restricted to a band of half-width w around the line
// j = i * m / n. If a node on the band edge carries more than `edge_mass`
// posterior, w is doubled and the pass repeated, until the
// band covers the whole lattice.

#ifndef FORGE_ALIGN_LATTICE_H_
#define FORGE_ALIGN_LATTICE_H_

#include <functional>
#include <vector>

#include "forge/align/length_model.h"
#include "forge/align/model1.h"
#include "forge/align/types.h"

namespace forge {

// Log score of a bead of `type` starting at source sentence `src_begin` and
// target sentence `tgt_begin`.
using BeadScorer =
    std::function<double(BeadType type, size_t src_begin, size_t tgt_begin)>;

struct LatticeOptions {
  size_t min_band = 20;
  double edge_mass = 1e-6;
  // Beads below this posterior are not reported.
  double min_posterior = 1e-12;
};

struct LatticeResult {
  // Every bead with posterior >= min_posterior, ordered by start node and
  // then bead type.
  std::vector<Bead> beads;
  double log_forward_total = 0.0;
  double log_backward_total = 0.0;
  size_t band = 0;
};

// Returns an empty result when either side has no sentences.
LatticeResult ForwardBackward(size_t num_src, size_t num_tgt,
                              const BeadScorer &scorer,
                              const LatticeOptions &options = {});

// Per-sentence features consumed by the scorers.
struct SentenceFeatures {
  std::vector<int> lengths;
  std::vector<std::vector<std::string>> tokens;
};

SentenceFeatures ExtractFeatures(const std::vector<std::string> &sentences);

// Length-only bead score.
BeadScorer LengthScorer(const SentenceFeatures &src,
                        const SentenceFeatures &tgt, const LengthModel &model);

// Length score plus Model 1 score of the bead's target tokens given its
// source tokens.
BeadScorer CombinedScorer(const SentenceFeatures &src,
                          const SentenceFeatures &tgt, const LengthModel &model,
                          const TTable &table);

// First pass: posteriors under the length model alone.
LatticeResult Pass1Posteriors(const DocumentPair &doc, const LengthModel &model,
                              const LatticeOptions &options = {});

// Second pass: posteriors under the combined model.
LatticeResult Pass2Posteriors(const DocumentPair &doc, const LengthModel &model,
                              const TTable &table,
                              const LatticeOptions &options = {});

}  // namespace forge

#endif  // FORGE_ALIGN_LATTICE_H_
