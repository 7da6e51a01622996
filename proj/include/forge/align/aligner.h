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

// Two-pass lexicon-free sentence aligner.
//
//   1. Fit the length ratio over all documents.
//   2. Pass 1: forward-backward under the length model; keep 1-1 beads with
//      posterior >= pass1_threshold as training pairs.
//   3. Train IBM Model 1 on those pairs (rare words collapsed to <RARE>).
//   4. Pass 2: forward-backward under length + Model 1; emit 1-1 beads with
//      posterior >= threshold.
//
// Only 1-1 beads are ever emitted. Output pairs are strictly monotone in
// both indices.

#ifndef FORGE_ALIGN_ALIGNER_H_
#define FORGE_ALIGN_ALIGNER_H_

#include <array>
#include <string>
#include <vector>

#include "forge/align/lattice.h"
#include "forge/align/length_model.h"
#include "forge/align/model1.h"
#include "forge/align/types.h"

namespace forge {

struct AlignConfig {
  std::array<double, 5> bead_priors = LengthModel().bead_priors;
  double pass1_threshold = 0.99;
  double threshold = 0.5;
  int iterations = 4;
  double floor = 1e-9;
  int min_word_count = 2;
  LatticeOptions lattice;

  // Throws ConfigError on out-of-range values.
  void Validate() const;
};

// 1-1 beads with posterior >= threshold, as pairs in source order. Throws
// InvalidArgument unless 0 < threshold <= 1.
std::vector<AlignedPair> SelectTrainingPairs(const std::vector<Bead> &beads,
                                             double threshold,
                                             const DocumentPair &doc);

// Second pass over one document. A threshold above 1 yields no pairs.
std::vector<AlignedPair> Pass2Align(const DocumentPair &doc,
                                    const LengthModel &model,
                                    const TTable &table, double threshold,
                                    const LatticeOptions &options = {});

struct AlignmentReportRow {
  std::string id;
  size_t source_sentences = 0;
  size_t target_sentences = 0;
  size_t pairs = 0;
};

struct AlignmentReport {
  std::vector<AlignmentReportRow> rows;

  size_t TotalPairs() const;
};

struct CorpusAlignment {
  // One list per input document, in input order.
  std::vector<std::vector<AlignedPair>> pairs;
  AlignmentReport report;
  LengthModel length_model;
  TTable table;
  std::vector<double> em_log_likelihood;
  size_t training_pairs = 0;
};

CorpusAlignment AlignCorpus(const std::vector<DocumentPair> &docs,
                            const AlignConfig &config = {});

}  // namespace forge

#endif  // FORGE_ALIGN_ALIGNER_H_
