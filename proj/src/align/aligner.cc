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

#include "forge/align/aligner.h"

#include <algorithm>
#include <iterator>
#include <map>

#include "forge/error.h"
#include "forge/unicode.h"

namespace forge {
namespace {

// Keeps the highest-posterior 1-1 beads that form a strictly increasing
// chain in both indices. Beads above 0.5 never conflict; the filter only
// matters for lower thresholds or exact ties.
std::vector<AlignedPair> ToMonotonePairs(const std::vector<Bead> &beads,
                                         double threshold,
                                         const DocumentPair &doc) {
  std::vector<const Bead *> candidates;
  for (const Bead &bead : beads) {
    if (bead.type == BeadType::k11 && bead.posterior >= threshold) {
      candidates.push_back(&bead);
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Bead *a, const Bead *b) {
                     if (a->posterior != b->posterior) {
                       return a->posterior > b->posterior;
                     }
                     return a->src.begin < b->src.begin;
                   });
  std::map<size_t, const Bead *> kept;
  for (const Bead *bead : candidates) {
    const size_t s = bead->src.begin, t = bead->tgt.begin;
    auto next = kept.lower_bound(s);
    if (next != kept.end() && (next->first == s || next->second->tgt.begin <= t)) {
      continue;
    }
    if (next != kept.begin() && std::prev(next)->second->tgt.begin >= t) continue;
    kept.emplace(s, bead);
  }
  std::vector<AlignedPair> pairs;
  pairs.reserve(kept.size());
  for (const auto &[s, bead] : kept) {
    AlignedPair pair;
    pair.src_index = s;
    pair.tgt_index = bead->tgt.begin;
    pair.src_sentence = doc.source.sentences[s];
    pair.tgt_sentence = doc.target.sentences[bead->tgt.begin];
    pair.posterior = bead->posterior;
    pair.provenance = doc.id;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace

void AlignConfig::Validate() const {
  LengthModel probe;
  probe.bead_priors = bead_priors;
  probe.Validate();
  if (!(pass1_threshold > 0.0 && pass1_threshold <= 1.0)) {
    throw ConfigError("pass-1 threshold must lie in (0, 1]");
  }
  if (!(threshold > 0.0)) throw ConfigError("threshold must be positive");
  if (iterations < 1) throw ConfigError("Model 1 iterations must be >= 1");
  if (!(floor > 0.0 && floor < 1.0)) {
    throw ConfigError("probability floor must lie in (0, 1)");
  }
  if (min_word_count < 1) throw ConfigError("min word count must be >= 1");
}

std::vector<AlignedPair> SelectTrainingPairs(const std::vector<Bead> &beads,
                                             double threshold,
                                             const DocumentPair &doc) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw InvalidArgument("selection threshold must lie in (0, 1]");
  }
  return ToMonotonePairs(beads, threshold, doc);
}

std::vector<AlignedPair> Pass2Align(const DocumentPair &doc,
                                    const LengthModel &model,
                                    const TTable &table, double threshold,
                                    const LatticeOptions &options) {
  if (threshold > 1.0) return {};
  const LatticeResult lattice = Pass2Posteriors(doc, model, table, options);
  return ToMonotonePairs(lattice.beads, threshold, doc);
}

size_t AlignmentReport::TotalPairs() const {
  size_t total = 0;
  for (const AlignmentReportRow &row : rows) total += row.pairs;
  return total;
}

CorpusAlignment AlignCorpus(const std::vector<DocumentPair> &docs,
                            const AlignConfig &config) {
  config.Validate();
  if (docs.empty()) throw InvalidArgument("no documents to align");

  CorpusAlignment out{{}, {}, FitLengthModel(docs, config.bead_priors),
                      TTable(config.floor), {}, 0};

  std::vector<TokenPair> training;
  for (const DocumentPair &doc : docs) {
    const LatticeResult pass1 =
        Pass1Posteriors(doc, out.length_model, config.lattice);
    for (const AlignedPair &pair :
         SelectTrainingPairs(pass1.beads, config.pass1_threshold, doc)) {
      training.emplace_back(SplitWhitespace(pair.src_sentence),
                            SplitWhitespace(pair.tgt_sentence));
    }
  }
  out.training_pairs = training.size();
  if (training.empty()) {
    throw DegenerateCorpusError(
        "pass 1 selected no sentence pairs to train Model 1 on");
  }

  Ibm1Options ibm1;
  ibm1.iterations = config.iterations;
  ibm1.floor = config.floor;
  Ibm1Result model1 =
      TrainIbm1(MapRareWords(training, config.min_word_count), ibm1);
  out.table = std::move(model1.table);
  out.em_log_likelihood = std::move(model1.log_likelihood);

  for (const DocumentPair &doc : docs) {
    out.pairs.push_back(Pass2Align(doc, out.length_model, out.table,
                                   config.threshold, config.lattice));
    out.report.rows.push_back({doc.id, doc.source.sentences.size(),
                               doc.target.sentences.size(),
                               out.pairs.back().size()});
  }
  return out;
}

}  // namespace forge
