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

// Length and ratio filtering of sentence pairs before SMT training.

#ifndef FORGE_CLEAN_H_
#define FORGE_CLEAN_H_

#include <vector>

#include "forge/align/types.h"

namespace forge {

struct CleanConfig {
  size_t max_tokens = 80;
  // A pair is kept when max(len)/min(len) <= max_ratio.
  double max_ratio = 9.0;

  void Validate() const;
};

enum class RejectReason { kNone, kEmpty, kTooLong, kRatio };

const char *RejectReasonName(RejectReason reason);

struct RejectionReport {
  size_t input = 0;
  size_t kept = 0;
  size_t empty = 0;
  size_t too_long = 0;
  size_t ratio = 0;

  size_t rejected() const { return empty + too_long + ratio; }
};

// Reasons are checked in order empty, too long, ratio.
RejectReason Classify(size_t src_tokens, size_t tgt_tokens,
                      const CleanConfig &cfg);

struct CleanResult {
  std::vector<AlignedPair> kept;
  RejectionReport report;
};

// Survivors keep their relative order.
CleanResult FilterPairs(const std::vector<AlignedPair> &pairs,
                        const CleanConfig &cfg = {});

}  // namespace forge

#endif  // FORGE_CLEAN_H_
