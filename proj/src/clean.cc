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

#include "forge/clean.h"

#include <algorithm>

#include "forge/error.h"
#include "forge/unicode.h"

namespace forge {

void CleanConfig::Validate() const {
  if (max_tokens < 1) throw ConfigError("max tokens must be >= 1");
  if (!(max_ratio >= 1.0)) throw ConfigError("max ratio must be >= 1");
}

const char *RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kNone: return "kept";
    case RejectReason::kEmpty: return "empty";
    case RejectReason::kTooLong: return "too_long";
    case RejectReason::kRatio: return "ratio";
  }
  return "unknown";
}

RejectReason Classify(size_t src_tokens, size_t tgt_tokens,
                      const CleanConfig &cfg) {
  if (src_tokens == 0 || tgt_tokens == 0) return RejectReason::kEmpty;
  if (src_tokens > cfg.max_tokens || tgt_tokens > cfg.max_tokens) {
    return RejectReason::kTooLong;
  }
  // Compare max <= ratio * min without dividing.
  const double longer = static_cast<double>(std::max(src_tokens, tgt_tokens));
  const double shorter = static_cast<double>(std::min(src_tokens, tgt_tokens));
  if (longer > cfg.max_ratio * shorter) return RejectReason::kRatio;
  return RejectReason::kNone;
}

CleanResult FilterPairs(const std::vector<AlignedPair> &pairs,
                        const CleanConfig &cfg) {
  cfg.Validate();
  CleanResult result;
  result.report.input = pairs.size();
  for (const AlignedPair &pair : pairs) {
    switch (Classify(CountTokens(pair.src_sentence),
                     CountTokens(pair.tgt_sentence), cfg)) {
      case RejectReason::kNone:
        result.kept.push_back(pair);
        break;
      case RejectReason::kEmpty: ++result.report.empty; break;
      case RejectReason::kTooLong: ++result.report.too_long; break;
      case RejectReason::kRatio: ++result.report.ratio; break;
    }
  }
  result.report.kept = result.kept.size();
  return result;
}

}  // namespace forge
