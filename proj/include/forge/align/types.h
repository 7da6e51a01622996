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

#ifndef FORGE_ALIGN_TYPES_H_
#define FORGE_ALIGN_TYPES_H_

#include <array>
#include <string>
#include <vector>

namespace forge {

// Sentence counts (source, target) covered by a lattice bead.
enum class BeadType { k11, k10, k01, k21, k12 };

inline constexpr std::array<BeadType, 5> kBeadTypes = {
    BeadType::k11, BeadType::k10, BeadType::k01, BeadType::k21,
    BeadType::k12};

constexpr int SourceCount(BeadType type) {
  switch (type) {
    case BeadType::k11: return 1;
    case BeadType::k10: return 1;
    case BeadType::k01: return 0;
    case BeadType::k21: return 2;
    case BeadType::k12: return 1;
  }
  return 0;
}

constexpr int TargetCount(BeadType type) {
  switch (type) {
    case BeadType::k11: return 1;
    case BeadType::k10: return 0;
    case BeadType::k01: return 1;
    case BeadType::k21: return 1;
    case BeadType::k12: return 2;
  }
  return 0;
}

constexpr size_t BeadIndex(BeadType type) { return static_cast<size_t>(type); }

const char *BeadTypeName(BeadType type);

// Half-open sentence index range.
struct Span {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool operator==(const Span &) const = default;
};

// One cell of the alignment lattice with its posterior probability.
struct Bead {
  BeadType type = BeadType::k11;
  Span src;
  Span tgt;
  double posterior = 0.0;
};

// An ordered list of sentences in one language.
struct Document {
  std::string id;
  std::string language;
  std::vector<std::string> sentences;
};

struct DocumentPair {
  std::string id;
  Document source;
  Document target;
};

// An accepted 1-1 sentence pair.
struct AlignedPair {
  std::string src_sentence;
  std::string tgt_sentence;
  size_t src_index = 0;
  size_t tgt_index = 0;
  double posterior = 0.0;
  std::string provenance;
};

}  // namespace forge

#endif  // FORGE_ALIGN_TYPES_H_
