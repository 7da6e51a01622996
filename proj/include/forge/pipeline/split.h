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

// Seeded train/dev/test splitting.
//
// Pair indices are shuffled with Fisher-Yates driven by the raw output of
// std::mt19937_64; bounded draws use rejection sampling, so a seed gives
// the same permutation on every platform.

#ifndef FORGE_PIPELINE_SPLIT_H_
#define FORGE_PIPELINE_SPLIT_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "forge/align/types.h"

namespace forge {

struct SplitSizes {
  // Unset means "every pair not used by dev and test".
  std::optional<size_t> train;
  size_t dev = 0;
  size_t test = 0;
};

struct ResolvedSplit {
  size_t train = 0;
  size_t dev = 0;
  size_t test = 0;
  size_t unassigned = 0;

  size_t total() const { return train + dev + test + unassigned; }
};

// Throws InvalidArgument when a size is zero or the sizes exceed the corpus.
ResolvedSplit ResolveSplit(const SplitSizes &sizes, size_t corpus_size);

// Uniform draw from [0, bound) by rejection sampling. Throws InvalidArgument
// when bound is zero.
uint64_t UniformBelow(uint64_t bound, std::mt19937_64 *rng);

// A Fisher-Yates permutation of 0..n-1.
std::vector<size_t> ShuffledIndices(size_t n, uint64_t seed);

struct CorpusSplit {
  std::vector<AlignedPair> train;
  std::vector<AlignedPair> dev;
  std::vector<AlignedPair> test;
  ResolvedSplit sizes;
};

// Shuffles, then takes train, dev and test as consecutive runs of the
// permutation. Pairs past the last run are left unassigned.
CorpusSplit SplitCorpus(const std::vector<AlignedPair> &pairs,
                        const SplitSizes &sizes, uint64_t seed);

}  // namespace forge

#endif  // FORGE_PIPELINE_SPLIT_H_
