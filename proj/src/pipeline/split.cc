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

#include "forge/pipeline/split.h"

#include <limits>
#include <numeric>

#include "forge/error.h"

namespace forge {

ResolvedSplit ResolveSplit(const SplitSizes &sizes, size_t corpus_size) {
  if (sizes.dev == 0 || sizes.test == 0 || (sizes.train && *sizes.train == 0)) {
    throw InvalidArgument("split sizes must be positive");
  }
  ResolvedSplit out;
  out.dev = sizes.dev;
  out.test = sizes.test;
  const size_t held_out = sizes.dev + sizes.test;
  const size_t train = sizes.train.value_or(
      corpus_size > held_out ? corpus_size - held_out : 0);
  if (train == 0 || train + held_out > corpus_size) {
    throw InvalidArgument("split sizes " + std::to_string(train) + "+" +
                          std::to_string(sizes.dev) + "+" +
                          std::to_string(sizes.test) + " exceed corpus of " +
                          std::to_string(corpus_size) + " pairs");
  }
  out.train = train;
  out.unassigned = corpus_size - train - held_out;
  return out;
}

uint64_t UniformBelow(uint64_t bound, std::mt19937_64 *rng) {
  if (bound == 0) throw InvalidArgument("empty range");
  // Largest multiple of bound that fits, to avoid modulo bias.
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % bound;
  uint64_t x;
  do {
    x = (*rng)();
  } while (x >= limit);
  return x % bound;
}

std::vector<size_t> ShuffledIndices(size_t n, uint64_t seed) {
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(seed);
  for (size_t i = n; i > 1; --i) {
    const size_t j = static_cast<size_t>(UniformBelow(i, &rng));
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

CorpusSplit SplitCorpus(const std::vector<AlignedPair> &pairs,
                        const SplitSizes &sizes, uint64_t seed) {
  CorpusSplit split;
  split.sizes = ResolveSplit(sizes, pairs.size());
  const std::vector<size_t> order = ShuffledIndices(pairs.size(), seed);
  size_t k = 0;
  for (size_t i = 0; i < split.sizes.train; ++i) split.train.push_back(pairs[order[k++]]);
  for (size_t i = 0; i < split.sizes.dev; ++i) split.dev.push_back(pairs[order[k++]]);
  for (size_t i = 0; i < split.sizes.test; ++i) split.test.push_back(pairs[order[k++]]);
  return split;
}

}  // namespace forge
