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

// Exhaustive enumeration of monotone bead alignments.
//
// Visits every path from (0, 0) to (n, m) built from 1-1, 1-0, 0-1, 2-1
// and 1-2 beads, and sums path weights per bead. Only usable for small
// documents; the number of paths grows exponentially.

#ifndef FORGE_TESTS_ORACLES_LATTICE_ENUMERATOR_H_
#define FORGE_TESTS_ORACLES_LATTICE_ENUMERATOR_H_

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

// (source count, target count) of the five bead shapes, in the library's
// BeadType order.
inline constexpr int kShapes[5][2] = {{1, 1}, {1, 0}, {0, 1}, {2, 1}, {1, 2}};

// (shape index, source begin, target begin).
using BeadKey = std::tuple<int, size_t, size_t>;

struct Enumeration {
  std::map<BeadKey, double> posteriors;
  size_t paths = 0;
};

using ShapeScorer = std::function<double(int shape, size_t i, size_t j)>;

class PathEnumerator {
 public:
  PathEnumerator(size_t n, size_t m, ShapeScorer score)
      : n_(n), m_(m), score_(std::move(score)) {}

  Enumeration Run() {
    // Bead scores are looked up once; the walk below only adds them up.
    cache_.assign(5 * (n_ + 1) * (m_ + 1), 0.0L);
    for (int k = 0; k < 5; ++k) {
      for (size_t i = 0; i + kShapes[k][0] <= n_; ++i) {
        for (size_t j = 0; j + kShapes[k][1] <= m_; ++j) {
          cache_[Index(k, i, j)] = score_(k, i, j);
        }
      }
    }
    shift_ = BestPathScore();
    total_ = 0.0L;
    mass_.assign(cache_.size(), 0.0L);
    stack_.clear();
    paths_ = 0;
    Visit(0, 0, 0.0L);
    Enumeration out;
    out.paths = paths_;
    for (int k = 0; k < 5; ++k) {
      for (size_t i = 0; i <= n_; ++i) {
        for (size_t j = 0; j <= m_; ++j) {
          const long double mass = mass_[Index(k, i, j)];
          if (mass > 0.0L) {
            out.posteriors[{k, i, j}] = static_cast<double>(mass / total_);
          }
        }
      }
    }
    return out;
  }

 private:
  size_t Index(int k, size_t i, size_t j) const {
    return (static_cast<size_t>(k) * (n_ + 1) + i) * (m_ + 1) + j;
  }

  // Largest single path score, used to keep the exponentials in range.
  long double BestPathScore() const {
    const long double kNegInf = -std::numeric_limits<long double>::infinity();
    std::vector<std::vector<long double>> best(
        n_ + 1, std::vector<long double>(m_ + 1, kNegInf));
    best[0][0] = 0.0L;
    for (size_t i = 0; i <= n_; ++i) {
      for (size_t j = 0; j <= m_; ++j) {
        if (best[i][j] == kNegInf) continue;
        for (int k = 0; k < 5; ++k) {
          const size_t ni = i + kShapes[k][0], nj = j + kShapes[k][1];
          if (ni > n_ || nj > m_) continue;
          const long double s = best[i][j] + cache_[Index(k, i, j)];
          if (s > best[ni][nj]) best[ni][nj] = s;
        }
      }
    }
    return best[n_][m_];
  }

  void Visit(size_t i, size_t j, long double score) {
    if (i == n_ && j == m_) {
      const long double w = std::exp(score - shift_);
      total_ += w;
      ++paths_;
      for (size_t index : stack_) mass_[index] += w;
      return;
    }
    for (int k = 0; k < 5; ++k) {
      const size_t ni = i + kShapes[k][0], nj = j + kShapes[k][1];
      if (ni > n_ || nj > m_) continue;
      const size_t index = Index(k, i, j);
      stack_.push_back(index);
      Visit(ni, nj, score + cache_[index]);
      stack_.pop_back();
    }
  }

  size_t n_, m_;
  ShapeScorer score_;
  std::vector<long double> cache_;
  long double shift_ = 0.0L;
  long double total_ = 0.0L;
  std::vector<long double> mass_;
  std::vector<size_t> stack_;
  size_t paths_ = 0;
};

}  // namespace oracle

#endif  // FORGE_TESTS_ORACLES_LATTICE_ENUMERATOR_H_
