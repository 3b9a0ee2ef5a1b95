// Copyright 2026 The Arbor Authors
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

#ifndef ARBOR_ORDERING_H_
#define ARBOR_ORDERING_H_

#include <span>
#include <vector>

#include "arbor/rng.h"
#include "arbor/tree.h"

namespace arbor {

enum class Direction {
  kAscending,   // smaller score, earlier rank
  kDescending,  // larger score, earlier rank
};

struct ScoreVector {
  std::vector<double> values;
  Direction direction = Direction::kAscending;

  template <typename T>
  static ScoreVector From(std::span<const T> scores, Direction direction) {
    return {std::vector<double>(scores.begin(), scores.end()), direction};
  }
  template <typename T>
  static ScoreVector From(const std::vector<T>& scores, Direction direction) {
    return From(std::span<const T>(scores), direction);
  }
};

// Estimated arrival ranks: rank[label] in 1..n, a bijection.
struct Ordering {
  std::vector<Rank> rank;

  Vertex size() const { return static_cast<Vertex>(rank.size()); }
  bool IsPermutation() const;
  // Labels listed by increasing rank.
  std::vector<Vertex> Sequence() const;

  static Ordering Identity(Vertex n);
  static Ordering FromSequence(std::span<const Vertex> labels_by_rank);

  friend bool operator==(const Ordering&, const Ordering&) = default;
};

// A run of equal scores occupying ranks first_rank .. first_rank+size-1.
struct TieBlock {
  Rank first_rank = 1;
  std::vector<Vertex> members;
};

// Partitions labels into tie blocks in rank order. Members keep increasing
// label order inside a block.
std::vector<TieBlock> TieBlocks(const ScoreVector& scores);

// Ranks by score, strictly across distinct values; each tie block receives a
// uniformly random permutation of its rank interval.
Ordering OrderByScores(const ScoreVector& scores, Rng& rng);

// True when the rank-1 vertex is a valid root and every later vertex has
// exactly one neighbor of smaller rank.
bool IsRecursiveOrdering(const LabeledTree& tree, const Ordering& ordering);

}  // namespace arbor

#endif  // ARBOR_ORDERING_H_
