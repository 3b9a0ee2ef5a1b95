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

#include "arbor/ordering.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace arbor {

bool Ordering::IsPermutation() const {
  std::vector<char> used(rank.size(), 0);
  for (Rank r : rank) {
    if (r < 1 || r > size() || used[r - 1]) return false;
    used[r - 1] = 1;
  }
  return true;
}

std::vector<Vertex> Ordering::Sequence() const {
  std::vector<Vertex> labels(rank.size());
  for (Vertex v = 0; v < size(); ++v) labels[rank[v] - 1] = v;
  return labels;
}

Ordering Ordering::Identity(Vertex n) {
  Ordering o;
  o.rank.resize(n);
  std::iota(o.rank.begin(), o.rank.end(), 1);
  return o;
}

Ordering Ordering::FromSequence(std::span<const Vertex> labels_by_rank) {
  Ordering o;
  o.rank.assign(labels_by_rank.size(), 0);
  for (std::size_t r = 0; r < labels_by_rank.size(); ++r) {
    o.rank.at(labels_by_rank[r]) = static_cast<Rank>(r + 1);
  }
  if (!o.IsPermutation()) {
    throw std::invalid_argument("sequence is not a permutation of labels");
  }
  return o;
}

std::vector<TieBlock> TieBlocks(const ScoreVector& scores) {
  const auto& values = scores.values;
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("scores must be finite");
  }
  std::vector<Vertex> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  if (scores.direction == Direction::kAscending) {
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return values[a] < values[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return values[a] > values[b]; });
  }
  std::vector<TieBlock> blocks;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    TieBlock block;
    block.first_rank = static_cast<Rank>(i + 1);
    while (j < order.size() && values[order[j]] == values[order[i]]) {
      block.members.push_back(order[j]);
      ++j;
    }
    blocks.push_back(std::move(block));
    i = j;
  }
  return blocks;
}

Ordering OrderByScores(const ScoreVector& scores, Rng& rng) {
  Ordering o;
  o.rank.assign(scores.values.size(), 0);
  for (auto& block : TieBlocks(scores)) {
    rng.Shuffle(std::span<Vertex>(block.members));
    Rank r = block.first_rank;
    for (Vertex v : block.members) o.rank[v] = r++;
  }
  return o;
}

bool IsRecursiveOrdering(const LabeledTree& tree, const Ordering& ordering) {
  if (ordering.size() != tree.size() || !ordering.IsPermutation()) return false;
  for (Vertex v = 0; v < tree.size(); ++v) {
    if (ordering.rank[v] == 1) continue;
    int earlier = 0;
    for (Vertex u : tree.neighbors(v)) {
      if (ordering.rank[u] < ordering.rank[v]) ++earlier;
    }
    if (earlier != 1) return false;
  }
  return true;
}

}  // namespace arbor
