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

#include "arbor/estimators.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "arbor/centrality.h"

namespace arbor {
namespace {

constexpr std::array<std::pair<Estimator, std::string_view>, 6> kNames = {{
    {Estimator::kJordan, "jordan"},
    {Estimator::kDescendant, "descendant"},
    {Estimator::kDegree, "degree"},
    {Estimator::kSpectral, "spectral"},
    {Estimator::kReverseDmc, "reverse_dmc"},
    {Estimator::kRandom, "random"},
}};

}  // namespace

std::string_view EstimatorName(Estimator estimator) {
  for (const auto& [e, name] : kNames) {
    if (e == estimator) return name;
  }
  return "unknown";
}

Estimator ParseEstimator(std::string_view name) {
  for (const auto& [e, n] : kNames) {
    if (n == name) return e;
  }
  throw std::invalid_argument("unknown estimator '" + std::string(name) + "'");
}

const std::vector<Estimator>& AllEstimators() {
  static const std::vector<Estimator> all = [] {
    std::vector<Estimator> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return all;
}

Ordering JordanOrdering(const LabeledTree& tree, Rng& rng) {
  return OrderByScores(
      ScoreVector::From(JordanCentrality(tree), Direction::kAscending), rng);
}

Ordering DescendantOrdering(const LabeledTree& tree, Vertex root, Rng& rng) {
  return OrderByScores(ScoreVector::From(DescendantCentrality(tree, root),
                                         Direction::kAscending),
                       rng);
}

CoupledOrderings CoupledJordanDescendant(const LabeledTree& tree, Vertex root,
                                         Rng& rng) {
  tree.CheckVertex(root);
  CoupledOrderings out{JordanOrdering(tree, rng), Ordering{}};
  const CentroidReport report = Centroid(tree, root);
  std::vector<char> on_path(tree.size(), 0);
  for (Vertex v : report.path_to_centroid) on_path[v] = 1;

  out.descendant.rank.assign(tree.size(), 0);
  const auto de = Descendants(tree, root);
  for (auto& block :
       TieBlocks(ScoreVector::From(de, Direction::kDescending))) {
    auto& members = block.members;
    rng.Shuffle(std::span<Vertex>(members));
    std::vector<Vertex> off_path;
    for (Vertex v : members) {
      if (!on_path[v]) off_path.push_back(v);
    }
    std::sort(off_path.begin(), off_path.end(), [&](Vertex a, Vertex b) {
      return out.jordan.rank[a] < out.jordan.rank[b];
    });
    auto next = off_path.begin();
    for (auto& v : members) {
      if (!on_path[v]) v = *next++;
    }
    Rank r = block.first_rank;
    for (Vertex v : members) out.descendant.rank[v] = r++;
  }
  return out;
}

Ordering DegreeOrdering(const LabeledTree& tree, Rng& rng) {
  return OrderByScores(
      ScoreVector::From(DegreeVector(tree), Direction::kDescending), rng);
}

Ordering RandomOrdering(Vertex n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("RandomOrdering: n must be >= 1");
  std::vector<Vertex> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  rng.Shuffle(std::span<Vertex>(labels));
  return Ordering::FromSequence(labels);
}

Ordering ReverseDmcOrdering(const LabeledTree& tree, Rng& rng) {
  const Vertex n = tree.size();
  Ordering o;
  o.rank.assign(n, 0);
  if (n == 1) {
    o.rank[0] = 1;
    return o;
  }
  std::vector<Vertex> degree = DegreeVector(tree);
  // XOR of live neighbors; for a leaf this is its only neighbor.
  std::vector<Vertex> neighbor_xor(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : tree.neighbors(v)) neighbor_xor[v] ^= u;
  }
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push_back(v);
  }
  for (Vertex m = n; m >= 3; --m) {
    Vertex best = 0;
    std::size_t ties = 0;
    for (Vertex leaf : leaves) {
      const Vertex score = degree[neighbor_xor[leaf]] - 1;
      if (score > best) {
        best = score;
        ties = 1;
      } else if (score == best) {
        ++ties;
      }
    }
    std::size_t pick = rng.Below(ties);
    std::size_t at = 0;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (degree[neighbor_xor[leaves[i]]] - 1 == best && pick-- == 0) {
        at = i;
        break;
      }
    }
    const Vertex leaf = leaves[at];
    leaves[at] = leaves.back();
    leaves.pop_back();
    o.rank[leaf] = m;
    const Vertex p = neighbor_xor[leaf];
    --degree[p];
    neighbor_xor[p] ^= leaf;
    degree[leaf] = 0;
    if (degree[p] == 1) leaves.push_back(p);
  }
  // The last two vertices are interchangeable.
  const bool swap = rng.Coin();
  o.rank[leaves[swap ? 1 : 0]] = 2;
  o.rank[leaves[swap ? 0 : 1]] = 1;
  return o;
}

Ordering SpectralOrdering(const LabeledTree& tree, Rng& rng,
                          const SpectralOptions& options) {
  if (tree.size() == 1) return Ordering::Identity(1);
  const EigenResult fiedler = FiedlerVector(tree, rng, options);
  const auto degrees = DegreeVector(tree);
  auto oriented = Orient(fiedler.vector, degrees, rng);
  return OrderByScores({std::move(oriented), Direction::kAscending}, rng);
}

}  // namespace arbor
