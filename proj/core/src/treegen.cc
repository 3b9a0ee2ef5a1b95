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

#include "arbor/treegen.h"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace arbor {
namespace {

void CheckSize(Vertex n) {
  if (n < 1) throw std::invalid_argument("tree size must be >= 1");
}

}  // namespace

RecursiveTree GenerateUrrt(Vertex n, Rng& rng) {
  CheckSize(n);
  std::vector<Vertex> parents(n, kNoVertex);
  for (Vertex t = 1; t < n; ++t) {
    parents[t] = static_cast<Vertex>(rng.Below(static_cast<std::uint64_t>(t)));
  }
  return RecursiveTree(std::move(parents));
}

RecursiveTree GeneratePa(Vertex n, Rng& rng) {
  CheckSize(n);
  std::vector<Vertex> parents(n, kNoVertex);
  if (n == 1) return RecursiveTree(std::move(parents));
  std::vector<Vertex> half_edges;
  half_edges.reserve(2 * static_cast<std::size_t>(n - 1));
  parents[1] = 0;
  half_edges.push_back(0);
  half_edges.push_back(1);
  for (Vertex t = 2; t < n; ++t) {
    const Vertex p = half_edges[rng.Below(half_edges.size())];
    parents[t] = p;
    half_edges.push_back(p);
    half_edges.push_back(t);
  }
  return RecursiveTree(std::move(parents));
}

RecursiveTree Generate(Model model, Vertex n, Rng& rng) {
  return model == Model::kUrrt ? GenerateUrrt(n, rng) : GeneratePa(n, rng);
}

LabeledInstance ShuffleLabels(const RecursiveTree& tree, Rng& rng) {
  std::vector<Vertex> labels(tree.size());
  std::iota(labels.begin(), labels.end(), 0);
  rng.Shuffle(std::span<Vertex>(labels));
  LabeledTree shape = LabeledTree::FromRecursive(tree, labels);
  return {std::move(shape), GroundTruth::FromArrivalLabels(std::move(labels))};
}

}  // namespace arbor
