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

// Randomized properties over hand-rolled tree generators.

#include <algorithm>
#include <numeric>

#include "arbor/centrality.h"
#include "arbor/estimators.h"
#include "arbor/experiment.h"
#include "arbor/risk.h"
#include "arbor/treegen.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace arbor {
namespace {

struct Relabeled {
  LabeledTree tree;
  std::vector<Vertex> map;  // old label -> new label
};

Relabeled Relabel(const LabeledTree& tree, Rng& rng) {
  std::vector<Vertex> map(tree.size());
  std::iota(map.begin(), map.end(), 0);
  rng.Shuffle(std::span<Vertex>(map));
  std::vector<Edge> edges;
  for (auto [u, v] : tree.Edges()) edges.emplace_back(map[u], map[v]);
  return {LabeledTree(tree.size(), edges), map};
}

class RandomTreeProperty : public ::testing::TestWithParam<int> {};

TEST_P(RandomTreeProperty, JordanCommutesWithRelabeling) {
  Rng rng(1000 + GetParam());
  for (int i = 0; i < 40; ++i) {
    const auto tree = testing::RandomLabeledTree(1 + rng.Below(120), rng);
    const auto moved = Relabel(tree, rng);
    const auto psi = JordanCentrality(tree);
    const auto psi_moved = JordanCentrality(moved.tree);
    for (Vertex v = 0; v < tree.size(); ++v) {
      ASSERT_EQ(psi[v], psi_moved[moved.map[v]]);
    }
    const auto d = DegreeVector(tree);
    const auto d_moved = DegreeVector(moved.tree);
    for (Vertex v = 0; v < tree.size(); ++v) ASSERT_EQ(d[v], d_moved[moved.map[v]]);
  }
}

TEST_P(RandomTreeProperty, EveryEstimatorReturnsAPermutation) {
  Rng rng(2000 + GetParam());
  for (int i = 0; i < 15; ++i) {
    const Model model = i % 2 ? Model::kPa : Model::kUrrt;
    const auto inst = ShuffleLabels(Generate(model, 1 + rng.Below(200), rng), rng);
    for (Estimator e : AllEstimators()) {
      const auto o = RunEstimator(e, inst, rng);
      ASSERT_TRUE(o.IsPermutation()) << EstimatorName(e);
      ASSERT_GE(RiskAlpha(o, inst.truth, 1.0), 0.0);
    }
  }
}

TEST_P(RandomTreeProperty, CentralityOrderingsAreRecursive) {
  Rng rng(3000 + GetParam());
  for (int i = 0; i < 40; ++i) {
    const auto tree = testing::RandomLabeledTree(1 + rng.Below(150), rng);
    const Vertex root = static_cast<Vertex>(rng.Below(tree.size()));
    ASSERT_TRUE(IsRecursiveOrdering(tree, JordanOrdering(tree, rng)));
    ASSERT_TRUE(IsRecursiveOrdering(tree, DescendantOrdering(tree, root, rng)));
    ASSERT_TRUE(IsRecursiveOrdering(tree, ReverseDmcOrdering(tree, rng)));
  }
}

TEST_P(RandomTreeProperty, DescendantCountsShrinkAlongRootPaths) {
  Rng rng(4000 + GetParam());
  for (int i = 0; i < 40; ++i) {
    const auto tree = testing::RandomLabeledTree(2 + rng.Below(150), rng);
    const Vertex root = static_cast<Vertex>(rng.Below(tree.size()));
    const auto de = Descendants(tree, root);
    const auto rooting = tree.Root(root);
    EXPECT_EQ(de[root], tree.size() - 1);
    for (Vertex v = 0; v < tree.size(); ++v) {
      if (v == root) continue;
      ASSERT_GT(de[rooting.parent[v]], de[v]);
    }
    // Sum of subtree sizes counts each vertex once per ancestor, plus itself.
    std::int64_t depth_sum = 0;
    for (Vertex v = 0; v < tree.size(); ++v) {
      for (Vertex x = v; x != kNoVertex; x = rooting.parent[x]) ++depth_sum;
    }
    const auto s = SubtreeSizes(tree, root);
    EXPECT_EQ(std::accumulate(s.begin(), s.end(), std::int64_t{0}), depth_sum);
  }
}

TEST_P(RandomTreeProperty, OffPathIdentityOnGeneratedTrees) {
  Rng rng(5000 + GetParam());
  for (int i = 0; i < 20; ++i) {
    const Model model = i % 2 ? Model::kPa : Model::kUrrt;
    const Vertex n = 1 + static_cast<Vertex>(rng.Below(400));
    const auto inst = ShuffleLabels(Generate(model, n, rng), rng);
    const Vertex root = inst.truth.root();
    const auto psi = JordanCentrality(inst.tree);
    const auto de = Descendants(inst.tree, root);
    std::vector<char> on_path(n, 0);
    for (Vertex v : Centroid(inst.tree, root).path_to_centroid) on_path[v] = 1;
    for (Vertex v = 0; v < n; ++v) {
      if (!on_path[v]) ASSERT_EQ(psi[v], n - 1 - de[v]);
      // The component toward the root always has n - 1 - de vertices.
      ASSERT_GE(psi[v], n - 1 - de[v]);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomTreeProperty, ::testing::Range(0, 5));

}  // namespace
}  // namespace arbor
