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

#include "arbor/centrality.h"

#include <algorithm>

namespace arbor {
namespace {

std::vector<Vertex> SizesFromRooting(const LabeledTree::Rooting& rooting) {
  std::vector<Vertex> sizes(rooting.order.size(), 1);
  for (auto it = rooting.order.rbegin(); it != rooting.order.rend(); ++it) {
    const Vertex p = rooting.parent[*it];
    if (p != kNoVertex) sizes[p] += sizes[*it];
  }
  return sizes;
}

}  // namespace

std::vector<Vertex> SubtreeSizes(const LabeledTree& tree, Vertex root) {
  return SizesFromRooting(tree.Root(root));
}

std::vector<Vertex> JordanCentrality(const LabeledTree& tree) {
  const Vertex n = tree.size();
  const auto rooting = tree.Root(0);
  const auto sizes = SizesFromRooting(rooting);
  std::vector<Vertex> psi(n, 0);
  for (Vertex u = 0; u < n; ++u) psi[u] = n - sizes[u];
  for (Vertex w = 0; w < n; ++w) {
    const Vertex p = rooting.parent[w];
    if (p != kNoVertex) psi[p] = std::max(psi[p], sizes[w]);
  }
  return psi;
}

CentroidReport Centroid(const LabeledTree& tree, Vertex root) {
  tree.CheckVertex(root);
  const auto psi = JordanCentrality(tree);
  const auto rooting = tree.Root(root);
  CentroidReport report;
  report.psi_min = *std::min_element(psi.begin(), psi.end());
  // BFS order lists the centroid nearest the root first.
  for (Vertex v : rooting.order) {
    if (psi[v] == report.psi_min) report.centroids.push_back(v);
  }
  for (Vertex v = report.centroids.front(); v != kNoVertex;
       v = rooting.parent[v]) {
    report.path_to_centroid.push_back(v);
  }
  std::reverse(report.path_to_centroid.begin(), report.path_to_centroid.end());
  return report;
}

std::vector<Vertex> Descendants(const LabeledTree& tree, Vertex root) {
  auto de = SubtreeSizes(tree, root);
  for (auto& d : de) --d;
  return de;
}

std::vector<Vertex> DescendantCentrality(const LabeledTree& tree, Vertex root) {
  auto score = Descendants(tree, root);
  const Vertex n = tree.size();
  for (auto& s : score) s = n + 1 - s;
  return score;
}

std::vector<Vertex> DegreeVector(const LabeledTree& tree) {
  std::vector<Vertex> degrees(tree.size());
  for (Vertex v = 0; v < tree.size(); ++v) degrees[v] = tree.degree(v);
  return degrees;
}

}  // namespace arbor
