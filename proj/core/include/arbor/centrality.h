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

#ifndef ARBOR_CENTRALITY_H_
#define ARBOR_CENTRALITY_H_

#include <vector>

#include "arbor/tree.h"

namespace arbor {

// sizes[u] = |(T, root)_u|, the number of vertices w whose path to `root`
// passes through u. sizes[root] = n.
std::vector<Vertex> SubtreeSizes(const LabeledTree& tree, Vertex root);

// Jordan centrality: psi[u] is the size of the largest component left after
// deleting u. Computed in one rooted pass. psi = {0} for a single vertex.
std::vector<Vertex> JordanCentrality(const LabeledTree& tree);

struct CentroidReport {
  // One or two adjacent minimizers of psi, the one nearest `root` first.
  std::vector<Vertex> centroids;
  Vertex psi_min = 0;
  // Vertices on the path from `root` to centroids.front(), both inclusive.
  std::vector<Vertex> path_to_centroid;
};

CentroidReport Centroid(const LabeledTree& tree, Vertex root);

// de[u] = |(T, root)_u| - 1.
std::vector<Vertex> Descendants(const LabeledTree& tree, Vertex root);

// n + 1 - de[u]; ascending order of this score is "most descendants first".
std::vector<Vertex> DescendantCentrality(const LabeledTree& tree, Vertex root);

std::vector<Vertex> DegreeVector(const LabeledTree& tree);

}  // namespace arbor

#endif  // ARBOR_CENTRALITY_H_
