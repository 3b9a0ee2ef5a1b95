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

#ifndef ARBOR_TREE_H_
#define ARBOR_TREE_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arbor {

// Vertices are 0-based indices. Arrival ranks are 1-based values.
using Vertex = std::int32_t;
using Rank = std::int32_t;

inline constexpr Vertex kNoVertex = -1;

enum class Model { kUrrt, kPa };

std::string_view ModelName(Model model);
Model ParseModel(std::string_view name);

class InvalidTreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

// A tree in arrival coordinates: vertex t is the (t+1)-th arrival and
// parent(t) < t for every t >= 1. Vertex 0 is the root.
class RecursiveTree {
 public:
  // parents[0] must be kNoVertex; parents[t] in [0, t) otherwise.
  explicit RecursiveTree(std::vector<Vertex> parents);

  static RecursiveTree SingleVertex() { return RecursiveTree({kNoVertex}); }

  Vertex size() const { return static_cast<Vertex>(parents_.size()); }
  Vertex parent(Vertex t) const { return parents_[t]; }
  std::span<const Vertex> parents() const { return parents_; }
  std::vector<Edge> Edges() const;

  friend bool operator==(const RecursiveTree&, const RecursiveTree&) = default;

 private:
  std::vector<Vertex> parents_;
};

// Unrooted tree shape on labels 0..n-1 stored as compressed adjacency.
class LabeledTree {
 public:
  // Validates that the edges form a tree on n vertices.
  LabeledTree(Vertex n, std::span<const Edge> edges);

  // Relabels arrival rank t (0-based) as labels[t].
  static LabeledTree FromRecursive(const RecursiveTree& tree,
                                   std::span<const Vertex> labels);
  static LabeledTree FromRecursive(const RecursiveTree& tree);

  Vertex size() const { return n_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  Vertex degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool Adjacent(Vertex u, Vertex v) const;

  // Each edge once as (min, max), sorted.
  std::vector<Edge> Edges() const;

  // Parent of every vertex when rooted at `root` (kNoVertex for the root),
  // plus a breadth-first order starting at the root.
  struct Rooting {
    std::vector<Vertex> parent;
    std::vector<Vertex> order;
  };
  Rooting Root(Vertex root) const;

  void CheckVertex(Vertex v) const;

 private:
  Vertex n_;
  std::vector<Vertex> offsets_;
  std::vector<Vertex> adjacency_;
};

// Hidden arrival information for a labeled tree. sigma[label] is the 1-based
// arrival rank; tau[rank - 1] is the label with that rank.
struct GroundTruth {
  std::vector<Rank> sigma;
  std::vector<Vertex> tau;

  static GroundTruth Identity(Vertex n);
  static GroundTruth FromArrivalLabels(std::vector<Vertex> labels_by_rank);

  Vertex size() const { return static_cast<Vertex>(sigma.size()); }
  Vertex root() const { return tau.front(); }
};

// Observed tree plus the truth it was generated from.
struct LabeledInstance {
  LabeledTree tree;
  GroundTruth truth;
};

// Recovers the arrival-coordinate tree from an instance; throws if the
// truth is not a recursive ordering of the tree.
RecursiveTree Unrelabel(const LabeledInstance& instance);

}  // namespace arbor

#endif  // ARBOR_TREE_H_
