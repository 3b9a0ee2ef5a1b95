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

#include "arbor/tree.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace arbor {

std::string_view ModelName(Model model) {
  switch (model) {
    case Model::kUrrt:
      return "urrt";
    case Model::kPa:
      return "pa";
  }
  return "unknown";
}

Model ParseModel(std::string_view name) {
  if (name == "urrt") return Model::kUrrt;
  if (name == "pa") return Model::kPa;
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "' (expected urrt or pa)");
}

RecursiveTree::RecursiveTree(std::vector<Vertex> parents)
    : parents_(std::move(parents)) {
  if (parents_.empty()) throw InvalidTreeError("tree must have n >= 1");
  if (parents_[0] != kNoVertex) {
    throw InvalidTreeError("vertex 0 is the root and has no parent");
  }
  for (std::size_t t = 1; t < parents_.size(); ++t) {
    if (parents_[t] < 0 || static_cast<std::size_t>(parents_[t]) >= t) {
      throw InvalidTreeError("parent of arrival " + std::to_string(t + 1) +
                             " must be an earlier arrival");
    }
  }
}

std::vector<Edge> RecursiveTree::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(parents_.size() - 1);
  for (Vertex t = 1; t < size(); ++t) edges.emplace_back(parents_[t], t);
  return edges;
}

LabeledTree::LabeledTree(Vertex n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw InvalidTreeError("tree must have n >= 1");
  if (static_cast<std::size_t>(n - 1) != edges.size()) {
    throw InvalidTreeError("a tree on " + std::to_string(n) + " vertices has " +
                           std::to_string(n - 1) + " edges, got " +
                           std::to_string(edges.size()));
  }
  offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
      throw InvalidTreeError("edge endpoint out of range or self-loop");
    }
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(offsets_[n]);
  std::vector<Vertex> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  // n-1 edges plus connectivity implies a tree (and rules out multi-edges).
  const Rooting rooting = Root(0);
  if (static_cast<Vertex>(rooting.order.size()) != n) {
    throw InvalidTreeError("edge set is not connected");
  }
}

LabeledTree LabeledTree::FromRecursive(const RecursiveTree& tree,
                                       std::span<const Vertex> labels) {
  if (static_cast<Vertex>(labels.size()) != tree.size()) {
    throw std::invalid_argument("label vector length must equal tree size");
  }
  std::vector<Edge> edges;
  edges.reserve(tree.size() - 1);
  for (Vertex t = 1; t < tree.size(); ++t) {
    edges.emplace_back(labels[tree.parent(t)], labels[t]);
  }
  return LabeledTree(tree.size(), edges);
}

LabeledTree LabeledTree::FromRecursive(const RecursiveTree& tree) {
  std::vector<Vertex> identity(tree.size());
  std::iota(identity.begin(), identity.end(), 0);
  return FromRecursive(tree, identity);
}

bool LabeledTree::Adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<Edge> LabeledTree::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(n_ - 1);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

LabeledTree::Rooting LabeledTree::Root(Vertex root) const {
  CheckVertex(root);
  Rooting r;
  r.parent.assign(n_, kNoVertex);
  r.order.reserve(n_);
  std::vector<char> seen(n_, 0);
  r.order.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const Vertex u = r.order[head];
    for (Vertex v : neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        r.parent[v] = u;
        r.order.push_back(v);
      }
    }
  }
  return r;
}

void LabeledTree::CheckVertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for tree of size " +
                            std::to_string(n_));
  }
}

GroundTruth GroundTruth::Identity(Vertex n) {
  std::vector<Vertex> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return FromArrivalLabels(std::move(labels));
}

GroundTruth GroundTruth::FromArrivalLabels(std::vector<Vertex> labels_by_rank) {
  GroundTruth truth;
  const auto n = static_cast<Vertex>(labels_by_rank.size());
  truth.sigma.assign(n, 0);
  for (Vertex t = 0; t < n; ++t) {
    const Vertex label = labels_by_rank[t];
    if (label < 0 || label >= n || truth.sigma[label] != 0) {
      throw std::invalid_argument("arrival labels must be a permutation");
    }
    truth.sigma[label] = t + 1;
  }
  truth.tau = std::move(labels_by_rank);
  return truth;
}

RecursiveTree Unrelabel(const LabeledInstance& instance) {
  const LabeledTree& tree = instance.tree;
  const GroundTruth& truth = instance.truth;
  if (truth.size() != tree.size()) {
    throw std::invalid_argument("truth and tree sizes differ");
  }
  const Vertex n = tree.size();
  std::vector<Vertex> parents(n, kNoVertex);
  for (Vertex t = 1; t < n; ++t) {
    const Vertex label = truth.tau[t];
    Vertex earlier = kNoVertex;
    for (Vertex nb : tree.neighbors(label)) {
      if (truth.sigma[nb] - 1 < t) {
        if (earlier != kNoVertex) {
          throw InvalidTreeError("truth is not a recursive ordering");
        }
        earlier = truth.sigma[nb] - 1;
      }
    }
    if (earlier == kNoVertex) {
      throw InvalidTreeError("truth is not a recursive ordering");
    }
    parents[t] = earlier;
  }
  return RecursiveTree(std::move(parents));
}

}  // namespace arbor
