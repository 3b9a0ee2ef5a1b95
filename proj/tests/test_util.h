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

#ifndef ARBOR_TESTS_TEST_UTIL_H_
#define ARBOR_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "arbor/ordering.h"
#include "arbor/rng.h"
#include "arbor/tree.h"

namespace arbor::testing {

// Edges given with 1-based labels, as in the written examples.
inline LabeledTree Tree1(Vertex n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.emplace_back(u - 1, v - 1);
  return LabeledTree(n, e);
}

inline LabeledTree Path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return LabeledTree(n, e);
}

inline LabeledTree Star(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return LabeledTree(n, e);
}

// Every parent vector of size n (all recursive trees), (n-1)! of them.
inline void ForEachRecursiveTree(Vertex n,
                                 const std::function<void(const RecursiveTree&)>& f) {
  std::vector<Vertex> parents(n, kNoVertex);
  std::function<void(Vertex)> rec = [&](Vertex t) {
    if (t == n) {
      f(RecursiveTree(parents));
      return;
    }
    for (Vertex p = 0; p < t; ++p) {
      parents[t] = p;
      rec(t + 1);
    }
  };
  rec(1);
}

// Hand-rolled random tree with mixed shape: each vertex attaches to the
// previous vertex, to vertex 0, or to a uniform earlier vertex, then labels
// are permuted. Covers paths, stars, and bushy trees.
inline LabeledTree RandomLabeledTree(Vertex n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.Shuffle(std::span<Vertex>(perm));
  std::vector<Edge> edges;
  const std::uint64_t mode = rng.Below(4);
  for (Vertex t = 1; t < n; ++t) {
    Vertex parent = static_cast<Vertex>(rng.Below(t));
    if (mode == 1 && rng.Below(4) != 0) parent = t - 1;
    if (mode == 2 && rng.Below(4) != 0) parent = 0;
    edges.emplace_back(perm[parent], perm[t]);
  }
  return LabeledTree(n, edges);
}

// Largest component of T - u, by BFS over the remaining graph.
inline std::vector<Vertex> BruteJordan(const LabeledTree& tree) {
  const Vertex n = tree.size();
  std::vector<Vertex> psi(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex start : tree.neighbors(u)) {
      std::vector<char> seen(n, 0);
      seen[u] = 1;
      seen[start] = 1;
      std::vector<Vertex> stack{start};
      Vertex count = 0;
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        ++count;
        for (Vertex y : tree.neighbors(x)) {
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
      psi[u] = std::max(psi[u], count);
    }
  }
  return psi;
}

// de(u): number of w != u whose root path passes through u.
inline std::vector<Vertex> BruteDescendants(const LabeledTree& tree, Vertex root) {
  const auto rooting = tree.Root(root);
  std::vector<Vertex> de(tree.size(), 0);
  for (Vertex w = 0; w < tree.size(); ++w) {
    for (Vertex x = rooting.parent[w]; x != kNoVertex; x = rooting.parent[x]) {
      ++de[x];
    }
  }
  return de;
}

// Mean of f over every ordering consistent with the scores (strict across
// distinct values, all permutations within ties), by brute force.
inline double AverageOverConsistentOrderings(
    const std::vector<double>& scores, bool ascending,
    const std::function<double(const std::vector<Rank>&)>& f) {
  const auto n = static_cast<Vertex>(scores.size());
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  double total = 0.0;
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (Vertex i = 0; i + 1 < n && ok; ++i) {
      const double a = scores[seq[i]], b = scores[seq[i + 1]];
      ok = ascending ? a <= b : a >= b;
    }
    if (!ok) continue;
    std::vector<Rank> rank(n);
    for (Vertex i = 0; i < n; ++i) rank[seq[i]] = i + 1;
    total += f(rank);
    ++count;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return total / static_cast<double>(count);
}

// Three-standard-error binomial band around p for m trials.
inline bool WithinThreeSigma(std::int64_t hits, std::int64_t m, double p) {
  const double se = std::sqrt(p * (1 - p) / static_cast<double>(m));
  return std::abs(static_cast<double>(hits) / m - p) <= 3 * se;
}

// Two-sample Kolmogorov-Smirnov statistic and asymptotic p-value.
inline double KsStatistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                             static_cast<double>(j) / b.size()));
  }
  return d;
}

inline double KsPValue(double d, std::size_t m, std::size_t n) {
  const double en = std::sqrt(static_cast<double>(m) * n / (m + n));
  const double lambda = (en + 0.12 + 0.11 / en) * d;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    sum += 2 * std::pow(-1.0, k - 1) * std::exp(-2.0 * k * k * lambda * lambda);
  }
  return std::clamp(sum, 0.0, 1.0);
}

}  // namespace arbor::testing

#endif  // ARBOR_TESTS_TEST_UTIL_H_
