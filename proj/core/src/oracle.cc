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

#include "arbor/oracle.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "arbor/centrality.h"
#include "arbor/ordering.h"

namespace arbor {
namespace {

void CheckRank(std::int64_t n, std::int64_t j) {
  if (j < 2 || j > n) {
    throw std::out_of_range("arrival rank must satisfy 2 <= j <= n");
  }
}

void CheckEnumerationSize(std::int64_t n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw std::invalid_argument("history enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationSize));
  }
}

std::string Ahu(const LabeledTree& tree, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : tree.neighbors(v)) {
    if (w != parent) children.push_back(Ahu(tree, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

ScoreVector ScoresFor(Estimator estimator, const LabeledTree& tree) {
  switch (estimator) {
    case Estimator::kJordan:
      return ScoreVector::From(JordanCentrality(tree), Direction::kAscending);
    case Estimator::kDescendant:
      return ScoreVector::From(DescendantCentrality(tree, 0),
                               Direction::kAscending);
    case Estimator::kDegree:
      return ScoreVector::From(DegreeVector(tree), Direction::kDescending);
    case Estimator::kRandom:
      return {std::vector<double>(tree.size(), 0.0), Direction::kAscending};
    case Estimator::kSpectral:
    case Estimator::kReverseDmc:
      break;
  }
  throw std::invalid_argument(
      "exact risk is only available for tie-block estimators, not " +
      std::string(EstimatorName(estimator)));
}

}  // namespace

double Pmf::Total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

double Pmf::Mean() const {
  double m = 0.0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    m += static_cast<double>(k) * probabilities[k];
  }
  return m;
}

Pmf UrrtDescendantPmf(std::int64_t n, std::int64_t j) {
  CheckRank(n, j);
  Pmf pmf;
  pmf.probabilities.resize(n - j + 1);
  // p(0) = (j-1)/(n-1); p(k+1)/p(k) = (n-j-k)/(n-k-2).
  double p = static_cast<double>(j - 1) / static_cast<double>(n - 1);
  for (std::int64_t k = 0; k <= n - j; ++k) {
    pmf.probabilities[k] = p;
    if (k < n - j) {
      p *= static_cast<double>(n - j - k) / static_cast<double>(n - k - 2);
    }
  }
  return pmf;
}

Pmf PaDescendantPmf(std::int64_t n, std::int64_t i) {
  CheckRank(n, i);
  Pmf pmf;
  pmf.probabilities.resize(n - i + 1);
  // p(0) = prod_{m=i-1}^{n-2} (2m-1)/(2m);
  // p(k+1)/p(k) = (n-i-k)(2k+1) / ((k+1)(2n-2k-5)).
  double p = 1.0;
  for (std::int64_t m = i - 1; m <= n - 2; ++m) {
    p *= static_cast<double>(2 * m - 1) / static_cast<double>(2 * m);
  }
  for (std::int64_t k = 0; k <= n - i; ++k) {
    pmf.probabilities[k] = p;
    if (k < n - i) {
      p *= static_cast<double>((n - i - k) * (2 * k + 1)) /
           static_cast<double>((k + 1) * (2 * n - 2 * k - 5));
    }
  }
  return pmf;
}

Pmf DescendantPmf(Model model, std::int64_t n, std::int64_t j) {
  return model == Model::kUrrt ? UrrtDescendantPmf(n, j)
                               : PaDescendantPmf(n, j);
}

std::vector<WeightedHistory> EnumerateHistories(std::int64_t n, Model model) {
  CheckEnumerationSize(n);
  std::vector<WeightedHistory> out;
  std::vector<Vertex> parents(n, kNoVertex);
  std::vector<std::int64_t> degree(n, 0);

  std::function<void(Vertex, Probability)> extend = [&](Vertex t,
                                                        Probability p) {
    if (t == n) {
      out.push_back({RecursiveTree(parents), p});
      return;
    }
    for (Vertex parent = 0; parent < t; ++parent) {
      Probability step;
      if (model == Model::kUrrt) {
        step = Probability(1, t);
      } else if (t == 1) {
        step = Probability(1);
      } else {
        step = Probability(degree[parent], 2 * (t - 1));
      }
      if (step.numerator() == 0) continue;
      parents[t] = parent;
      ++degree[parent];
      ++degree[t];
      extend(t + 1, p * step);
      --degree[parent];
      --degree[t];
    }
    parents[t] = kNoVertex;
  };
  extend(1, Probability(1));
  return out;
}

std::vector<Probability> EnumeratedDescendantPmf(std::int64_t n,
                                                 std::int64_t j, Model model) {
  CheckRank(n, j);
  std::vector<Probability> pmf(n - j + 1, Probability(0));
  for (const auto& h : EnumerateHistories(n, model)) {
    const auto de = Descendants(LabeledTree::FromRecursive(h.tree), 0);
    pmf[de[j - 1]] += h.probability;
  }
  return pmf;
}

double ExactRiskOfTree(Estimator estimator, const RecursiveTree& tree,
                       double alpha) {
  const LabeledTree shape = LabeledTree::FromRecursive(tree);
  double risk = 0.0;
  for (const auto& block : TieBlocks(ScoresFor(estimator, shape))) {
    const auto k = static_cast<Rank>(block.members.size());
    for (Vertex v : block.members) {
      const Rank truth = v + 1;
      double total = 0.0;
      for (Rank r = block.first_rank; r < block.first_rank + k; ++r) {
        total += std::abs(r - truth);
      }
      risk += total / k / std::pow(static_cast<double>(truth), alpha);
    }
  }
  return risk;
}

double ExactRisk(Estimator estimator, std::int64_t n, double alpha,
                 Model model) {
  CheckEnumerationSize(n);
  double risk = 0.0;
  for (const auto& h : EnumerateHistories(n, model)) {
    risk += boost::rational_cast<double>(h.probability) *
            ExactRiskOfTree(estimator, h.tree, alpha);
  }
  return risk;
}

std::string CanonicalShape(const LabeledTree& tree) {
  std::string best;
  for (Vertex root = 0; root < tree.size(); ++root) {
    std::string code = Ahu(tree, root, kNoVertex);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace arbor
