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

#ifndef ARBOR_ORACLE_H_
#define ARBOR_ORACLE_H_

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "arbor/estimators.h"
#include "arbor/tree.h"

namespace arbor {

// Probability mass function on 0..size()-1.
struct Pmf {
  std::vector<double> probabilities;

  std::size_t size() const { return probabilities.size(); }
  double operator[](std::size_t k) const { return probabilities[k]; }
  double Total() const;
  double Mean() const;
};

// Law of the number of descendants de(j) of the j-th arrival (2 <= j <= n)
// in a uniform random recursive tree:
//   P{de(j) = k} = (j-1) (n-k-2)! (n-j)! / ((n-j-k)! (n-1)!),  k = 0..n-j.
// Evaluated in log space.
Pmf UrrtDescendantPmf(std::int64_t n, std::int64_t j);

// Same for the PA tree. The subtree of i is a Polya urn started from one
// half-edge against 2i-3, both colors reinforced by two:
//   P{de(i) = k} = C(n-i, k) [1*3*...*(2k-1)] [(2i-3)(2i-1)...(2n-2k-5)]
//                  / [(2i-2)(2i)...(2n-4)].
Pmf PaDescendantPmf(std::int64_t n, std::int64_t i);

Pmf DescendantPmf(Model model, std::int64_t n, std::int64_t j);

using Probability = boost::rational<std::int64_t>;

struct WeightedHistory {
  RecursiveTree tree;
  Probability probability;
};

inline constexpr std::int64_t kMaxEnumerationSize = 9;

// Every attachment sequence of size n with its exact probability.
std::vector<WeightedHistory> EnumerateHistories(std::int64_t n, Model model);

// Marginal law of de(j) read off the full enumeration.
std::vector<Probability> EnumeratedDescendantPmf(std::int64_t n,
                                                 std::int64_t j, Model model);

// Exact E[sum_i |rank(i) - sigma(i)| / sigma(i)^alpha] for tie-block
// estimators (jordan, descendant, degree, random). Within a tie block each
// member is uniform over the block's rank interval, so its contribution is a
// finite average. Throws std::invalid_argument for spectral and reverse_dmc.
double ExactRisk(Estimator estimator, std::int64_t n, double alpha,
                 Model model);

// Expected risk of one fixed tree in arrival coordinates.
double ExactRiskOfTree(Estimator estimator, const RecursiveTree& tree,
                       double alpha);

// Canonical string of the unlabeled, unrooted shape (minimum AHU encoding
// over all roots). Intended for small trees.
std::string CanonicalShape(const LabeledTree& tree);

}  // namespace arbor

#endif  // ARBOR_ORACLE_H_
