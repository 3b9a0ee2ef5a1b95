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

#ifndef ARBOR_ESTIMATORS_H_
#define ARBOR_ESTIMATORS_H_

#include <string_view>
#include <utility>
#include <vector>

#include "arbor/ordering.h"
#include "arbor/rng.h"
#include "arbor/spectral.h"
#include "arbor/tree.h"

namespace arbor {

enum class Estimator {
  kJordan,
  kDescendant,
  kDegree,
  kSpectral,
  kReverseDmc,
  kRandom,
};

std::string_view EstimatorName(Estimator estimator);
Estimator ParseEstimator(std::string_view name);
const std::vector<Estimator>& AllEstimators();

// The descendant ordering is the only estimator that consumes hidden
// information (the true root).
inline bool UsesTrueRoot(Estimator e) { return e == Estimator::kDescendant; }

// Increasing Jordan centrality, ties at random.
Ordering JordanOrdering(const LabeledTree& tree, Rng& rng);

// Decreasing descendant count from the supplied root, ties at random.
Ordering DescendantOrdering(const LabeledTree& tree, Vertex root, Rng& rng);

struct CoupledOrderings {
  Ordering jordan;
  Ordering descendant;
};

// Draws a Jordan ordering, then a descendant ordering whose tie-breaks keep
// the Jordan relative order among vertices off the root-to-centroid path.
// On-path members of a tie block land in uniformly random slots. Each side
// has the same marginal law as its uncoupled counterpart.
CoupledOrderings CoupledJordanDescendant(const LabeledTree& tree, Vertex root,
                                         Rng& rng);

// Decreasing degree, ties at random. Not necessarily recursive.
Ordering DegreeOrdering(const LabeledTree& tree, Rng& rng);

Ordering RandomOrdering(Vertex n, Rng& rng);

// Leaf peeling: repeatedly removes the leaf most likely to be the latest PA
// arrival, i.e. the leaf maximizing deg(neighbor) - 1, and gives it the
// largest free rank. Ties (and the final pair) are broken uniformly.
Ordering ReverseDmcOrdering(const LabeledTree& tree, Rng& rng);

// Ascending entries of the degree-oriented Fiedler vector, ties at random.
Ordering SpectralOrdering(const LabeledTree& tree, Rng& rng,
                          const SpectralOptions& options = {});

}  // namespace arbor

#endif  // ARBOR_ESTIMATORS_H_
