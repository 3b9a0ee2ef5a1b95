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

#ifndef ARBOR_SPECTRAL_H_
#define ARBOR_SPECTRAL_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arbor/rng.h"
#include "arbor/tree.h"

namespace arbor {

struct SpectralOptions {
  // Convergence when ||L v - lambda v||_2 <= tol for the unit vector v.
  double tol = 1e-8;
  // Operator applications allowed; 0 means 50 n.
  std::int64_t max_iter = 0;
  // Krylov basis size before an explicit restart.
  int max_basis = 64;
};

struct EigenResult {
  double lambda2 = 0.0;
  std::vector<double> vector;
  double residual = 0.0;
  std::int64_t iterations = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::int64_t iterations, double residual);

  std::int64_t iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  std::int64_t iterations_;
  double residual_;
};

// y = L x with L = D - A, in O(n).
std::vector<double> LaplacianApply(const LabeledTree& tree,
                                   std::span<const double> x);

// Solves L x = b on the complement of the all-ones vector in O(n). A tree
// Laplacian factors without fill-in, so x is recovered from subtree sums of b
// along a rooting. b is projected onto that complement first.
class TreeLaplacianSolver {
 public:
  explicit TreeLaplacianSolver(const LabeledTree& tree);
  std::vector<double> Solve(std::span<const double> b) const;

 private:
  LabeledTree::Rooting rooting_;
};

// Fiedler pair of the tree Laplacian. Runs Lanczos with full
// reorthogonalization on the pseudo-inverse restricted to the complement of
// the all-ones vector, so the wanted pair is the dominant one. The start
// vector is drawn from `rng`. Throws ConvergenceError when max_iter is hit.
EigenResult FiedlerVector(const LabeledTree& tree, Rng& rng,
                          const SpectralOptions& options = {});

// Returns vector or -vector: the sign for which ascending entries put
// high-degree vertices first, i.e. minimizing sum_u midrank(u) * deg(u).
// An exact tie is broken with a fair coin.
std::vector<double> Orient(std::span<const double> vector,
                           std::span<const Vertex> degrees, Rng& rng);

}  // namespace arbor

#endif  // ARBOR_SPECTRAL_H_
