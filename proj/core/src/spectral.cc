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

#include "arbor/spectral.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace arbor {
namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Norm(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

void RemoveMean(std::vector<double>& x) {
  const double mean =
      std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  for (auto& v : x) v -= mean;
}

void Axpy(double a, std::span<const double> x, std::vector<double>& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

struct RayleighPair {
  double lambda;
  double residual;
};

RayleighPair Evaluate(const LabeledTree& tree, std::vector<double>& v) {
  RemoveMean(v);
  const double norm = Norm(v);
  for (auto& x : v) x /= norm;
  const auto lv = LaplacianApply(tree, v);
  const double lambda = Dot(v, lv);
  double r2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = lv[i] - lambda * v[i];
    r2 += d * d;
  }
  return {lambda, std::sqrt(r2)};
}

}  // namespace

ConvergenceError::ConvergenceError(std::int64_t iterations, double residual)
    : std::runtime_error("Fiedler solver did not converge after " +
                         std::to_string(iterations) +
                         " iterations (residual " + std::to_string(residual) +
                         ")"),
      iterations_(iterations),
      residual_(residual) {}

std::vector<double> LaplacianApply(const LabeledTree& tree,
                                   std::span<const double> x) {
  if (static_cast<Vertex>(x.size()) != tree.size()) {
    throw std::invalid_argument("LaplacianApply: length mismatch");
  }
  std::vector<double> y(x.size());
  for (Vertex u = 0; u < tree.size(); ++u) {
    double acc = tree.degree(u) * x[u];
    for (Vertex v : tree.neighbors(u)) acc -= x[v];
    y[u] = acc;
  }
  return y;
}

TreeLaplacianSolver::TreeLaplacianSolver(const LabeledTree& tree)
    : rooting_(tree.Root(0)) {}

std::vector<double> TreeLaplacianSolver::Solve(std::span<const double> b) const {
  std::vector<double> flow(b.begin(), b.end());
  RemoveMean(flow);
  const auto& order = rooting_.order;
  const auto& parent = rooting_.parent;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] != kNoVertex) flow[parent[*it]] += flow[*it];
  }
  // Summing (L x) over the subtree of v leaves x[v] - x[parent(v)].
  std::vector<double> x(b.size(), 0.0);
  for (Vertex v : order) {
    if (parent[v] != kNoVertex) x[v] = x[parent[v]] + flow[v];
  }
  RemoveMean(x);
  return x;
}

EigenResult FiedlerVector(const LabeledTree& tree, Rng& rng,
                          const SpectralOptions& options) {
  const Vertex n = tree.size();
  if (n < 2) throw std::invalid_argument("Fiedler vector needs n >= 2");
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  const std::int64_t max_iter =
      options.max_iter > 0 ? options.max_iter : 50 * static_cast<std::int64_t>(n);
  const int basis_cap =
      static_cast<int>(std::min<std::int64_t>(n - 1, std::max(2, options.max_basis)));

  const TreeLaplacianSolver solver(tree);

  std::vector<double> start(n);
  for (auto& x : start) x = rng.Uniform01() - 0.5;
  RemoveMean(start);
  if (Norm(start) == 0.0) {
    start.assign(n, 0.0);
    start[0] = 1.0;
    start[1] = -1.0;
  }

  EigenResult best;
  best.residual = std::numeric_limits<double>::infinity();
  std::int64_t iterations = 0;

  while (true) {
    std::vector<std::vector<double>> basis;
    std::vector<double> alphas, betas;
    {
      const double norm = Norm(start);
      for (auto& x : start) x /= norm;
      basis.push_back(start);
    }
    for (int k = 0; k < basis_cap; ++k) {
      std::vector<double> w = solver.Solve(basis[k]);
      ++iterations;
      const double alpha = Dot(basis[k], w);
      alphas.push_back(alpha);
      Axpy(-alpha, basis[k], w);
      if (k > 0) Axpy(-betas[k - 1], basis[k - 1], w);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) Axpy(-Dot(q, w), q, w);
        RemoveMean(w);
      }
      const double beta = Norm(w);

      const int m = k + 1;
      Eigen::VectorXd diag(m), sub(std::max(m - 1, 0));
      for (int i = 0; i < m; ++i) diag[i] = alphas[i];
      for (int i = 0; i + 1 < m; ++i) sub[i] = betas[i];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const double theta = tri.eigenvalues()[m - 1];
      const Eigen::VectorXd s = tri.eigenvectors().col(m - 1);
      const bool invariant = beta <= 1e-13 * std::abs(theta);
      const bool small_estimate = std::abs(beta * s[m - 1]) <= 1e-10 * theta;
      const bool last = (k + 1 == basis_cap) || iterations >= max_iter;

      if (invariant || small_estimate || last || (k % 4 == 3)) {
        std::vector<double> ritz(n, 0.0);
        for (int i = 0; i < m; ++i) Axpy(s[i], basis[i], ritz);
        const RayleighPair pair = Evaluate(tree, ritz);
        if (pair.residual < best.residual) {
          best.lambda2 = pair.lambda;
          best.vector = ritz;
          best.residual = pair.residual;
        }
        if (pair.residual <= options.tol) {
          best.iterations = iterations;
          return best;
        }
        if (iterations >= max_iter) {
          throw ConvergenceError(iterations, best.residual);
        }
        if (invariant || last) {
          start = std::move(ritz);
          break;
        }
      }
      if (iterations >= max_iter) throw ConvergenceError(iterations, best.residual);
      betas.push_back(beta);
      for (auto& x : w) x /= beta;
      basis.push_back(std::move(w));
    }
  }
}

std::vector<double> Orient(std::span<const double> vector,
                           std::span<const Vertex> degrees, Rng& rng) {
  if (vector.size() != degrees.size()) {
    throw std::invalid_argument("Orient: length mismatch");
  }
  const auto n = static_cast<std::int64_t>(vector.size());
  std::vector<std::int64_t> order(vector.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return vector[a] < vector[b];
  });
  // Twice the midrank keeps the criterion in exact integer arithmetic.
  std::int64_t criterion = 0;
  for (std::int64_t i = 0; i < n;) {
    std::int64_t j = i;
    while (j < n && vector[order[j]] == vector[order[i]]) ++j;
    const std::int64_t twice_midrank = (i + 1) + j;
    for (std::int64_t k = i; k < j; ++k) {
      criterion += (twice_midrank - (n + 1)) * degrees[order[k]];
    }
    i = j;
  }
  bool flip = criterion > 0;
  if (criterion == 0) flip = rng.Coin();
  std::vector<double> out(vector.begin(), vector.end());
  if (flip) {
    for (auto& x : out) x = -x;
  }
  return out;
}

}  // namespace arbor
