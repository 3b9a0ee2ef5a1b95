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

#ifndef ARBOR_RISK_H_
#define ARBOR_RISK_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arbor/estimators.h"
#include "arbor/ordering.h"
#include "arbor/tree.h"

namespace arbor {

// Realized weighted displacement sum_i |rank(i) - sigma(i)| / sigma(i)^alpha.
// Averaging over trees and estimator randomness gives R_alpha.
double RiskAlpha(const Ordering& estimate, const GroundTruth& truth,
                 double alpha);

// Minimax lower bound max(n^(2-alpha)/70, 1/2) inside the validity range of
// the bound (alpha > 0, n >= 200 for URRT, n >= 300 for PA); 1/2 elsewhere.
double LowerBound(std::int64_t n, double alpha, Model model);

// Leading constant of the Jordan upper bound in the uniform model,
// 2/(2-a) + 2e^2/(2-a)^2 + 2/(2-a)^3, for 1 <= a < 2.
double UrrtLeadingConstant(double alpha);

// Leading constant of the Jordan upper bound in the PA model, for
// 1 <= a < 3/2.
double PaLeadingConstant(double alpha);

// The remaining constants (K, C, c) of the upper bounds exist but are not
// given explicitly. They default to 1 and every output that uses them is
// marked as relying on an unspecified constant.
struct BoundConstants {
  double k = 1.0;
  double c_log = 1.0;
  double c_power = 1.0;
};

// alpha in [1,2): K(a) n^(2-a) + k sum_i i^-a + c_log log^4 n;
// alpha >= 2: c_log log^4 n. Throws for alpha < 1.
double UpperBoundUrrt(std::int64_t n, double alpha,
                      const BoundConstants& constants = {});

// alpha in [1,3/2): K(a) n^(2-a) + k sum_i i^-a + c_log log^2(n) sqrt(n);
// alpha >= 3/2: c_power n^(3/2). Throws for alpha < 1.
double UpperBoundPa(std::int64_t n, double alpha,
                    const BoundConstants& constants = {});

// Explicit bound on the descendant-ordering part alone in the uniform model:
// 18 n for alpha = 1 and n >= 60, K(a) n^(2-a) for 1 < a < 2. Returns NaN
// outside that range.
double DescendantBoundUrrt(std::int64_t n, double alpha);

struct RiskSample {
  Model model = Model::kUrrt;
  std::int64_t n = 0;
  double alpha = 1.0;
  Estimator estimator = Estimator::kJordan;
  std::int64_t replicate = 0;
  std::uint64_t seed = 0;
  double risk = 0.0;
};

struct RiskSummary {
  Model model = Model::kUrrt;
  std::int64_t n = 0;
  double alpha = 1.0;
  Estimator estimator = Estimator::kJordan;
  std::int64_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
};

// Linear-interpolation quantile of sorted data (the "type 7" rule).
double Quantile(std::span<const double> sorted, double p);

// Summarizes samples grouped by (model, n, alpha, estimator); output sorted by
// that key.
std::vector<RiskSummary> Summarize(std::span<const RiskSample> samples);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::int64_t> sizes;
};

// Ordinary least squares of log(risk) on log(n). Needs >= 2 distinct sizes
// and positive risks.
RateFit RateRegression(std::span<const std::pair<std::int64_t, double>> points);

}  // namespace arbor

#endif  // ARBOR_RISK_H_
