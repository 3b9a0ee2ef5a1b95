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

#ifndef ARBOR_SELF_CHECK_H_
#define ARBOR_SELF_CHECK_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arbor/estimators.h"
#include "arbor/tree.h"

namespace arbor {

struct MeanEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::int64_t count = 0;
};

// Monte Carlo estimate of R_alpha for each alpha in `alphas`: generate,
// relabel, estimate, score. The same trees and orderings serve every alpha.
std::vector<MeanEstimate> MonteCarloRisk(Model model, std::int64_t n,
                                         Estimator estimator,
                                         std::span<const double> alphas,
                                         std::int64_t replicates,
                                         std::uint64_t seed);

struct CheckResult {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SelfCheckOptions {
  std::int64_t mc_replicates = 20000;
  std::uint64_t seed = 20240601;
};

// Exact-oracle consistency checks: enumeration totals, pmf normalization,
// pmf against enumeration, n/j means, shape exchangeability, closed-form
// anchors, and Monte Carlo risks against exact risks (z <= 3).
std::vector<CheckResult> RunOracleSelfCheck(const SelfCheckOptions& options = {});

std::string SelfCheckJson(const std::vector<CheckResult>& checks);

}  // namespace arbor

#endif  // ARBOR_SELF_CHECK_H_
