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

#include "arbor/self_check.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "arbor/experiment.h"
#include "arbor/oracle.h"
#include "arbor/risk.h"
#include "arbor/treegen.h"
#include "json.hpp"

namespace arbor {
namespace {

CheckResult Check(std::string name, double expected, double observed,
                  double tolerance) {
  const bool pass = std::abs(observed - expected) <= tolerance;
  return {std::move(name), expected, observed, tolerance, pass};
}

}  // namespace

std::vector<MeanEstimate> MonteCarloRisk(Model model, std::int64_t n,
                                         Estimator estimator,
                                         std::span<const double> alphas,
                                         std::int64_t replicates,
                                         std::uint64_t seed) {
  std::vector<double> sum(alphas.size(), 0.0), sum_sq(alphas.size(), 0.0);
  for (std::int64_t r = 0; r < replicates; ++r) {
    const std::uint64_t tree_seed = TreeSeed(seed, model, n, r);
    Rng rng(tree_seed);
    const auto tree = Generate(model, static_cast<Vertex>(n), rng);
    const auto instance = ShuffleLabels(tree, rng);
    Rng estimator_rng(EstimatorSeed(tree_seed, estimator));
    const Ordering o = RunEstimator(estimator, instance, estimator_rng);
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      const double risk = RiskAlpha(o, instance.truth, alphas[a]);
      sum[a] += risk;
      sum_sq[a] += risk * risk;
    }
  }
  std::vector<MeanEstimate> out;
  const auto m = static_cast<double>(replicates);
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    MeanEstimate e;
    e.count = replicates;
    e.mean = sum[a] / m;
    const double var =
        replicates > 1 ? std::max(0.0, (sum_sq[a] - m * e.mean * e.mean) / (m - 1))
                       : 0.0;
    e.standard_error = std::sqrt(var / m);
    out.push_back(e);
  }
  return out;
}

std::vector<CheckResult> RunOracleSelfCheck(const SelfCheckOptions& options) {
  std::vector<CheckResult> checks;
  const Model models[] = {Model::kUrrt, Model::kPa};

  for (Model model : models) {
    const std::string tag(ModelName(model));
    for (std::int64_t n = 1; n <= kMaxEnumerationSize; ++n) {
      Probability total(0);
      for (const auto& h : EnumerateHistories(n, model)) total += h.probability;
      CheckResult c{"enumeration_total_" + tag + "_n" + std::to_string(n), 1.0,
                    boost::rational_cast<double>(total), 0.0,
                    total == Probability(1)};
      checks.push_back(c);
    }

    double max_dev = 0.0;
    for (std::int64_t n : {2, 3, 5, 8, 10, 100, 1000, 10000}) {
      for (std::int64_t j : {std::int64_t{2}, std::int64_t{3}, n / 2, n - 1, n}) {
        if (j < 2 || j > n) continue;
        max_dev = std::max(max_dev, std::abs(DescendantPmf(model, n, j).Total() - 1.0));
      }
    }
    checks.push_back(Check("pmf_normalization_" + tag, 0.0, max_dev, 1e-12));

    double max_diff = 0.0;
    for (std::int64_t n = 2; n <= 8; ++n) {
      for (std::int64_t j = 2; j <= n; ++j) {
        const auto exact = EnumeratedDescendantPmf(n, j, model);
        const auto pmf = DescendantPmf(model, n, j);
        for (std::size_t k = 0; k < exact.size(); ++k) {
          max_diff = std::max(
              max_diff, std::abs(pmf[k] - boost::rational_cast<double>(exact[k])));
        }
      }
    }
    checks.push_back(Check("pmf_vs_enumeration_" + tag, 0.0, max_diff, 1e-12));

    bool exchangeable = true;
    for (std::int64_t n = 4; n <= 7; ++n) {
      std::map<std::string, Probability> by_shape;
      for (const auto& h : EnumerateHistories(n, model)) {
        const auto shape = CanonicalShape(LabeledTree::FromRecursive(h.tree));
        auto [it, inserted] = by_shape.emplace(shape, h.probability);
        if (!inserted && it->second != h.probability) exchangeable = false;
      }
    }
    checks.push_back({"shape_exchangeability_" + tag, 1.0,
                      exchangeable ? 1.0 : 0.0, 0.0, exchangeable});
  }

  double max_mean_dev = 0.0;
  for (std::int64_t n : {10, 100, 1000}) {
    for (std::int64_t j : {2, 3, 10}) {
      const double mean = UrrtDescendantPmf(n, j).Mean() + 1.0;
      max_mean_dev = std::max(max_mean_dev,
                              std::abs(mean - static_cast<double>(n) / j));
    }
  }
  checks.push_back(Check("urrt_mean_descendants_n_over_j", 0.0, max_mean_dev, 1e-9));

  checks.push_back(Check("exact_risk_urrt3_descendant", 5.0 / 24.0,
                         ExactRisk(Estimator::kDescendant, 3, 1.0, Model::kUrrt),
                         1e-12));
  checks.push_back(Check("exact_risk_urrt3_jordan", 31.0 / 24.0,
                         ExactRisk(Estimator::kJordan, 3, 1.0, Model::kUrrt),
                         1e-12));
  checks.push_back(Check("exact_risk_n3_random", 5.0 / 3.0,
                         ExactRisk(Estimator::kRandom, 3, 1.0, Model::kUrrt),
                         1e-12));

  const double alphas[] = {1.0};
  for (Model model : models) {
    for (std::int64_t n : {4, 5}) {
      for (Estimator e : {Estimator::kJordan, Estimator::kDescendant,
                          Estimator::kDegree, Estimator::kRandom}) {
        const double exact = ExactRisk(e, n, 1.0, model);
        const auto mc = MonteCarloRisk(model, n, e, alphas,
                                       options.mc_replicates, options.seed)[0];
        checks.push_back(Check("mc_vs_exact_" + std::string(ModelName(model)) +
                                   "_" + std::string(EstimatorName(e)) + "_n" +
                                   std::to_string(n),
                               exact, mc.mean, 3.0 * mc.standard_error));
      }
    }
  }
  return checks;
}

std::string SelfCheckJson(const std::vector<CheckResult>& checks) {
  nlohmann::json report;
  bool all = true;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name},
                    {"expected", c.expected},
                    {"observed", c.observed},
                    {"tolerance", c.tolerance},
                    {"pass", c.pass}});
    all = all && c.pass;
  }
  report["checks"] = std::move(list);
  report["pass"] = all;
  return report.dump(2);
}

}  // namespace arbor
