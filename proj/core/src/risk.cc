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

#include "arbor/risk.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <tuple>

namespace arbor {
namespace {

void CheckAlphaForUpperBound(double alpha) {
  if (!(alpha >= 1.0)) {
    throw std::invalid_argument("upper bounds are stated for alpha >= 1");
  }
}

double HarmonicPower(std::int64_t n, double alpha) {
  double s = 0.0;
  for (std::int64_t i = n; i >= 1; --i) s += std::pow(static_cast<double>(i), -alpha);
  return s;
}

}  // namespace

double RiskAlpha(const Ordering& estimate, const GroundTruth& truth,
                 double alpha) {
  if (estimate.size() != truth.size()) {
    throw std::invalid_argument("estimate and truth cover different label sets");
  }
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
  double risk = 0.0;
  for (Vertex v = 0; v < estimate.size(); ++v) {
    const Rank s = truth.sigma[v];
    const Rank r = estimate.rank[v];
    if (r == s) continue;
    risk += std::abs(r - s) / std::pow(static_cast<double>(s), alpha);
  }
  return risk;
}

double LowerBound(std::int64_t n, double alpha, Model model) {
  const std::int64_t min_n = model == Model::kUrrt ? 200 : 300;
  if (!(alpha > 0.0) || n < min_n) return 0.5;
  return std::max(std::pow(static_cast<double>(n), 2.0 - alpha) / 70.0, 0.5);
}

double UrrtLeadingConstant(double alpha) {
  const double g = 2.0 - alpha;
  constexpr double e2 = std::numbers::e * std::numbers::e;
  return 2.0 / g + 2.0 * e2 / (g * g) + 2.0 / (g * g * g);
}

double PaLeadingConstant(double alpha) {
  constexpr double sqrt2 = std::numbers::sqrt2;
  const double g = 2.0 - alpha;
  const double h = 1.5 - alpha;
  return 2.0 / g + (8.0 * sqrt2 + 10.0 / sqrt2) / (h * g) +
         20.0 / (sqrt2 * g * h * h);
}

double UpperBoundUrrt(std::int64_t n, double alpha,
                      const BoundConstants& constants) {
  CheckAlphaForUpperBound(alpha);
  const double log_n = std::log(static_cast<double>(n));
  const double tail = constants.c_log * std::pow(log_n, 4);
  if (alpha >= 2.0) return tail;
  return UrrtLeadingConstant(alpha) * std::pow(static_cast<double>(n), 2.0 - alpha) +
         constants.k * HarmonicPower(n, alpha) + tail;
}

double UpperBoundPa(std::int64_t n, double alpha,
                    const BoundConstants& constants) {
  CheckAlphaForUpperBound(alpha);
  const auto nd = static_cast<double>(n);
  if (alpha >= 1.5) return constants.c_power * std::pow(nd, 1.5);
  const double log_n = std::log(nd);
  return PaLeadingConstant(alpha) * std::pow(nd, 2.0 - alpha) +
         constants.k * HarmonicPower(n, alpha) +
         constants.c_log * log_n * log_n * std::sqrt(nd);
}

double DescendantBoundUrrt(std::int64_t n, double alpha) {
  if (alpha == 1.0 && n >= 60) return 18.0 * static_cast<double>(n);
  if (alpha > 1.0 && alpha < 2.0) {
    return UrrtLeadingConstant(alpha) *
           std::pow(static_cast<double>(n), 2.0 - alpha);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double Quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("Quantile of empty data");
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::vector<RiskSummary> Summarize(std::span<const RiskSample> samples) {
  using Key = std::tuple<int, std::int64_t, double, int>;
  std::map<Key, std::vector<const RiskSample*>> groups;
  for (const auto& s : samples) {
    groups[{static_cast<int>(s.model), s.n, s.alpha,
            static_cast<int>(s.estimator)}]
        .push_back(&s);
  }
  std::vector<RiskSummary> out;
  out.reserve(groups.size());
  for (auto& [key, members] : groups) {
    // Canonical order keeps the floating-point mean independent of the
    // order samples were collected in.
    std::sort(members.begin(), members.end(),
              [](const RiskSample* a, const RiskSample* b) {
                return a->replicate < b->replicate;
              });
    std::vector<double> risks;
    risks.reserve(members.size());
    double sum = 0.0;
    for (const RiskSample* s : members) {
      risks.push_back(s->risk);
      sum += s->risk;
    }
    std::sort(risks.begin(), risks.end());
    RiskSummary r;
    r.model = members.front()->model;
    r.n = members.front()->n;
    r.alpha = members.front()->alpha;
    r.estimator = members.front()->estimator;
    r.count = static_cast<std::int64_t>(risks.size());
    r.mean = sum / static_cast<double>(risks.size());
    r.median = Quantile(risks, 0.5);
    r.q1 = Quantile(risks, 0.25);
    r.q3 = Quantile(risks, 0.75);
    out.push_back(r);
  }
  return out;
}

RateFit RateRegression(std::span<const std::pair<std::int64_t, double>> points) {
  std::set<std::int64_t> distinct;
  for (const auto& [n, risk] : points) {
    if (n < 1) throw std::invalid_argument("sizes must be positive");
    if (!(risk > 0.0)) {
      throw std::invalid_argument("log-log regression needs positive risks");
    }
    distinct.insert(n);
  }
  if (distinct.size() < 2) {
    throw std::invalid_argument("rate regression needs >= 2 distinct sizes");
  }
  const auto m = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  for (const auto& [n, risk] : points) {
    sx += std::log(static_cast<double>(n));
    sy += std::log(risk);
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [n, risk] : points) {
    const double dx = std::log(static_cast<double>(n)) - mx;
    const double dy = std::log(risk) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.sizes.assign(distinct.begin(), distinct.end());
  return fit;
}

}  // namespace arbor
