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

#ifndef ARBOR_EXPERIMENT_H_
#define ARBOR_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/estimators.h"
#include "arbor/risk.h"
#include "arbor/spectral.h"
#include "arbor/tree.h"

namespace arbor {

inline constexpr std::string_view kVersion = "0.1.0";

struct ExperimentConfig {
  Model model = Model::kUrrt;
  std::vector<std::int64_t> sizes = {500, 1000, 2000, 4000, 8000};
  std::vector<double> alphas = {1.0};
  std::vector<Estimator> estimators = {Estimator::kDescendant};
  std::int64_t replicates = 10;
  std::uint64_t master_seed = 1;
  std::string output_dir = "arbor-out";
  bool overlay_bounds = false;
  bool svg = false;
  // 0 means: ARBOR_THREADS if set, else the hardware concurrency.
  int threads = 0;
  // Rate fits use the median risk per size unless this is set.
  bool rates_use_mean = false;
  SpectralOptions spectral;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Flat "key = value" lines; '#' starts a comment. Keys: model, sizes,
// alphas, estimators, replicates, seed, out, threads, bounds, svg,
// rates_use_mean, spectral_tol, spectral_max_iter. Lists are comma
// separated; sizes also accept "a..b" for a doubling range.
void ApplyConfigValue(ExperimentConfig& config, std::string_view key,
                      std::string_view value);
void ApplyConfigText(ExperimentConfig& config, std::istream& text);
void LoadConfigFile(ExperimentConfig& config, const std::string& path);

// Throws ConfigError on empty lists, n < 1, alpha < 0, replicates < 1,
// duplicate entries, or spectral sizes below 2.
void Validate(const ExperimentConfig& config);

// Resolved worker count: explicit value, then ARBOR_THREADS, then hardware.
int ResolveThreads(int requested);

// Seed of the tree used by every estimator in cell (model, n, replicate).
std::uint64_t TreeSeed(std::uint64_t master_seed, Model model, std::int64_t n,
                       std::int64_t replicate);
// Seed of an estimator's tie-breaking stream on that tree.
std::uint64_t EstimatorSeed(std::uint64_t tree_seed, Estimator estimator);

// Runs one estimator on an observed instance. Only the descendant ordering
// is handed the true root; every other estimator sees the shape alone.
Ordering RunEstimator(Estimator estimator, const LabeledInstance& instance,
                      Rng& rng, const SpectralOptions& spectral = {});

class CellError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimulationResult {
  // Sorted by (model, n, alpha, estimator, replicate).
  std::vector<RiskSample> samples;
  std::vector<RiskSummary> summaries;
  std::string manifest_json;
};

// Generates, relabels, estimates and scores every
// (n, replicate) x estimator x alpha cell. Output does not depend on the
// thread count.
SimulationResult Simulate(const ExperimentConfig& config);

// Summaries ordered by (n, alpha, median risk).
std::vector<RiskSummary> RankByMedian(std::vector<RiskSummary> summaries);

struct RateRow {
  Model model = Model::kUrrt;
  double alpha = 1.0;
  Estimator estimator = Estimator::kDescendant;
  RateFit fit;
};

// Log-log growth fit per (estimator, alpha) of median (or mean) risk.
std::vector<RateRow> FitRates(const ExperimentConfig& config,
                              const std::vector<RiskSummary>& summaries);

// CSV emitters. Doubles use the shortest round-trip representation.
std::string FormatDouble(double value);
void WriteSamplesCsv(std::ostream& out, const std::vector<RiskSample>& samples);
void WriteSummaryCsv(std::ostream& out,
                     const std::vector<RiskSummary>& summaries);
void WriteRatesCsv(std::ostream& out, const std::vector<RateRow>& rates);
// Lower/upper reference curves over the configured grid. Columns that rely on
// constants left unspecified by the theory are flagged in `constants`.
void WriteBoundsCsv(std::ostream& out, const ExperimentConfig& config);

// Writes samples.csv, summary.csv, manifest.json (and bounds.csv, *.svg when
// enabled) under config.output_dir.
void WriteSimulationOutputs(const ExperimentConfig& config,
                            const SimulationResult& result);

}  // namespace arbor

#endif  // ARBOR_EXPERIMENT_H_
