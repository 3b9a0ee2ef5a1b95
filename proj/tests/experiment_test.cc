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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "arbor/experiment.h"
#include "arbor/oracle.h"
#include "arbor/svg_plot.h"
#include "arbor/treegen.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace arbor {
namespace {

std::string SamplesCsv(const SimulationResult& r) {
  std::ostringstream out;
  WriteSamplesCsv(out, r.samples);
  return out.str();
}

std::string SummaryCsv(const std::vector<RiskSummary>& s) {
  std::ostringstream out;
  WriteSummaryCsv(out, s);
  return out.str();
}

ExperimentConfig SmallConfig() {
  ExperimentConfig c;
  c.sizes = {20, 40};
  c.alphas = {1.0, 1.5};
  c.estimators = {Estimator::kJordan, Estimator::kDescendant, Estimator::kDegree,
                  Estimator::kSpectral, Estimator::kReverseDmc, Estimator::kRandom};
  c.replicates = 4;
  c.master_seed = 77;
  c.threads = 1;
  return c;
}

TEST(ConfigTest, ParsesFlatKeyValueText) {
  ExperimentConfig c;
  std::istringstream text(
      "# grid\n"
      "model = pa\n"
      "sizes = 500..8000\n"
      "alphas = 1, 1.2\n"
      "estimators = descendant,degree\n"
      "\n"
      "replicates = 3   # trailing comment\n"
      "seed = 18446744073709551615\n"
      "out = results\n"
      "threads = 2\n"
      "bounds = true\n"
      "svg = yes\n"
      "rates_use_mean = 0\n"
      "spectral_tol = 1e-9\n"
      "spectral_max_iter = 500\n");
  ApplyConfigText(c, text);
  EXPECT_EQ(c.model, Model::kPa);
  EXPECT_EQ(c.sizes, (std::vector<std::int64_t>{500, 1000, 2000, 4000, 8000}));
  EXPECT_EQ(c.alphas, (std::vector<double>{1.0, 1.2}));
  EXPECT_EQ(c.estimators,
            (std::vector<Estimator>{Estimator::kDescendant, Estimator::kDegree}));
  EXPECT_EQ(c.replicates, 3);
  EXPECT_EQ(c.master_seed, 18446744073709551615ull);
  EXPECT_EQ(c.output_dir, "results");
  EXPECT_EQ(c.threads, 2);
  EXPECT_TRUE(c.overlay_bounds);
  EXPECT_TRUE(c.svg);
  EXPECT_FALSE(c.rates_use_mean);
  EXPECT_EQ(c.spectral.tol, 1e-9);
  EXPECT_EQ(c.spectral.max_iter, 500);
  EXPECT_NO_THROW(Validate(c));
}

TEST(ConfigTest, RejectsBadInput) {
  ExperimentConfig c;
  EXPECT_THROW(ApplyConfigValue(c, "colour", "red"), ConfigError);
  EXPECT_THROW(ApplyConfigValue(c, "model", "ba"), ConfigError);
  EXPECT_THROW(ApplyConfigValue(c, "sizes", "10,x"), ConfigError);
  EXPECT_THROW(ApplyConfigValue(c, "sizes", "100..10"), ConfigError);
  EXPECT_THROW(ApplyConfigValue(c, "estimators", "jordan,oracle"), ConfigError);
  EXPECT_THROW(ApplyConfigValue(c, "bounds", "maybe"), ConfigError);
  EXPECT_THROW(ApplyConfigValue(c, "replicates", "2.5"), ConfigError);
  std::istringstream no_equals("model pa\n");
  EXPECT_THROW(ApplyConfigText(c, no_equals), ConfigError);
  EXPECT_THROW(LoadConfigFile(c, "/nonexistent/arbor.cfg"), ConfigError);
}

TEST(ConfigTest, ValidateChecksInvariants) {
  auto expect_invalid = [](auto mutate) {
    ExperimentConfig c;
    mutate(c);
    EXPECT_THROW(Validate(c), ConfigError);
  };
  expect_invalid([](ExperimentConfig& c) { c.sizes.clear(); });
  expect_invalid([](ExperimentConfig& c) { c.alphas.clear(); });
  expect_invalid([](ExperimentConfig& c) { c.estimators.clear(); });
  expect_invalid([](ExperimentConfig& c) { c.replicates = 0; });
  expect_invalid([](ExperimentConfig& c) { c.sizes = {0}; });
  expect_invalid([](ExperimentConfig& c) { c.alphas = {-1.0}; });
  expect_invalid([](ExperimentConfig& c) { c.threads = -2; });
  expect_invalid([](ExperimentConfig& c) { c.sizes = {10, 10}; });
  expect_invalid([](ExperimentConfig& c) {
    c.estimators = {Estimator::kJordan, Estimator::kJordan};
  });
  expect_invalid([](ExperimentConfig& c) { c.spectral.tol = 0; });
  EXPECT_THROW(Simulate([] {
                 ExperimentConfig c;
                 c.replicates = 0;
                 return c;
               }()),
               ConfigError);
}

TEST(ConfigTest, ThreadResolution) {
  EXPECT_EQ(ResolveThreads(3), 3);
  setenv("ARBOR_THREADS", "5", 1);
  EXPECT_EQ(ResolveThreads(0), 5);
  setenv("ARBOR_THREADS", "junk", 1);
  EXPECT_GE(ResolveThreads(0), 1);
  unsetenv("ARBOR_THREADS");
  EXPECT_GE(ResolveThreads(0), 1);
}

TEST(SeedTest, CellSeedsAreDistinctAndStable) {
  std::set<std::uint64_t> seen;
  for (Model m : {Model::kUrrt, Model::kPa}) {
    for (std::int64_t n : {500, 1000, 2000, 4000, 8000}) {
      for (std::int64_t r = 0; r < 100; ++r) seen.insert(TreeSeed(1, m, n, r));
    }
  }
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(TreeSeed(9, Model::kPa, 10, 3), TreeSeed(9, Model::kPa, 10, 3));
  EXPECT_NE(EstimatorSeed(5, Estimator::kJordan), EstimatorSeed(5, Estimator::kDegree));
}

TEST(RunEstimatorTest, OnlyDescendantSeesTheRoot) {
  Rng rng(3);
  auto inst = ShuffleLabels(GenerateUrrt(60, rng), rng);
  auto other = inst;
  // Replace the truth with an unrelated permutation; label-only estimators
  // must not notice.
  std::vector<Vertex> labels(60);
  for (Vertex v = 0; v < 60; ++v) labels[v] = (v + 7) % 60;
  other.truth = GroundTruth::FromArrivalLabels(labels);
  for (Estimator e : AllEstimators()) {
    Rng a(11), b(11);
    const auto x = RunEstimator(e, inst, a);
    const auto y = RunEstimator(e, other, b);
    if (UsesTrueRoot(e)) continue;
    EXPECT_EQ(x, y) << EstimatorName(e);
  }
  Rng a(11);
  EXPECT_EQ(RunEstimator(Estimator::kDescendant, inst, a).rank[inst.truth.root()], 1);
}

TEST(SimulateTest, SerialAndParallelAreByteIdentical) {
  auto config = SmallConfig();
  const auto serial = Simulate(config);
  config.threads = 8;
  const auto parallel = Simulate(config);
  EXPECT_EQ(SamplesCsv(serial), SamplesCsv(parallel));
  EXPECT_EQ(SummaryCsv(serial.summaries), SummaryCsv(parallel.summaries));
  EXPECT_EQ(serial.samples.size(), 2u * 4 * 6 * 2);
  EXPECT_EQ(serial.summaries.size(), 2u * 6 * 2);
  config.replicates = 1;
  EXPECT_EQ(SamplesCsv(Simulate(config)), SamplesCsv(Simulate(config)));
}

TEST(SimulateTest, SamplesAreCanonicallySortedAndManifestComplete) {
  const auto config = SmallConfig();
  const auto r = Simulate(config);
  const std::string csv = SamplesCsv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "model,n,alpha,estimator,replicate,seed,risk");
  for (std::size_t i = 1; i < r.samples.size(); ++i) {
    const auto& a = r.samples[i - 1];
    const auto& b = r.samples[i];
    EXPECT_LE(std::tie(a.n, a.alpha), std::tie(b.n, b.alpha));
  }
  const auto m = nlohmann::json::parse(r.manifest_json);
  EXPECT_EQ(m["version"], std::string(kVersion));
  EXPECT_EQ(m["config"]["replicates"], 4);
  EXPECT_EQ(m["cells"].size(), 8u);
  EXPECT_TRUE(m.contains("started_utc"));
  EXPECT_TRUE(m.contains("seed_derivation"));
  EXPECT_NE(m["estimator_notes"]["descendant"].get<std::string>().find("oracle-assisted"),
            std::string::npos);
  // The manifest is enough to reproduce a sample by hand.
  const auto& s = r.samples.front();
  Rng tree_rng(s.seed);
  const auto inst = ShuffleLabels(Generate(s.model, static_cast<Vertex>(s.n), tree_rng),
                                  tree_rng);
  Rng est_rng(EstimatorSeed(s.seed, s.estimator));
  EXPECT_EQ(RiskAlpha(RunEstimator(s.estimator, inst, est_rng), inst.truth, s.alpha),
            s.risk);
}

TEST(SimulateTest, EigensolverFailureNamesTheCell) {
  ExperimentConfig c;
  c.sizes = {300};
  c.estimators = {Estimator::kSpectral};
  c.replicates = 1;
  c.threads = 1;
  c.spectral.max_iter = 1;
  try {
    Simulate(c);
    FAIL() << "expected a cell error";
  } catch (const CellError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("n=300"), std::string::npos) << what;
    EXPECT_NE(what.find("estimator=spectral"), std::string::npos) << what;
    EXPECT_NE(what.find("replicate=0"), std::string::npos) << what;
  }
}

TEST(SimulateTest, MonteCarloMatchesOracleAtFive) {
  ExperimentConfig c;
  c.sizes = {5};
  c.estimators = {Estimator::kDescendant};
  c.replicates = 100000;
  c.threads = 1;
  const auto r = Simulate(c);
  double sum = 0, sq = 0;
  for (const auto& s : r.samples) {
    sum += s.risk;
    sq += s.risk * s.risk;
  }
  const double m = static_cast<double>(r.samples.size());
  const double mean = sum / m;
  const double se = std::sqrt((sq / m - mean * mean) / (m - 1));
  const double exact = ExactRisk(Estimator::kDescendant, 5, 1.0, Model::kUrrt);
  EXPECT_LE(std::abs(mean - exact), 3 * se) << mean << " vs " << exact;
}

TEST(CompareTest, RanksByMedianWithinEachSize) {
  const auto r = Simulate(SmallConfig());
  const auto ranked = RankByMedian(r.summaries);
  ASSERT_EQ(ranked.size(), r.summaries.size());
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    const auto& a = ranked[i - 1];
    const auto& b = ranked[i];
    if (a.n == b.n && a.alpha == b.alpha) EXPECT_LE(a.median, b.median);
  }
  auto single = SmallConfig();
  single.estimators = {Estimator::kDegree};
  const auto s = Simulate(single);
  EXPECT_EQ(SummaryCsv(RankByMedian(s.summaries)), SummaryCsv(s.summaries));
}

TEST(RatesTest, RecoversInjectedPowerLaw) {
  ExperimentConfig c;
  c.alphas = {1.2};
  std::vector<RiskSummary> summaries;
  for (std::int64_t n : {1000, 2000, 4000, 8000}) {
    RiskSummary s;
    s.n = n;
    s.alpha = 1.2;
    s.estimator = Estimator::kDescendant;
    s.count = 1;
    s.median = 3.0 * std::pow(static_cast<double>(n), 0.8);
    s.mean = 2 * s.median;
    s.q1 = s.q3 = s.median;
    summaries.push_back(s);
  }
  auto rows = FitRates(c, summaries);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].fit.slope, 0.8, 1e-12);
  EXPECT_NEAR(rows[0].fit.intercept, std::log(3.0), 1e-12);
  c.rates_use_mean = true;
  rows = FitRates(c, summaries);
  EXPECT_NEAR(rows[0].fit.intercept, std::log(6.0), 1e-12);
  std::ostringstream out;
  WriteRatesCsv(out, rows);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')),
            "model,alpha,estimator,slope,intercept,r2");
}

TEST(OutputTest, BoundsCsvLabelsConstants) {
  ExperimentConfig c;
  c.sizes = {200, 1000};
  c.alphas = {0.5, 1.0};
  std::ostringstream out;
  WriteBoundsCsv(out, c);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "model,n,alpha,lower_bound,upper_bound_jordan,descendant_bound,constants");
  EXPECT_NE(text.find("urrt,1000,1,14.285714285714286,"), std::string::npos) << text;
  EXPECT_NE(text.find("unspecified_constants_set_to_1"), std::string::npos);
  EXPECT_NE(text.find("trivial_regime"), std::string::npos);
}

TEST(OutputTest, WritesFilesAndSvg) {
  auto c = SmallConfig();
  c.output_dir = (std::filesystem::temp_directory_path() / "arbor_output_test").string();
  std::filesystem::remove_all(c.output_dir);
  c.overlay_bounds = true;
  c.svg = true;
  WriteSimulationOutputs(c, Simulate(c));
  for (const char* f : {"samples.csv", "summary.csv", "manifest.json", "bounds.csv",
                        "risk_urrt_alpha1.svg", "risk_urrt_alpha1.5.svg"}) {
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(c.output_dir) / f)) << f;
  }
  std::ifstream svg(std::filesystem::path(c.output_dir) / "risk_urrt_alpha1.svg");
  std::string head;
  std::getline(svg, head);
  EXPECT_NE(head.find("<svg"), std::string::npos);
  std::filesystem::remove_all(c.output_dir);
}

TEST(OutputTest, FormatDoubleRoundTrips) {
  EXPECT_EQ(FormatDouble(1.0), "1");
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(NAN), "nan");
  EXPECT_EQ(std::stod(FormatDouble(2.0 / 3.0)), 2.0 / 3.0);
}

TEST(SvgTest, RendersPolylinePerEstimator) {
  const auto r = Simulate(SmallConfig());
  const auto svg = RenderRiskPlot(r.summaries, Model::kUrrt, 1.0, true);
  std::size_t count = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos;
       pos = svg.find("<polyline", pos + 1)) {
    ++count;
  }
  EXPECT_GE(count, 6u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace arbor
