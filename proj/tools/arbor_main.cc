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

// arbor: simulate, compare and fit rates for vertex-arrival-order estimators
// on random recursive trees.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "arbor/experiment.h"
#include "arbor/self_check.h"
#include "arbor/tree_io.h"
#include "arbor/treegen.h"

namespace {

struct Overrides {
  std::optional<std::string> config_path;
  std::optional<std::string> model;
  std::optional<std::string> sizes;
  std::optional<std::string> alphas;
  std::optional<std::string> estimators;
  std::optional<std::string> replicates;
  std::optional<std::string> seed;
  std::optional<std::string> out;
  std::optional<std::string> threads;
  bool bounds = false;
  bool svg = false;
};

void AddExperimentFlags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "Flat key=value config file");
  cmd->add_option("--model", o.model, "urrt or pa");
  cmd->add_option("--sizes", o.sizes, "Comma list or a..b doubling range");
  cmd->add_option("--alphas", o.alphas, "Comma list of risk exponents");
  cmd->add_option("--estimators", o.estimators,
                  "Comma list of jordan,descendant,degree,spectral,"
                  "reverse_dmc,random");
  cmd->add_option("--replicates", o.replicates, "Trees per size");
  cmd->add_option("--seed", o.seed, "Master seed (64-bit)");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--threads", o.threads,
                  "Worker threads (falls back to ARBOR_THREADS)");
  cmd->add_flag("--bounds", o.bounds, "Write lower/upper bound curves");
  cmd->add_flag("--svg", o.svg, "Render SVG risk plots");
}

arbor::ExperimentConfig BuildConfig(const Overrides& o,
                                    arbor::ExperimentConfig config) {
  if (o.config_path) arbor::LoadConfigFile(config, *o.config_path);
  auto apply = [&](const char* key, const std::optional<std::string>& v) {
    if (v) arbor::ApplyConfigValue(config, key, *v);
  };
  apply("model", o.model);
  apply("sizes", o.sizes);
  apply("alphas", o.alphas);
  apply("estimators", o.estimators);
  apply("replicates", o.replicates);
  apply("seed", o.seed);
  apply("out", o.out);
  apply("threads", o.threads);
  if (o.bounds) config.overlay_bounds = true;
  if (o.svg) config.svg = true;
  arbor::Validate(config);
  return config;
}

void WriteFile(const arbor::ExperimentConfig& config, const std::string& name,
               const auto& writer) {
  std::filesystem::create_directories(config.output_dir);
  const auto path = std::filesystem::path(config.output_dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  writer(out);
}

int RunSimulate(const Overrides& o) {
  const auto config = BuildConfig(o, {});
  const auto result = arbor::Simulate(config);
  arbor::WriteSimulationOutputs(config, result);
  std::cerr << "wrote " << result.samples.size() << " samples to "
            << config.output_dir << "\n";
  return 0;
}

int RunCompare(const Overrides& o) {
  const auto config = BuildConfig(o, {});
  const auto result = arbor::Simulate(config);
  arbor::WriteSimulationOutputs(config, result);
  const auto ranked = arbor::RankByMedian(result.summaries);
  WriteFile(config, "compare.csv",
            [&](std::ostream& out) { arbor::WriteSummaryCsv(out, ranked); });
  arbor::WriteSummaryCsv(std::cout, ranked);
  return 0;
}

int RunRates(const Overrides& o) {
  arbor::ExperimentConfig defaults;
  defaults.sizes = {1000, 2000, 4000, 8000};
  const auto config = BuildConfig(o, defaults);
  const auto result = arbor::Simulate(config);
  arbor::WriteSimulationOutputs(config, result);
  const auto rates = arbor::FitRates(config, result.summaries);
  WriteFile(config, "rates.csv",
            [&](std::ostream& out) { arbor::WriteRatesCsv(out, rates); });
  arbor::WriteRatesCsv(std::cout, rates);
  return 0;
}

int RunOracleCheck(std::int64_t replicates, std::uint64_t seed) {
  arbor::SelfCheckOptions options;
  options.mc_replicates = replicates;
  options.seed = seed;
  const auto checks = arbor::RunOracleSelfCheck(options);
  std::cout << arbor::SelfCheckJson(checks) << "\n";
  for (const auto& c : checks) {
    if (!c.pass) return 1;
  }
  return 0;
}

int RunGen(const std::string& model, std::int64_t n, std::uint64_t seed,
           bool unshuffled, const std::string& out_path) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  arbor::Rng rng(seed);
  const auto tree =
      arbor::Generate(arbor::ParseModel(model), static_cast<arbor::Vertex>(n), rng);
  const auto labeled = unshuffled ? arbor::LabeledTree::FromRecursive(tree)
                                  : arbor::ShuffleLabels(tree, rng).tree;
  if (out_path.empty() || out_path == "-") {
    arbor::WriteEdgeList(std::cout, labeled);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    arbor::WriteEdgeList(out, labeled);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arrival-order estimation on random recursive trees"};
  app.set_version_flag("--version", std::string(arbor::kVersion));
  app.require_subcommand(1);

  Overrides simulate_flags, compare_flags, rates_flags;
  auto* simulate = app.add_subcommand("simulate", "Run the simulation grid");
  AddExperimentFlags(simulate, simulate_flags);
  auto* compare = app.add_subcommand(
      "compare", "Simulate several estimators and rank them by median risk");
  AddExperimentFlags(compare, compare_flags);
  auto* rates = app.add_subcommand("rates", "Fit log-log growth rates");
  AddExperimentFlags(rates, rates_flags);

  std::int64_t check_reps = 20000;
  std::uint64_t check_seed = arbor::SelfCheckOptions{}.seed;
  auto* oracle = app.add_subcommand("oracle-check",
                                    "Run the exact-oracle self-check suite");
  oracle->add_option("--replicates", check_reps, "Monte Carlo replicates");
  oracle->add_option("--seed", check_seed, "Monte Carlo seed");

  std::string gen_model = "urrt";
  std::int64_t gen_n = 10;
  std::uint64_t gen_seed = 1;
  bool gen_unshuffled = false;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Emit one random tree as an edge list");
  gen->add_option("--model", gen_model, "urrt or pa");
  gen->add_option("--n", gen_n, "Number of vertices")->required();
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_flag("--unshuffled", gen_unshuffled,
                "Keep arrival labels instead of a random relabeling");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return RunSimulate(simulate_flags);
    if (*compare) return RunCompare(compare_flags);
    if (*rates) return RunRates(rates_flags);
    if (*oracle) return RunOracleCheck(check_reps, check_seed);
    if (*gen) return RunGen(gen_model, gen_n, gen_seed, gen_unshuffled, gen_out);
  } catch (const arbor::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
