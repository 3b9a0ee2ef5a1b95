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

#include "arbor/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "arbor/svg_plot.h"
#include "arbor/treegen.h"
#include "json.hpp"

namespace arbor {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitList(std::string_view value) {
  std::vector<std::string_view> items;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const auto item = Trim(value.substr(0, comma));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return items;
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view text) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("invalid value '" + std::string(text) + "' for '" +
                      std::string(key) + "'");
  }
  return value;
}

bool ParseBool(std::string_view key, std::string_view text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") {
    return true;
  }
  if (text == "0" || text == "false" || text == "no" || text == "off") {
    return false;
  }
  throw ConfigError("invalid boolean '" + std::string(text) + "' for '" +
                    std::string(key) + "'");
}

std::vector<std::int64_t> ParseSizes(std::string_view value) {
  std::vector<std::int64_t> sizes;
  for (auto item : SplitList(value)) {
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      sizes.push_back(ParseNumber<std::int64_t>("sizes", item));
      continue;
    }
    const auto lo = ParseNumber<std::int64_t>("sizes", Trim(item.substr(0, dots)));
    const auto hi = ParseNumber<std::int64_t>("sizes", Trim(item.substr(dots + 2)));
    if (lo < 1 || hi < lo) throw ConfigError("invalid size range");
    for (std::int64_t n = lo; n <= hi; n *= 2) sizes.push_back(n);
  }
  return sizes;
}

template <typename T>
void RequireUnique(const std::vector<T>& items, const char* what) {
  std::set<T> seen(items.begin(), items.end());
  if (seen.size() != items.size()) {
    throw ConfigError(std::string("duplicate entries in ") + what);
  }
}

using SampleKey = std::tuple<int, std::int64_t, double, int, std::int64_t>;

SampleKey KeyOf(const RiskSample& s) {
  return {static_cast<int>(s.model), s.n, s.alpha,
          static_cast<int>(s.estimator), s.replicate};
}

std::string Timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json ConfigJson(const ExperimentConfig& config) {
  nlohmann::json j;
  j["model"] = std::string(ModelName(config.model));
  j["sizes"] = config.sizes;
  j["alphas"] = config.alphas;
  std::vector<std::string> names;
  for (auto e : config.estimators) names.emplace_back(EstimatorName(e));
  j["estimators"] = names;
  j["replicates"] = config.replicates;
  j["master_seed"] = config.master_seed;
  j["output_dir"] = config.output_dir;
  j["overlay_bounds"] = config.overlay_bounds;
  j["svg"] = config.svg;
  j["rates_use_mean"] = config.rates_use_mean;
  j["spectral_tol"] = config.spectral.tol;
  j["spectral_max_iter"] = config.spectral.max_iter;
  return j;
}

}  // namespace

void ApplyConfigValue(ExperimentConfig& config, std::string_view key,
                      std::string_view value) {
  key = Trim(key);
  value = Trim(value);
  try {
    if (key == "model") {
      config.model = ParseModel(value);
    } else if (key == "sizes") {
      config.sizes = ParseSizes(value);
    } else if (key == "alphas") {
      config.alphas.clear();
      for (auto item : SplitList(value)) {
        config.alphas.push_back(ParseNumber<double>(key, item));
      }
    } else if (key == "estimators") {
      config.estimators.clear();
      for (auto item : SplitList(value)) {
        config.estimators.push_back(ParseEstimator(item));
      }
    } else if (key == "replicates") {
      config.replicates = ParseNumber<std::int64_t>(key, value);
    } else if (key == "seed" || key == "master_seed") {
      config.master_seed = ParseNumber<std::uint64_t>(key, value);
    } else if (key == "out" || key == "output_dir") {
      config.output_dir = std::string(value);
    } else if (key == "threads") {
      config.threads = ParseNumber<int>(key, value);
    } else if (key == "bounds" || key == "overlay_bounds") {
      config.overlay_bounds = ParseBool(key, value);
    } else if (key == "svg") {
      config.svg = ParseBool(key, value);
    } else if (key == "rates_use_mean") {
      config.rates_use_mean = ParseBool(key, value);
    } else if (key == "spectral_tol") {
      config.spectral.tol = ParseNumber<double>(key, value);
    } else if (key == "spectral_max_iter") {
      config.spectral.max_iter = ParseNumber<std::int64_t>(key, value);
    } else {
      throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void ApplyConfigText(ExperimentConfig& config, std::istream& text) {
  std::string line;
  int line_no = 0;
  while (std::getline(text, line)) {
    ++line_no;
    std::string_view view = line;
    view = Trim(view.substr(0, view.find('#')));
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    ApplyConfigValue(config, view.substr(0, eq), view.substr(eq + 1));
  }
}

void LoadConfigFile(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  ApplyConfigText(config, in);
}

void Validate(const ExperimentConfig& config) {
  if (config.sizes.empty()) throw ConfigError("sizes must not be empty");
  if (config.alphas.empty()) throw ConfigError("alphas must not be empty");
  if (config.estimators.empty()) {
    throw ConfigError("estimators must not be empty");
  }
  if (config.replicates < 1) throw ConfigError("replicates must be >= 1");
  for (auto n : config.sizes) {
    if (n < 1 || n > (std::int64_t{1} << 30)) {
      throw ConfigError("tree sizes must be in [1, 2^30]");
    }
  }
  for (double a : config.alphas) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw ConfigError("alphas must be finite and >= 0");
    }
  }
  RequireUnique(config.sizes, "sizes");
  RequireUnique(config.alphas, "alphas");
  RequireUnique(config.estimators, "estimators");
  if (!(config.spectral.tol > 0.0)) {
    throw ConfigError("spectral_tol must be > 0");
  }
  if (config.threads < 0) throw ConfigError("threads must be >= 0");
}

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ARBOR_THREADS")) {
    int value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) {
      return value;
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t TreeSeed(std::uint64_t master_seed, Model model, std::int64_t n,
                       std::int64_t replicate) {
  return DeriveSeed({master_seed, TagHash(ModelName(model)),
                     static_cast<std::uint64_t>(n),
                     static_cast<std::uint64_t>(replicate)});
}

std::uint64_t EstimatorSeed(std::uint64_t tree_seed, Estimator estimator) {
  return DeriveSeed({tree_seed, TagHash(EstimatorName(estimator))});
}

Ordering RunEstimator(Estimator estimator, const LabeledInstance& instance,
                      Rng& rng, const SpectralOptions& spectral) {
  const LabeledTree& tree = instance.tree;
  switch (estimator) {
    case Estimator::kJordan:
      return JordanOrdering(tree, rng);
    case Estimator::kDescendant:
      return DescendantOrdering(tree, instance.truth.root(), rng);
    case Estimator::kDegree:
      return DegreeOrdering(tree, rng);
    case Estimator::kSpectral:
      return SpectralOrdering(tree, rng, spectral);
    case Estimator::kReverseDmc:
      return ReverseDmcOrdering(tree, rng);
    case Estimator::kRandom:
      return RandomOrdering(tree.size(), rng);
  }
  throw std::invalid_argument("unknown estimator");
}

SimulationResult Simulate(const ExperimentConfig& config) {
  Validate(config);
  struct Cell {
    std::int64_t n;
    std::int64_t replicate;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  std::set<std::uint64_t> seeds;
  for (auto n : config.sizes) {
    for (std::int64_t r = 0; r < config.replicates; ++r) {
      const auto seed = TreeSeed(config.master_seed, config.model, n, r);
      if (!seeds.insert(seed).second) {
        throw CellError("seed collision for n=" + std::to_string(n) +
                        " replicate=" + std::to_string(r));
      }
      cells.push_back({n, r, seed});
    }
  }

  const std::size_t per_cell = config.estimators.size() * config.alphas.size();
  std::vector<RiskSample> samples(cells.size() * per_cell);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    while (true) {
      const std::size_t index = next.fetch_add(1);
      if (index >= cells.size()) return;
      {
        std::lock_guard lock(failure_mutex);
        if (failure) return;
      }
      const Cell& cell = cells[index];
      Estimator current = config.estimators.front();
      try {
        Rng tree_rng(cell.seed);
        const auto tree =
            Generate(config.model, static_cast<Vertex>(cell.n), tree_rng);
        const LabeledInstance instance = ShuffleLabels(tree, tree_rng);
        std::size_t slot = index * per_cell;
        for (Estimator e : config.estimators) {
          current = e;
          Rng rng(EstimatorSeed(cell.seed, e));
          const Ordering ordering =
              RunEstimator(e, instance, rng, config.spectral);
          for (double alpha : config.alphas) {
            samples[slot++] = {config.model, cell.n,       alpha,
                               e,            cell.replicate, cell.seed,
                               RiskAlpha(ordering, instance.truth, alpha)};
          }
        }
      } catch (const std::exception& e) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::make_exception_ptr(CellError(
              "cell model=" + std::string(ModelName(config.model)) +
              " n=" + std::to_string(cell.n) +
              " replicate=" + std::to_string(cell.replicate) +
              " estimator=" + std::string(EstimatorName(current)) + ": " +
              e.what()));
        }
        return;
      }
    }
  };

  const int threads = std::min<int>(ResolveThreads(config.threads),
                                    static_cast<int>(cells.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(samples.begin(), samples.end(),
            [](const RiskSample& a, const RiskSample& b) {
              return KeyOf(a) < KeyOf(b);
            });

  SimulationResult result;
  result.summaries = Summarize(samples);
  result.samples = std::move(samples);

  nlohmann::json manifest;
  manifest["tool"] = "arbor";
  manifest["version"] = std::string(kVersion);
  manifest["config"] = ConfigJson(config);
  manifest["threads"] = threads;
  manifest["started_utc"] = Timestamp();
  manifest["seed_derivation"] = {
      {"tree", "DeriveSeed(master_seed, TagHash(model), n, replicate)"},
      {"estimator", "DeriveSeed(tree_seed, TagHash(estimator))"},
      {"rng", "xoshiro256** seeded by SplitMix64"}};
  nlohmann::json cell_seeds = nlohmann::json::array();
  for (const auto& c : cells) {
    cell_seeds.push_back({{"n", c.n}, {"replicate", c.replicate}, {"seed", c.seed}});
  }
  manifest["cells"] = std::move(cell_seeds);
  nlohmann::json notes = nlohmann::json::object();
  for (Estimator e : config.estimators) {
    if (UsesTrueRoot(e)) {
      notes[std::string(EstimatorName(e))] =
          "oracle-assisted: receives the true root";
    } else if (e == Estimator::kReverseDmc) {
      notes[std::string(EstimatorName(e))] =
          "score is the PA likelihood of being the last arrival";
    }
  }
  manifest["estimator_notes"] = std::move(notes);
  manifest["finished_utc"] = Timestamp();
  result.manifest_json = manifest.dump(2);
  return result;
}

std::vector<RiskSummary> RankByMedian(std::vector<RiskSummary> summaries) {
  std::stable_sort(summaries.begin(), summaries.end(),
                   [](const RiskSummary& a, const RiskSummary& b) {
                     return std::tie(a.n, a.alpha, a.median) <
                            std::tie(b.n, b.alpha, b.median);
                   });
  return summaries;
}

std::vector<RateRow> FitRates(const ExperimentConfig& config,
                              const std::vector<RiskSummary>& summaries) {
  std::map<std::pair<int, double>,
           std::vector<std::pair<std::int64_t, double>>>
      points;
  for (const auto& s : summaries) {
    points[{static_cast<int>(s.estimator), s.alpha}].emplace_back(
        s.n, config.rates_use_mean ? s.mean : s.median);
  }
  std::vector<RateRow> rows;
  for (const auto& [key, pts] : points) {
    RateRow row;
    row.model = config.model;
    row.estimator = static_cast<Estimator>(key.first);
    row.alpha = key.second;
    row.fit = RateRegression(pts);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void WriteSamplesCsv(std::ostream& out, const std::vector<RiskSample>& samples) {
  out << "model,n,alpha,estimator,replicate,seed,risk\n";
  for (const auto& s : samples) {
    out << ModelName(s.model) << ',' << s.n << ',' << FormatDouble(s.alpha)
        << ',' << EstimatorName(s.estimator) << ',' << s.replicate << ','
        << s.seed << ',' << FormatDouble(s.risk) << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out,
                     const std::vector<RiskSummary>& summaries) {
  out << "model,n,alpha,estimator,count,mean,median,q1,q3\n";
  for (const auto& s : summaries) {
    out << ModelName(s.model) << ',' << s.n << ',' << FormatDouble(s.alpha)
        << ',' << EstimatorName(s.estimator) << ',' << s.count << ','
        << FormatDouble(s.mean) << ',' << FormatDouble(s.median) << ','
        << FormatDouble(s.q1) << ',' << FormatDouble(s.q3) << '\n';
  }
}

void WriteRatesCsv(std::ostream& out, const std::vector<RateRow>& rates) {
  out << "model,alpha,estimator,slope,intercept,r2\n";
  for (const auto& r : rates) {
    out << ModelName(r.model) << ',' << FormatDouble(r.alpha) << ','
        << EstimatorName(r.estimator) << ',' << FormatDouble(r.fit.slope)
        << ',' << FormatDouble(r.fit.intercept) << ','
        << FormatDouble(r.fit.r_squared) << '\n';
  }
}

void WriteBoundsCsv(std::ostream& out, const ExperimentConfig& config) {
  out << "model,n,alpha,lower_bound,upper_bound_jordan,descendant_bound,"
         "constants\n";
  for (double alpha : config.alphas) {
    for (auto n : config.sizes) {
      const double lower = LowerBound(n, alpha, config.model);
      std::string upper = "nan";
      std::string descendant = "nan";
      std::string constants = "explicit";
      if (alpha >= 1.0) {
        upper = FormatDouble(config.model == Model::kUrrt
                                 ? UpperBoundUrrt(n, alpha)
                                 : UpperBoundPa(n, alpha));
        constants = "upper_bound_uses_unspecified_constants_set_to_1";
      } else {
        constants = "trivial_regime_alpha_below_1";
      }
      if (config.model == Model::kUrrt) {
        descendant = FormatDouble(DescendantBoundUrrt(n, alpha));
      }
      out << ModelName(config.model) << ',' << n << ',' << FormatDouble(alpha)
          << ',' << FormatDouble(lower) << ',' << upper << ',' << descendant
          << ',' << constants << '\n';
    }
  }
}

void WriteSimulationOutputs(const ExperimentConfig& config,
                            const SimulationResult& result) {
  namespace fs = std::filesystem;
  const fs::path dir(config.output_dir);
  fs::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
    return f;
  };
  {
    auto f = open("samples.csv");
    WriteSamplesCsv(f, result.samples);
  }
  {
    auto f = open("summary.csv");
    WriteSummaryCsv(f, result.summaries);
  }
  {
    auto f = open("manifest.json");
    f << result.manifest_json << '\n';
  }
  if (config.overlay_bounds) {
    auto f = open("bounds.csv");
    WriteBoundsCsv(f, config);
  }
  if (config.svg) {
    for (double alpha : config.alphas) {
      const std::string name = "risk_" + std::string(ModelName(config.model)) +
                               "_alpha" + FormatDouble(alpha) + ".svg";
      std::ofstream f(dir / name, std::ios::binary);
      f << RenderRiskPlot(result.summaries, config.model, alpha,
                          config.overlay_bounds);
    }
  }
}

}  // namespace arbor
