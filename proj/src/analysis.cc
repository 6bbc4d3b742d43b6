// Copyright 2026 The LayerNAS Authors.
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

#include "layernas/analysis.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "layernas/brute_force.h"
#include "layernas/error.h"

namespace layernas {

double StandardNormalCdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double InversionProbability(const ReplicaAnalysisSpec& spec) {
  if (spec.sigma_x < 0 || spec.sigma_y < 0) {
    throw Error(ErrorCode::kInvalidArgument, "sigmas must be >= 0");
  }
  const double scale = std::hypot(spec.sigma_x, spec.sigma_y);
  if (scale == 0.0) {
    // Noise-free: the sign of the gap decides.
    if (spec.mu_diff == 0.0) {
      throw Error(ErrorCode::kDegenerateDistribution, "both sigmas are zero and no gap");
    }
    return spec.mu_diff > 0.0 ? 1.0 : 0.0;
  }
  // P(Z > -mu_diff / scale) = Phi(mu_diff / scale).
  return StandardNormalCdf(spec.mu_diff / scale);
}

double KeepAllProbability(double p, int replicas, int layers) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p must lie in [0, 1]");
  }
  if (replicas < 1 || layers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k and L must be >= 1");
  }
  return std::pow(1.0 - std::pow(p, replicas), layers);
}

ProportionInterval WilsonInterval(std::int64_t successes, std::int64_t trials, double z) {
  if (trials <= 0 || successes < 0 || successes > trials) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 <= successes <= trials, trials > 0");
  }
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::vector<SummaryRow> Summarize(const TrajectoryBundle& bundle) {
  if (bundle.runs.empty()) throw Error(ErrorCode::kEmptyBundle, "no runs to summarize");
  for (const auto& run : bundle.runs) {
    if (run.empty()) throw Error(ErrorCode::kEmptyBundle, "a run has an empty trajectory");
  }
  for (std::size_t i = 1; i < bundle.grid.size(); ++i) {
    if (!(bundle.grid[i] > bundle.grid[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "checkpoint grid must be strictly increasing");
    }
  }
  std::vector<SummaryRow> rows;
  for (double checkpoint : bundle.grid) {
    std::vector<double> values;
    for (const auto& run : bundle.runs) {
      // Trajectories are sorted by cumulative seconds.
      auto it = std::upper_bound(
          run.begin(), run.end(), checkpoint,
          [](double c, const TrajectoryEntry& e) { return c < e.cumulative_train_seconds; });
      if (it == run.begin()) continue;
      const auto& last = *std::prev(it);
      if (last.best_so_far) values.push_back(*last.best_so_far);
    }
    SummaryRow row;
    row.checkpoint_seconds = checkpoint;
    row.n = static_cast<int>(values.size());
    if (!values.empty()) {
      // Sorted so the result does not depend on run order.
      std::sort(values.begin(), values.end());
      const double mean =
          std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
      double ss = 0.0;
      for (double v : values) ss += (v - mean) * (v - mean);
      row.mean = mean;
      row.std = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> LogSpacedCheckpoints(double budget, int count, double span) {
  if (!(budget > 0) || std::isinf(budget) || count < 1 || !(span >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "checkpoints need a finite positive budget");
  }
  std::vector<double> grid;
  if (count == 1) return {budget};
  const double lo = std::log(budget / span);
  const double hi = std::log(budget);
  for (int i = 0; i < count; ++i) {
    grid.push_back(i + 1 == count ? budget
                                  : std::exp(lo + (hi - lo) * i / (count - 1)));
  }
  return grid;
}

std::string SummaryCsv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out.precision(10);
  out << "checkpoint_seconds,mean,std,n\n";
  for (const auto& row : rows) {
    out << row.checkpoint_seconds << ',';
    if (row.mean) out << *row.mean;
    out << ',';
    if (row.std) out << *row.std;
    out << ',' << row.n << '\n';
  }
  return out.str();
}

RetentionResult MonteCarloRetention(const SearchSpace& space,
                                    const SyntheticOracleSpec& oracle_spec,
                                    const LayerNasConfig& config, int trials,
                                    std::uint64_t base_seed,
                                    std::optional<Architecture> optimum,
                                    std::optional<double> analytic) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (!optimum) {
    SyntheticOracleSpec exact = oracle_spec;
    exact.noise_sigma = 0.0;
    exact.noise_sigma_by_option.clear();
    const SyntheticOracle noiseless(space, exact);
    optimum = BruteForceOptimum(noiseless,
                                ResolveTarget(space, config.target_low, config.target_high),
                                config.epoch_budget)
                  .arch;
  }
  const SyntheticOracle oracle(space, oracle_spec);
  const int last = space.num_layers() - 1;
  // Per-trial outcome bits: 1 retained, 2 selected.
  std::vector<int> outcome(trials, 0);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto worker = [&] {
    for (int t = next++; t < trials; t = next++) {
      try {
        LayerNasConfig run = config;
        run.seed = base_seed + static_cast<std::uint64_t>(t);
        const LayerNasResult result = RunLayerNas(oracle, run);
        if (result.stores[last].Contains(*optimum)) outcome[t] |= 1;
        const auto& best = result.search.best_by_validation;
        if (best && best->arch == *optimum) outcome[t] |= 2;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers =
      std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, trials);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  RetentionResult out;
  out.trials = trials;
  for (int bits : outcome) {
    out.retained += bits & 1;
    out.selected += (bits >> 1) & 1;
  }
  out.retained_rate = static_cast<double>(out.retained) / trials;
  out.selected_rate = static_cast<double>(out.selected) / trials;
  out.retained_ci = WilsonInterval(out.retained, trials);
  out.analytic = analytic;
  out.agrees = analytic && out.retained_ci.Contains(*analytic);
  return out;
}

ReplicaExperiment BuildReplicaExperiment(const ReplicaAnalysisSpec& spec) {
  if (spec.layers < 1 || spec.replicas < 1) {
    throw Error(ErrorCode::kInvalidArgument, "replica experiment needs L >= 1 and k >= 1");
  }
  if (!(spec.mu_diff < 0)) {
    throw Error(ErrorCode::kInvalidArgument, "the superior candidate needs mu_diff < 0");
  }
  ReplicaExperiment exp;
  // Options per layer: 0 = superior, 1 = inferior (both cost 1), 2 = default
  // (cost 0, excluded by the target band).
  exp.space = SpaceFromCosts(
      std::vector<std::vector<Cost>>(spec.layers, std::vector<Cost>{1, 1, 0}),
      std::vector<int>(spec.layers, 2));
  exp.space.name = "replica_pairs";
  for (auto& layer : exp.space.layers) {
    layer.options[0].label = "superior";
    layer.options[1].label = "inferior";
    layer.options[2].label = "default";
  }
  const double gap = -spec.mu_diff;
  for (int i = 0; i < spec.layers; ++i) {
    const double base = i == 0 ? 0.5 : 0.0;
    exp.oracle.quality.push_back({base + gap, base, base});
    exp.oracle.noise_sigma_by_option.push_back({spec.sigma_y, spec.sigma_x, spec.sigma_y});
  }
  exp.oracle.noise_sigma = std::max(spec.sigma_x, spec.sigma_y);
  exp.oracle.train_seconds_per_eval = 1.0;

  exp.config.replicas = spec.replicas;
  exp.config.buckets = 100;
  exp.config.selections_per_layer = 1'000'000;
  exp.config.options_per_selection = 3;
  exp.config.pass_mode = PassMode::kSinglePass;
  exp.config.target_low = spec.layers;
  exp.config.target_high = spec.layers;
  exp.optimum = Architecture{std::vector<int>(spec.layers, 0)};
  exp.analytic = KeepAllProbability(InversionProbability(spec), spec.replicas, spec.layers);
  return exp;
}

RetentionResult RunReplicaExperiment(const ReplicaAnalysisSpec& spec, int trials,
                                     std::uint64_t base_seed) {
  const ReplicaExperiment exp = BuildReplicaExperiment(spec);
  return MonteCarloRetention(exp.space, exp.oracle, exp.config, trials, base_seed,
                             exp.optimum, exp.analytic);
}

}  // namespace layernas
