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

#ifndef LAYERNAS_ANALYSIS_H_
#define LAYERNAS_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "layernas/engine.h"
#include "layernas/search_result.h"
#include "layernas/synthetic.h"

namespace layernas {

// Two same-cost candidates: x inferior, y superior, with Gaussian accuracy
// noise. mu_diff is mu_x - mu_y.
struct ReplicaAnalysisSpec {
  double mu_diff = -0.002;
  double sigma_x = 0.001;
  double sigma_y = 0.001;
  int replicas = 3;
  int layers = 20;
};

double StandardNormalCdf(double z);

// P(x > y) for x - y ~ N(mu_diff, sigma_x^2 + sigma_y^2).
// Both sigmas zero gives 0 or 1 by the sign of mu_diff, and throws
// kDegenerateDistribution when mu_diff is zero as well.
double InversionProbability(const ReplicaAnalysisSpec& spec);

// (1 - p^k)^L: every one of L layer searches keeps the superior candidate.
double KeepAllProbability(double p, int replicas, int layers);

struct ProportionInterval {
  double low = 0.0;
  double high = 1.0;

  bool Contains(double v) const { return low <= v && v <= high; }
};

// Wilson score interval; z = 1.96 gives 95%.
ProportionInterval WilsonInterval(std::int64_t successes, std::int64_t trials,
                                  double z = 1.959963984540054);

struct TrajectoryBundle {
  std::vector<std::vector<TrajectoryEntry>> runs;
  // Budget checkpoints in train seconds, strictly increasing.
  std::vector<double> grid;
};

struct SummaryRow {
  double checkpoint_seconds = 0.0;
  std::optional<double> mean;
  std::optional<double> std;
  int n = 0;
};

// Per checkpoint: each run's best-so-far feasible validation accuracy at its
// last trial within the checkpoint, then mean and sample std (n - 1) over the
// runs that have a value. Runs without one yet are left out. Throws
// kEmptyBundle.
std::vector<SummaryRow> Summarize(const TrajectoryBundle& bundle);

// `count` geometrically spaced points from budget / span up to budget.
std::vector<double> LogSpacedCheckpoints(double budget, int count = 20,
                                         double span = 1000.0);

// checkpoint_seconds,mean,std,n
std::string SummaryCsv(const std::vector<SummaryRow>& rows);

struct RetentionResult {
  int trials = 0;
  // Optimum still present in the last layer's store.
  int retained = 0;
  // Optimum returned as best_by_validation.
  int selected = 0;
  double retained_rate = 0.0;
  double selected_rate = 0.0;
  ProportionInterval retained_ci;
  std::optional<double> analytic;
  bool agrees = false;
};

// Runs `trials` searches with seeds base_seed, base_seed + 1, ... and counts
// how often the known optimum survives. Without `optimum` it is found by
// brute force on the noise-free oracle (kSpaceTooLarge for big spaces).
// `agrees` tells whether `analytic` lies in the Wilson interval of the
// retention rate.
RetentionResult MonteCarloRetention(const SearchSpace& space,
                                    const SyntheticOracleSpec& oracle_spec,
                                    const LayerNasConfig& config, int trials,
                                    std::uint64_t base_seed,
                                    std::optional<Architecture> optimum = std::nullopt,
                                    std::optional<double> analytic = std::nullopt);

// A space that realizes the replica model: each layer offers a superior
// option y and an inferior option x at equal cost, plus a zero-cost default
// that the target band excludes. Inferior choices carry noise sigma_x, the
// all-superior lineage sigma_y. Searched exhaustively in a single pass.
struct ReplicaExperiment {
  SearchSpace space;
  SyntheticOracleSpec oracle;
  LayerNasConfig config;
  Architecture optimum;
  double analytic = 0.0;
};

ReplicaExperiment BuildReplicaExperiment(const ReplicaAnalysisSpec& spec);
RetentionResult RunReplicaExperiment(const ReplicaAnalysisSpec& spec, int trials,
                                     std::uint64_t base_seed);

}  // namespace layernas

#endif  // LAYERNAS_ANALYSIS_H_
