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

#ifndef LAYERNAS_BASELINES_H_
#define LAYERNAS_BASELINES_H_

#include <cstdint>
#include <limits>
#include <optional>

#include "layernas/oracle.h"
#include "layernas/search_result.h"

namespace layernas {

struct MnasObjectiveSpec {
  // In cost units; must be positive.
  double target_cost = 1.0;
  double exponent = -0.07;
};

// accuracy * (cost / target)^exponent. Throws kNonPositiveCost.
double MnasObjective(double accuracy, double cost, const MnasObjectiveSpec& spec);

// Settings shared by every baseline searcher.
struct BaselineBudget {
  double target_low = 0.0;
  double target_high = std::numeric_limits<double>::infinity();
  int epoch_budget = 1;
  double train_seconds_budget = kUnlimitedBudget;
  std::optional<std::int64_t> max_trials;
  std::uint64_t seed = 0;
};

// Uniform sampling, each layer independently and with replacement. Tracks the
// feasible best post hoc. Throws kInfeasibleTarget.
SearchResult RunRandomSearch(const EvalOracle& oracle, const BaselineBudget& budget);

struct RegularizedEvolutionConfig {
  int population_size = 50;
  int tournament_size = 10;
};

// Aging evolution: tournament by MNAS objective, single-layer random
// reassignment as mutation, oldest member removed every step. Feasible best
// is tracked by validation accuracy. An unbounded target_high uses the
// all-max cost as the objective target.
SearchResult RunRegularizedEvolution(const EvalOracle& oracle, const BaselineBudget& budget,
                                     const RegularizedEvolutionConfig& config,
                                     std::optional<MnasObjectiveSpec> objective = std::nullopt);

}  // namespace layernas

#endif  // LAYERNAS_BASELINES_H_
