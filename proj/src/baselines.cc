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

#include "layernas/baselines.h"

#include <cmath>
#include <deque>
#include <random>

#include "layernas/error.h"

namespace layernas {
namespace {

struct Member {
  Architecture arch;
  double objective = 0.0;
};

CostTarget CheckedTarget(const SearchSpace& space, const BaselineBudget& budget) {
  ValidateSpace(space);
  if (budget.epoch_budget < 1) {
    throw Error(ErrorCode::kInvalidArgument, "epoch_budget must be >= 1");
  }
  if (!(budget.train_seconds_budget > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "train_seconds_budget must be positive");
  }
  if (std::isinf(budget.train_seconds_budget) && !budget.max_trials) {
    throw Error(ErrorCode::kInvalidArgument,
                "baselines need a finite train-seconds budget or a trial cap");
  }
  const CostTarget target = ResolveTarget(space, budget.target_low, budget.target_high);
  const CostInterval root = CostCompletionInterval(space, Prefix{});
  if (!root.Intersects(target.low, target.high)) {
    throw Error(ErrorCode::kInfeasibleTarget, "no architecture can reach the target band");
  }
  return target;
}

Architecture SampleUniform(const SearchSpace& space, std::mt19937_64& rng) {
  Architecture arch;
  for (const auto& layer : space.layers) {
    std::uniform_int_distribution<int> pick(0, layer.size() - 1);
    arch.choices.push_back(pick(rng));
  }
  return arch;
}

Prefix AsPrefix(const Architecture& arch) { return Prefix{arch.choices}; }

// Without a trial cap only train seconds end a baseline run.
void CheckProgress(const EvalResult& result, const BaselineBudget& budget) {
  if (!budget.max_trials && !(result.train_seconds > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "evaluation charged no train seconds and no trial cap is set");
  }
}

}  // namespace

double MnasObjective(double accuracy, double cost, const MnasObjectiveSpec& spec) {
  if (!(cost > 0)) {
    throw Error(ErrorCode::kNonPositiveCost, "MNAS objective needs cost > 0");
  }
  if (!(spec.target_cost > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "MNAS target cost must be positive");
  }
  return accuracy * std::pow(cost / spec.target_cost, spec.exponent);
}

SearchResult RunRandomSearch(const EvalOracle& oracle, const BaselineBudget& budget) {
  const SearchSpace& space = oracle.space();
  const CostTarget target = CheckedTarget(space, budget);
  TrialRecorder recorder(space, target, budget.train_seconds_budget, budget.max_trials);
  std::mt19937_64 rng(budget.seed);
  while (recorder.CanEvaluate()) {
    const Architecture arch = SampleUniform(space, rng);
    const EvalResult result =
        oracle.Evaluate(EvalRequest{arch, budget.epoch_budget, budget.seed});
    CheckProgress(result, budget);
    if (!recorder.Record(-1, AsPrefix(arch), arch, ArchitectureCost(space, arch), result)) {
      break;
    }
  }
  return std::move(recorder).Finish(1);
}

SearchResult RunRegularizedEvolution(const EvalOracle& oracle, const BaselineBudget& budget,
                                     const RegularizedEvolutionConfig& config,
                                     std::optional<MnasObjectiveSpec> objective) {
  const SearchSpace& space = oracle.space();
  const CostTarget target = CheckedTarget(space, budget);
  if (config.population_size < 1 || config.tournament_size < 1 ||
      config.tournament_size > config.population_size) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 1 <= tournament_size <= population_size");
  }
  if (!objective) {
    const double max_cost = space.ToUnits(ArchitectureCost(space, MaxCostArchitecture(space)));
    objective = MnasObjectiveSpec{
        std::isinf(budget.target_high) ? max_cost : budget.target_high, -0.07};
  }

  TrialRecorder recorder(space, target, budget.train_seconds_budget, budget.max_trials);
  std::mt19937_64 rng(budget.seed);
  std::deque<Member> population;

  auto evaluate = [&](const Architecture& arch) -> std::optional<Member> {
    if (!recorder.CanEvaluate()) return std::nullopt;
    const Cost cost = ArchitectureCost(space, arch);
    const EvalResult result =
        oracle.Evaluate(EvalRequest{arch, budget.epoch_budget, budget.seed});
    CheckProgress(result, budget);
    if (!recorder.Record(-1, AsPrefix(arch), arch, cost, result)) return std::nullopt;
    return Member{arch, MnasObjective(result.validation_accuracy, space.ToUnits(cost),
                                      *objective)};
  };

  while (static_cast<int>(population.size()) < config.population_size) {
    auto member = evaluate(SampleUniform(space, rng));
    if (!member) return std::move(recorder).Finish(1);
    population.push_back(std::move(*member));
  }

  std::vector<int> mutable_layers;
  for (int i = 0; i < space.num_layers(); ++i) {
    if (space.layers[i].size() > 1) mutable_layers.push_back(i);
  }
  std::uniform_int_distribution<std::size_t> draw(0, population.size() - 1);
  while (true) {
    const Member* parent = nullptr;
    for (int t = 0; t < config.tournament_size; ++t) {
      const Member& candidate = population[draw(rng)];
      if (!parent || candidate.objective > parent->objective) parent = &candidate;
    }
    Architecture child = parent->arch;
    if (!mutable_layers.empty()) {
      std::uniform_int_distribution<std::size_t> which(0, mutable_layers.size() - 1);
      const int layer = mutable_layers[which(rng)];
      std::uniform_int_distribution<int> shift(1, space.layers[layer].size() - 1);
      child.choices[layer] = (child.choices[layer] + shift(rng)) % space.layers[layer].size();
    }
    auto member = evaluate(child);
    if (!member) break;
    population.push_back(std::move(*member));
    population.pop_front();
  }
  return std::move(recorder).Finish(1);
}

}  // namespace layernas
