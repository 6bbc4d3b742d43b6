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

#ifndef LAYERNAS_SEARCH_RESULT_H_
#define LAYERNAS_SEARCH_RESULT_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "layernas/oracle.h"
#include "layernas/space.h"

namespace layernas {

struct CandidateRecord {
  Prefix prefix;
  // CompleteWithDefaults(prefix).
  Architecture arch;
  double validation_accuracy = 0.0;
  std::optional<double> test_accuracy;
  Cost cost = 0;
  std::int64_t bucket = 0;
};

// Total order used for every tie-break: accuracy descending, then cost
// ascending, then choices lexicographically ascending.
bool RanksBefore(const CandidateRecord& a, const CandidateRecord& b);

struct TrajectoryEntry {
  double cumulative_train_seconds = 0.0;
  std::int64_t trial_index = 0;
  // Layer being searched; -1 for searchers without a layer notion.
  int layer = -1;
  Architecture arch;
  Cost cost = 0;
  double validation_accuracy = 0.0;
  std::optional<double> test_accuracy;
  bool feasible = false;
  // Best feasible validation accuracy up to and including this trial.
  std::optional<double> best_so_far;
};

struct SearchResult {
  std::vector<TrajectoryEntry> trajectory;
  std::optional<CandidateRecord> best_by_validation;
  std::optional<double> best_test_accuracy;
  std::int64_t evals_used = 0;
  int passes = 0;
  bool budget_exhausted = false;
};

inline constexpr double kUnlimitedBudget = std::numeric_limits<double>::infinity();

// Shared budget accounting for every searcher: each evaluation's
// train_seconds is charged before the result is accepted, and a result the
// remaining budget cannot cover ends the search.
class TrialRecorder {
 public:
  TrialRecorder(const SearchSpace& space, CostTarget target, double budget_seconds,
                std::optional<std::int64_t> max_trials = std::nullopt);

  // False once the trial cap is reached or the budget is spent.
  bool CanEvaluate() const;

  // Returns false, recording nothing, when `result` does not fit the budget.
  bool Record(int layer, const Prefix& prefix, const Architecture& arch, Cost cost,
              const EvalResult& result);

  const std::optional<CandidateRecord>& incumbent() const { return incumbent_; }
  std::int64_t evals_used() const { return static_cast<std::int64_t>(trajectory_.size()); }
  double spent_seconds() const { return spent_; }

  SearchResult Finish(int passes) &&;

 private:
  const SearchSpace& space_;
  CostTarget target_;
  double budget_;
  std::optional<std::int64_t> max_trials_;
  double spent_ = 0.0;
  bool exhausted_ = false;
  std::vector<TrajectoryEntry> trajectory_;
  std::optional<CandidateRecord> incumbent_;
};

}  // namespace layernas

#endif  // LAYERNAS_SEARCH_RESULT_H_
