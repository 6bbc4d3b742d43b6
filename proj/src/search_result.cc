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

#include "layernas/search_result.h"

namespace layernas {

bool RanksBefore(const CandidateRecord& a, const CandidateRecord& b) {
  if (a.validation_accuracy != b.validation_accuracy) {
    return a.validation_accuracy > b.validation_accuracy;
  }
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.arch < b.arch;
}

TrialRecorder::TrialRecorder(const SearchSpace& space, CostTarget target,
                             double budget_seconds,
                             std::optional<std::int64_t> max_trials)
    : space_(space), target_(target), budget_(budget_seconds), max_trials_(max_trials) {}

bool TrialRecorder::CanEvaluate() const {
  if (exhausted_) return false;
  if (max_trials_ && evals_used() >= *max_trials_) return false;
  return spent_ < budget_;
}

bool TrialRecorder::Record(int layer, const Prefix& prefix, const Architecture& arch,
                           Cost cost, const EvalResult& result) {
  if (!CanEvaluate()) return false;
  if (spent_ + result.train_seconds > budget_) {
    exhausted_ = true;
    return false;
  }
  spent_ += result.train_seconds;

  TrajectoryEntry entry;
  entry.cumulative_train_seconds = spent_;
  entry.trial_index = evals_used();
  entry.layer = layer;
  entry.arch = arch;
  entry.cost = cost;
  entry.validation_accuracy = result.validation_accuracy;
  entry.test_accuracy = result.test_accuracy;
  entry.feasible = target_.Contains(cost);
  if (entry.feasible) {
    CandidateRecord rec{prefix, arch, result.validation_accuracy, result.test_accuracy,
                        cost, -1};
    if (!incumbent_ || RanksBefore(rec, *incumbent_)) incumbent_ = std::move(rec);
  }
  if (incumbent_) entry.best_so_far = incumbent_->validation_accuracy;
  trajectory_.push_back(std::move(entry));
  return true;
}

SearchResult TrialRecorder::Finish(int passes) && {
  SearchResult out;
  out.evals_used = evals_used();
  out.trajectory = std::move(trajectory_);
  out.best_by_validation = incumbent_;
  if (incumbent_) out.best_test_accuracy = incumbent_->test_accuracy;
  out.passes = passes;
  out.budget_exhausted = exhausted_ || (max_trials_ && out.evals_used >= *max_trials_);
  return out;
}

}  // namespace layernas
