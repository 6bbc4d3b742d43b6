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

#include "layernas/engine.h"

#include <algorithm>
#include <set>
#include <span>

#include "layernas/error.h"
#include "layernas/synthetic.h"

namespace layernas {
namespace {

constexpr std::int64_t kUniqueKeyLimit = std::int64_t{1} << 62;

class LayerNasRun {
 public:
  LayerNasRun(const EvalOracle& oracle, const LayerNasConfig& config, BucketMode mode,
              int replicas, std::optional<std::int64_t> max_trials)
      : oracle_(oracle),
        space_(oracle.space()),
        config_(config),
        mode_(mode),
        target_(ResolveTarget(space_, config.target_low, config.target_high)),
        recorder_(space_, target_, config.train_seconds_budget, max_trials),
        rng_(config.seed) {
    ValidateSpace(space_);
    const CostInterval root = CostCompletionInterval(space_, Prefix{});
    if (!root.Intersects(target_.low, target_.high)) {
      throw Error(ErrorCode::kInfeasibleTarget,
                  "no architecture can reach the target cost band: reachable [" +
                      std::to_string(space_.ToUnits(root.min)) + ", " +
                      std::to_string(space_.ToUnits(root.max)) + "]");
    }
    for (int i = 0; i < space_.num_layers(); ++i) {
      stores_.emplace_back(i, replicas, config.buckets, mode);
    }
  }

  // Evaluates every feasible first-layer option. False when the budget ran out.
  bool Seed() {
    for (int o = 0; o < space_.layers[0].size(); ++o) {
      const Prefix child{{o}};
      if (!Feasible(space_, child, target_)) continue;
      if (!EvaluateAndInsert(child)) return false;
    }
    return true;
  }

  // Sampling expansion of stores_[layer] into stores_[layer + 1].
  // Returns false when the search must stop.
  bool ExpandSampled(int layer, bool& progressed) {
    const int next = layer + 1;
    const auto available = [&](const CandidateRecord& rec) {
      return !UntriedOptions(rec.prefix, next).empty();
    };
    for (int r = 0; r < config_.selections_per_layer; ++r) {
      const CandidateRecord* parent = nullptr;
      try {
        parent = &SelectCandidate(stores_[layer], rng_, space_, target_, available);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kNoAvailableCandidates) return true;
        throw;
      }
      // Copy: inserting children never touches stores_[layer], but keep the
      // prefix independent of the store anyway.
      const Prefix parent_prefix = parent->prefix;
      std::vector<int> options = UntriedOptions(parent_prefix, next);
      const int take = std::min<int>(config_.options_per_selection,
                                     static_cast<int>(options.size()));
      for (int t = 0; t < take; ++t) {
        std::uniform_int_distribution<int> pick(t, static_cast<int>(options.size()) - 1);
        std::swap(options[t], options[pick(rng_)]);
        if (!EvaluateAndInsert(parent_prefix.Extend(options[t]))) return false;
        progressed = true;
      }
    }
    return true;
  }

  // Exhaustive expansion of stores_[layer] into stores_[layer + 1].
  bool ExpandAll(int layer) {
    std::vector<Prefix> parents;
    for (const CandidateRecord* rec : stores_[layer].Records()) {
      parents.push_back(rec->prefix);
    }
    for (const Prefix& parent : parents) {
      if (!Feasible(space_, parent, target_)) continue;
      for (int o = 0; o < space_.layers[layer + 1].size(); ++o) {
        const Prefix child = parent.Extend(o);
        if (!Feasible(space_, child, target_) || generated_.contains(child)) continue;
        if (!EvaluateAndInsert(child)) return false;
      }
    }
    return true;
  }

  LayerNasResult Finish(int passes) && {
    return LayerNasResult{std::move(recorder_).Finish(passes), std::move(stores_)};
  }

 private:
  std::vector<int> UntriedOptions(const Prefix& parent, int layer) const {
    std::vector<int> out;
    for (int o = 0; o < space_.layers[layer].size(); ++o) {
      const Prefix child = parent.Extend(o);
      if (!Feasible(space_, child, target_)) continue;
      if (!config_.allow_reeval && generated_.contains(child)) continue;
      out.push_back(o);
    }
    return out;
  }

  bool EvaluateAndInsert(const Prefix& child) {
    const int layer = child.depth() - 1;
    const Architecture arch = CompleteWithDefaults(space_, child);
    const Cost cost = ArchitectureCost(space_, arch);
    generated_.insert(child);

    const EvalResult* result = nullptr;
    EvalResult fresh;
    const auto memo = memo_.find(arch);
    if (!config_.allow_reeval && memo != memo_.end()) {
      result = &memo->second;
    } else {
      if (!recorder_.CanEvaluate()) return false;
      std::uint64_t seed = config_.seed;
      if (config_.allow_reeval) {
        const int trial = static_cast<int>(recorder_.evals_used());
        seed = HashChoices(config_.seed, std::span<const int>(&trial, 1));
      }
      fresh = oracle_.Evaluate(EvalRequest{arch, config_.epoch_budget, seed});
      if (!recorder_.Record(layer, child, arch, cost, fresh)) return false;
      result = &memo_.insert_or_assign(arch, fresh).first->second;
    }
    CandidateRecord record{child,
                           arch,
                           result->validation_accuracy,
                           result->test_accuracy,
                           cost,
                           Phi(space_, mode_, layer, arch, config_.buckets)};
    stores_[layer].Insert(std::move(record));
    return true;
  }

  const EvalOracle& oracle_;
  const SearchSpace& space_;
  const LayerNasConfig& config_;
  BucketMode mode_;
  CostTarget target_;
  TrialRecorder recorder_;
  std::mt19937_64 rng_;
  std::vector<LayerStore> stores_;
  std::set<Prefix> generated_;
  std::map<Architecture, EvalResult> memo_;
};

}  // namespace

BucketMode BucketModeFor(SpaceMode mode) {
  return mode == SpaceMode::kUniqueId ? BucketMode::kUniqueId : BucketMode::kCostBucket;
}

std::int64_t Phi(const SearchSpace& space, BucketMode mode, int layer,
                 const Architecture& arch, int buckets) {
  switch (mode) {
    case BucketMode::kCostBucket:
      return BucketOf(space, layer, ArchitectureCost(space, arch), buckets);
    case BucketMode::kExactCost:
      return ArchitectureCost(space, arch);
    case BucketMode::kUniqueId: {
      CheckArchitecture(space, arch);
      std::int64_t key = 0;
      for (int i = 0; i <= layer; ++i) {
        const int radix = space.layers[i].size();
        if (key > (kUniqueKeyLimit - arch.choices[i]) / radix) {
          throw Error(ErrorCode::kSpaceTooLarge,
                      "unique-id keys overflow at layer " + std::to_string(i));
        }
        key = key * radix + arch.choices[i];
      }
      return key;
    }
  }
  return 0;
}

bool Feasible(const SearchSpace& space, const Prefix& prefix, const CostTarget& target) {
  return CostCompletionInterval(space, prefix).Intersects(target.low, target.high);
}

LayerStore::LayerStore(int layer_index, int replicas, int buckets, BucketMode mode)
    : layer_index_(layer_index), replicas_(replicas), buckets_(buckets), mode_(mode) {
  if (replicas < 1 || buckets < 1) {
    throw Error(ErrorCode::kInvalidArgument, "store needs k >= 1 and H >= 1");
  }
}

InsertResult LayerStore::Insert(CandidateRecord record) {
  if (mode_ == BucketMode::kCostBucket &&
      (record.bucket < 0 || record.bucket >= buckets_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "bucket " + std::to_string(record.bucket) + " outside [0, H)");
  }
  auto& bucket = entries_[record.bucket];
  for (const auto& existing : bucket) {
    if (existing.arch == record.arch) return {InsertOutcome::kRejected, std::nullopt};
  }
  InsertResult result{InsertOutcome::kInserted, std::nullopt};
  if (static_cast<int>(bucket.size()) >= replicas_) {
    if (!RanksBefore(record, bucket.back())) {
      return {InsertOutcome::kRejected, std::nullopt};
    }
    result = {InsertOutcome::kDisplaced, std::move(bucket.back())};
    bucket.pop_back();
    --size_;
  }
  const auto pos = std::upper_bound(bucket.begin(), bucket.end(), record, RanksBefore);
  bucket.insert(pos, std::move(record));
  ++size_;
  return result;
}

std::vector<const CandidateRecord*> LayerStore::Records() const {
  std::vector<const CandidateRecord*> out;
  out.reserve(size_);
  for (const auto& [key, bucket] : entries_) {
    for (const auto& rec : bucket) out.push_back(&rec);
  }
  return out;
}

bool LayerStore::Contains(const Architecture& arch) const {
  for (const auto& [key, bucket] : entries_) {
    for (const auto& rec : bucket) {
      if (rec.arch == arch) return true;
    }
  }
  return false;
}

const CandidateRecord& SelectCandidate(
    const LayerStore& store, std::mt19937_64& rng, const SearchSpace& space,
    const CostTarget& target, const std::function<bool(const CandidateRecord&)>& available) {
  std::vector<const CandidateRecord*> pool;
  for (const CandidateRecord* rec : store.Records()) {
    if (!Feasible(space, rec->prefix, target)) continue;
    if (available && !available(*rec)) continue;
    pool.push_back(rec);
  }
  if (pool.empty()) {
    throw Error(ErrorCode::kNoAvailableCandidates,
                "layer " + std::to_string(store.layer_index()) +
                    " has no available candidates");
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return *pool[pick(rng)];
}

void ValidateLayerNasConfig(const LayerNasConfig& config) {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::kInvalidArgument, m); };
  if (config.buckets < 1) fail("H must be >= 1");
  if (config.replicas < 1) fail("k must be >= 1");
  if (config.selections_per_layer < 1) fail("R must be >= 1");
  if (config.options_per_selection < 1) fail("T must be >= 1");
  if (config.target_low > config.target_high) fail("target_low exceeds target_high");
  if (config.epoch_budget < 1) fail("epoch_budget must be >= 1");
  if (!(config.train_seconds_budget > 0)) fail("train_seconds_budget must be positive");
  if (config.max_passes < 1) fail("max_passes must be >= 1");
}

std::int64_t MaxTrialBound(const SearchSpace& space, int replicas, int buckets) {
  return static_cast<std::int64_t>(replicas) * buckets * OptionSum(space);
}

LayerNasResult RunLayerNas(const EvalOracle& oracle, const LayerNasConfig& config) {
  ValidateLayerNasConfig(config);
  const SearchSpace& space = oracle.space();
  const BucketMode mode = BucketModeFor(config.mode.value_or(space.mode));
  std::optional<std::int64_t> cap = config.max_trials;
  if (!cap && mode == BucketMode::kCostBucket) {
    cap = MaxTrialBound(space, config.replicas, config.buckets);
  }
  LayerNasRun run(oracle, config, mode, config.replicas, cap);
  int passes = 1;
  if (!run.Seed() || space.num_layers() == 1) return std::move(run).Finish(passes);

  bool progressed = false;
  for (int layer = 0;;) {
    if (!run.ExpandSampled(layer, progressed)) break;
    if (++layer == space.num_layers() - 1) {
      if (config.pass_mode == PassMode::kSinglePass || passes >= config.max_passes ||
          !progressed) {
        break;
      }
      ++passes;
      layer = 0;
      progressed = false;
    }
  }
  return std::move(run).Finish(passes);
}

LayerNasResult RunLayerNasDp(const EvalOracle& oracle, const LayerNasConfig& config) {
  LayerNasConfig dp = config;
  dp.allow_reeval = false;
  ValidateLayerNasConfig(dp);
  LayerNasRun run(oracle, dp, BucketMode::kExactCost, 1, config.max_trials);
  if (!run.Seed()) return std::move(run).Finish(1);
  for (int layer = 0; layer + 1 < oracle.space().num_layers(); ++layer) {
    if (!run.ExpandAll(layer)) break;
  }
  return std::move(run).Finish(1);
}

std::int64_t DpTrialBound(const SearchSpace& space) {
  constexpr std::size_t kMaxDistinct = 2'000'000;
  std::int64_t bound = space.layers[0].size();
  std::set<Cost> reachable{0};
  for (int l = 0; l + 1 < space.num_layers(); ++l) {
    std::set<Cost> next;
    for (Cost c : reachable) {
      for (const auto& opt : space.layers[l].options) next.insert(c + opt.cost);
    }
    if (next.size() > kMaxDistinct) {
      throw Error(ErrorCode::kSpaceTooLarge, "too many distinct prefix costs");
    }
    reachable = std::move(next);
    bound += static_cast<std::int64_t>(reachable.size()) * space.layers[l + 1].size();
  }
  return bound;
}

}  // namespace layernas
