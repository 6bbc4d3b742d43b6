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

#ifndef LAYERNAS_ENGINE_H_
#define LAYERNAS_ENGINE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "layernas/oracle.h"
#include "layernas/search_result.h"
#include "layernas/space.h"

namespace layernas {

// How candidate stores key their buckets.
//   kCostBucket: H equal-width buckets over the layer's reachable cost range.
//   kUniqueId:   one key per prefix, so every candidate is kept.
//   kExactCost:  the exact integer cost (dynamic-programming form).
enum class BucketMode { kCostBucket, kUniqueId, kExactCost };

BucketMode BucketModeFor(SpaceMode mode);

// phi: the store key of `arch` when it is searched on `layer`.
std::int64_t Phi(const SearchSpace& space, BucketMode mode, int layer,
                 const Architecture& arch, int buckets);

// True iff some completion of `prefix` can land in `target`.
bool Feasible(const SearchSpace& space, const Prefix& prefix, const CostTarget& target);

enum class InsertOutcome { kInserted, kDisplaced, kRejected };

struct InsertResult {
  InsertOutcome outcome = InsertOutcome::kRejected;
  std::optional<CandidateRecord> displaced;
};

// Per-layer memo table: bucket key -> the best <= k candidates in RanksBefore
// order. The final content depends only on the set of inserted records, not
// on insertion order.
class LayerStore {
 public:
  LayerStore(int layer_index, int replicas, int buckets, BucketMode mode);

  InsertResult Insert(CandidateRecord record);

  int layer_index() const { return layer_index_; }
  int replicas() const { return replicas_; }
  int buckets() const { return buckets_; }
  BucketMode mode() const { return mode_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::map<std::int64_t, std::vector<CandidateRecord>>& entries() const {
    return entries_;
  }
  // Bucket-key order, then rank order within a bucket.
  std::vector<const CandidateRecord*> Records() const;
  bool Contains(const Architecture& arch) const;

 private:
  int layer_index_;
  int replicas_;
  int buckets_;
  BucketMode mode_;
  std::size_t size_ = 0;
  std::map<std::int64_t, std::vector<CandidateRecord>> entries_;
};

// Uniform choice among stored records whose prefix is still feasible and that
// pass `available` (when given). Throws kNoAvailableCandidates.
const CandidateRecord& SelectCandidate(
    const LayerStore& store, std::mt19937_64& rng, const SearchSpace& space,
    const CostTarget& target,
    const std::function<bool(const CandidateRecord&)>& available = {});

enum class PassMode { kSinglePass, kCyclic };

struct LayerNasConfig {
  int buckets = 100;                 // H
  int replicas = 3;                  // k
  int selections_per_layer = 100;    // R
  int options_per_selection = 8;     // T
  double target_low = 0.0;
  double target_high = std::numeric_limits<double>::infinity();
  int epoch_budget = 1;
  double train_seconds_budget = kUnlimitedBudget;
  std::uint64_t seed = 0;
  PassMode pass_mode = PassMode::kCyclic;
  int max_passes = 2;
  // Unset: use the space's mode.
  std::optional<SpaceMode> mode;
  // Re-evaluate repeated children with fresh noise instead of reusing the
  // first observation.
  bool allow_reeval = false;
  // Unset: k * H * sum|S_i| in cost-bucket mode, unlimited otherwise.
  std::optional<std::int64_t> max_trials;
};

void ValidateLayerNasConfig(const LayerNasConfig& config);

// k * H * sum|S_i|.
std::int64_t MaxTrialBound(const SearchSpace& space, int replicas, int buckets);

struct LayerNasResult {
  SearchResult search;
  // Final candidate store per layer (index i holds candidates searched on
  // layer i).
  std::vector<LayerStore> stores;
};

// Sampling form: seed the first layer with every option, then per layer pass
// pick R parents and apply up to T untried options to the next layer.
LayerNasResult RunLayerNas(const EvalOracle& oracle, const LayerNasConfig& config);

// Exhaustive form: every stored candidate times every next-layer option,
// keyed by exact cost with one replica. H, k, R, T and the pass settings are
// ignored.
LayerNasResult RunLayerNasDp(const EvalOracle& oracle, const LayerNasConfig& config);

// Upper bound on evaluations of RunLayerNasDp: |S_1| plus, for each layer
// transition, the number of distinct reachable prefix costs times the next
// layer's option count.
std::int64_t DpTrialBound(const SearchSpace& space);

}  // namespace layernas

#endif  // LAYERNAS_ENGINE_H_
