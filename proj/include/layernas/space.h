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

#ifndef LAYERNAS_SPACE_H_
#define LAYERNAS_SPACE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace layernas {

// Costs are integers in units of SearchSpace::cost_resolution so that bucket
// keys and feasibility comparisons are exact.
using Cost = std::int64_t;

struct OptionSpec {
  std::string label;
  Cost cost = 0;
  nlohmann::json payload = nlohmann::json::object();
};

// Options are ordered by non-increasing cost: front() is the most expensive
// choice, back() the cheapest.
struct LayerSpec {
  std::string name;
  std::vector<OptionSpec> options;
  int default_index = 0;

  int size() const { return static_cast<int>(options.size()); }
  Cost max_cost() const { return options.front().cost; }
  Cost min_cost() const { return options.back().cost; }
  Cost default_cost() const { return options[default_index].cost; }
};

// Selects the phi family used to key candidate stores.
enum class SpaceMode { kCostBucket, kUniqueId };

struct SearchSpace {
  std::string name;
  std::string cost_unit;
  SpaceMode mode = SpaceMode::kCostBucket;
  std::vector<LayerSpec> layers;
  // Cost units represented by one integer tick.
  double cost_resolution = 1.0;

  // Optional header declarations checked by ValidateSpace.
  std::optional<std::string> expected_unique_models;
  std::optional<std::int64_t> expected_option_sum;
  std::optional<double> declared_max_cost;

  int num_layers() const { return static_cast<int>(layers.size()); }
  double ToUnits(Cost ticks) const {
    return static_cast<double>(ticks) * cost_resolution;
  }
};

struct Architecture {
  std::vector<int> choices;

  int size() const { return static_cast<int>(choices.size()); }
  auto operator<=>(const Architecture&) const = default;
};

// Layers [0, depth) fixed; the rest are not yet searched.
struct Prefix {
  std::vector<int> choices;

  int depth() const { return static_cast<int>(choices.size()); }
  Prefix Extend(int option) const;
  auto operator<=>(const Prefix&) const = default;
};

struct CostInterval {
  Cost min = 0;
  Cost max = 0;

  bool Contains(Cost c) const { return min <= c && c <= max; }
  bool Intersects(Cost low, Cost high) const {
    return min <= high && low <= max;
  }
  bool operator==(const CostInterval&) const = default;
};

// Inclusive target band in ticks.
struct CostTarget {
  Cost low = 0;
  Cost high = 0;

  bool Contains(Cost c) const { return low <= c && c <= high; }
};

// Throws Error{kEmptyLayer, kBadDefaultIndex, kUnsortedCosts, kNegativeCost,
// kDuplicateLabel, kCountMismatch}; detail names the offending layer.
void ValidateSpace(const SearchSpace& space);

void CheckArchitecture(const SearchSpace& space, const Architecture& arch);
void CheckPrefix(const SearchSpace& space, const Prefix& prefix);

Architecture CompleteWithDefaults(const SearchSpace& space,
                                  const Prefix& prefix);
Architecture DefaultArchitecture(const SearchSpace& space);
Architecture MaxCostArchitecture(const SearchSpace& space);
Architecture MinCostArchitecture(const SearchSpace& space);

Cost ArchitectureCost(const SearchSpace& space, const Architecture& arch);
Cost PrefixCost(const SearchSpace& space, const Prefix& prefix);

// [cost(prefix) + cheapest completion, cost(prefix) + priciest completion].
CostInterval CostCompletionInterval(const SearchSpace& space,
                                    const Prefix& prefix);

// Reachable cost range of candidates searched on `layer`: layers <= layer
// free, layers > layer at their defaults.
CostInterval LayerCostRange(const SearchSpace& space, int layer);

// floor((cost - min) / (max - min) * buckets), clamped to [0, buckets - 1].
// A degenerate range maps to bucket 0.
int BucketIndex(Cost min, Cost max, Cost cost, int buckets);
int BucketOf(const SearchSpace& space, int layer, Cost cost, int buckets);

std::int64_t OptionSum(const SearchSpace& space);
// Product of layer sizes; exact decimal and a double approximation.
std::string UniqueModelCountDecimal(const SearchSpace& space);
double UniqueModelCount(const SearchSpace& space);

// Maps a cost-unit band onto ticks, rounding inward.
CostTarget ResolveTarget(const SearchSpace& space, double low, double high);

// Builds an integer-cost space; each row must already be sorted descending.
SearchSpace SpaceFromCosts(const std::vector<std::vector<Cost>>& costs,
                           const std::vector<int>& defaults = {});

// "1-0-2".
std::string FormatChoices(const std::vector<int>& choices);
// Mantissa with one decimal, unpadded exponent: 497462147692736937984 ->
// "5.0e+20".
std::string FormatTwoSignificant(double value);

}  // namespace layernas

#endif  // LAYERNAS_SPACE_H_
