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

#include "layernas/space.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "layernas/error.h"

namespace layernas {
namespace {

std::string LayerLabel(const SearchSpace& space, int i) {
  std::string label = "layer " + std::to_string(i);
  if (!space.layers[i].name.empty()) label += " (" + space.layers[i].name + ")";
  return label;
}

// Little-endian base-1e9 limbs.
void MultiplyLimbs(std::vector<std::uint32_t>& limbs, std::uint32_t factor) {
  std::uint64_t carry = 0;
  for (auto& limb : limbs) {
    std::uint64_t v = static_cast<std::uint64_t>(limb) * factor + carry;
    limb = static_cast<std::uint32_t>(v % 1000000000u);
    carry = v / 1000000000u;
  }
  while (carry > 0) {
    limbs.push_back(static_cast<std::uint32_t>(carry % 1000000000u));
    carry /= 1000000000u;
  }
}

}  // namespace

Prefix Prefix::Extend(int option) const {
  Prefix next = *this;
  next.choices.push_back(option);
  return next;
}

void ValidateSpace(const SearchSpace& space) {
  if (space.layers.empty()) {
    throw Error(ErrorCode::kEmptyLayer, "search space has no layers", "");
  }
  for (int i = 0; i < space.num_layers(); ++i) {
    const LayerSpec& layer = space.layers[i];
    const std::string where = LayerLabel(space, i);
    if (layer.options.empty()) {
      throw Error(ErrorCode::kEmptyLayer, where + " has no options", where);
    }
    if (layer.default_index < 0 || layer.default_index >= layer.size()) {
      throw Error(ErrorCode::kBadDefaultIndex,
                  where + " default index " +
                      std::to_string(layer.default_index) + " out of range",
                  where);
    }
    std::set<std::string> labels;
    for (int j = 0; j < layer.size(); ++j) {
      const OptionSpec& opt = layer.options[j];
      if (opt.cost < 0) {
        throw Error(ErrorCode::kNegativeCost,
                    where + " option " + std::to_string(j) + " has negative cost",
                    where);
      }
      if (j > 0 && opt.cost > layer.options[j - 1].cost) {
        throw Error(ErrorCode::kUnsortedCosts,
                    where + " options are not sorted by non-increasing cost",
                    where);
      }
      if (!labels.insert(opt.label).second) {
        throw Error(ErrorCode::kDuplicateLabel,
                    where + " repeats option label '" + opt.label + "'", where);
      }
    }
  }
  if (space.expected_unique_models &&
      *space.expected_unique_models != UniqueModelCountDecimal(space)) {
    throw Error(ErrorCode::kCountMismatch,
                "declared unique-model count " + *space.expected_unique_models +
                    " != " + UniqueModelCountDecimal(space),
                "expected_unique_models");
  }
  if (space.declared_max_cost) {
    const double actual = space.ToUnits(ArchitectureCost(space, MaxCostArchitecture(space)));
    const double declared = *space.declared_max_cost;
    if (std::abs(actual - declared) > 1e-9 * std::max(1.0, std::abs(declared)) +
                                          space.cost_resolution / 2) {
      throw Error(ErrorCode::kCountMismatch,
                  "declared max cost " + std::to_string(declared) + " != " +
                      std::to_string(actual),
                  "declared_max_cost");
    }
  }
  if (space.expected_option_sum && *space.expected_option_sum != OptionSum(space)) {
    throw Error(ErrorCode::kCountMismatch,
                "declared option sum " + std::to_string(*space.expected_option_sum) +
                    " != " + std::to_string(OptionSum(space)),
                "expected_option_sum");
  }
}

void CheckArchitecture(const SearchSpace& space, const Architecture& arch) {
  if (arch.size() != space.num_layers()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "architecture has " + std::to_string(arch.size()) +
                    " choices for a " + std::to_string(space.num_layers()) +
                    "-layer space");
  }
  for (int i = 0; i < arch.size(); ++i) {
    if (arch.choices[i] < 0 || arch.choices[i] >= space.layers[i].size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "choice " + std::to_string(arch.choices[i]) + " invalid for " +
                      LayerLabel(space, i),
                  LayerLabel(space, i));
    }
  }
}

void CheckPrefix(const SearchSpace& space, const Prefix& prefix) {
  if (prefix.depth() > space.num_layers()) {
    throw Error(ErrorCode::kDepthOutOfRange,
                "prefix depth " + std::to_string(prefix.depth()) +
                    " exceeds " + std::to_string(space.num_layers()) + " layers");
  }
  for (int i = 0; i < prefix.depth(); ++i) {
    if (prefix.choices[i] < 0 || prefix.choices[i] >= space.layers[i].size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "choice " + std::to_string(prefix.choices[i]) +
                      " invalid for " + LayerLabel(space, i),
                  LayerLabel(space, i));
    }
  }
}

Architecture CompleteWithDefaults(const SearchSpace& space,
                                  const Prefix& prefix) {
  CheckPrefix(space, prefix);
  Architecture arch{prefix.choices};
  for (int i = prefix.depth(); i < space.num_layers(); ++i) {
    arch.choices.push_back(space.layers[i].default_index);
  }
  return arch;
}

Architecture DefaultArchitecture(const SearchSpace& space) {
  return CompleteWithDefaults(space, Prefix{});
}

Architecture MaxCostArchitecture(const SearchSpace& space) {
  return Architecture{std::vector<int>(space.layers.size(), 0)};
}

Architecture MinCostArchitecture(const SearchSpace& space) {
  Architecture arch;
  for (const auto& layer : space.layers) arch.choices.push_back(layer.size() - 1);
  return arch;
}

Cost ArchitectureCost(const SearchSpace& space, const Architecture& arch) {
  CheckArchitecture(space, arch);
  Cost total = 0;
  for (int i = 0; i < arch.size(); ++i) {
    total += space.layers[i].options[arch.choices[i]].cost;
  }
  return total;
}

Cost PrefixCost(const SearchSpace& space, const Prefix& prefix) {
  CheckPrefix(space, prefix);
  Cost total = 0;
  for (int i = 0; i < prefix.depth(); ++i) {
    total += space.layers[i].options[prefix.choices[i]].cost;
  }
  return total;
}

CostInterval CostCompletionInterval(const SearchSpace& space,
                                    const Prefix& prefix) {
  const Cost fixed = PrefixCost(space, prefix);
  CostInterval interval{fixed, fixed};
  for (int i = prefix.depth(); i < space.num_layers(); ++i) {
    interval.min += space.layers[i].min_cost();
    interval.max += space.layers[i].max_cost();
  }
  return interval;
}

CostInterval LayerCostRange(const SearchSpace& space, int layer) {
  if (layer < 0 || layer >= space.num_layers()) {
    throw Error(ErrorCode::kDepthOutOfRange,
                "layer " + std::to_string(layer) + " out of range");
  }
  CostInterval range;
  for (int i = 0; i < space.num_layers(); ++i) {
    const LayerSpec& l = space.layers[i];
    range.min += i <= layer ? l.min_cost() : l.default_cost();
    range.max += i <= layer ? l.max_cost() : l.default_cost();
  }
  return range;
}

int BucketIndex(Cost min, Cost max, Cost cost, int buckets) {
  if (buckets < 1) {
    throw Error(ErrorCode::kInvalidArgument, "bucket count must be >= 1");
  }
  if (max < min) {
    throw Error(ErrorCode::kInvalidArgument, "cost range max < min");
  }
  const Cost magnitude = std::max(std::abs(min), std::abs(max));
  const Cost tolerance = static_cast<Cost>(1e-9 * static_cast<double>(magnitude));
  if (cost < min - tolerance || cost > max + tolerance) {
    throw Error(ErrorCode::kCostOutOfRange,
                "cost " + std::to_string(cost) + " outside [" +
                    std::to_string(min) + ", " + std::to_string(max) + "]");
  }
  if (max == min) return 0;
  const __int128 offset = static_cast<__int128>(std::clamp(cost, min, max) - min);
  const __int128 index = offset * buckets / (max - min);
  return static_cast<int>(std::min<__int128>(index, buckets - 1));
}

int BucketOf(const SearchSpace& space, int layer, Cost cost, int buckets) {
  const CostInterval range = LayerCostRange(space, layer);
  return BucketIndex(range.min, range.max, cost, buckets);
}

std::int64_t OptionSum(const SearchSpace& space) {
  std::int64_t sum = 0;
  for (const auto& layer : space.layers) sum += layer.size();
  return sum;
}

std::string UniqueModelCountDecimal(const SearchSpace& space) {
  std::vector<std::uint32_t> limbs{1};
  for (const auto& layer : space.layers) {
    MultiplyLimbs(limbs, static_cast<std::uint32_t>(layer.size()));
  }
  std::string out = std::to_string(limbs.back());
  char buf[16];
  for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
    std::snprintf(buf, sizeof(buf), "%09u", *it);
    out += buf;
  }
  return out;
}

double UniqueModelCount(const SearchSpace& space) {
  double count = 1.0;
  for (const auto& layer : space.layers) count *= layer.size();
  return count;
}

CostTarget ResolveTarget(const SearchSpace& space, double low, double high) {
  if (low > high) {
    throw Error(ErrorCode::kInvalidArgument, "target low exceeds target high");
  }
  constexpr double kSlack = 1e-9;
  constexpr double kHuge = 4e18;
  const double lo = std::ceil(low / space.cost_resolution - kSlack);
  const double hi = std::floor(high / space.cost_resolution + kSlack);
  return CostTarget{static_cast<Cost>(std::clamp(lo, -kHuge, kHuge)),
                    static_cast<Cost>(std::clamp(hi, -kHuge, kHuge))};
}

SearchSpace SpaceFromCosts(const std::vector<std::vector<Cost>>& costs,
                           const std::vector<int>& defaults) {
  SearchSpace space;
  space.name = "inline";
  space.cost_unit = "units";
  for (std::size_t i = 0; i < costs.size(); ++i) {
    LayerSpec layer;
    layer.name = "l" + std::to_string(i);
    for (std::size_t j = 0; j < costs[i].size(); ++j) {
      layer.options.push_back(OptionSpec{"o" + std::to_string(j), costs[i][j], {}});
    }
    layer.default_index = i < defaults.size() ? defaults[i] : 0;
    space.layers.push_back(std::move(layer));
  }
  return space;
}

std::string FormatChoices(const std::vector<int>& choices) {
  std::string out;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(choices[i]);
  }
  return out;
}

std::string FormatTwoSignificant(double value) {
  if (value == 0.0) return "0.0e+0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1e", value);
  // buf looks like "5.0e+20" or "1.2e+05"; drop exponent zero padding.
  std::string s(buf);
  const auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  const char sign = s[e + 1];
  const int exponent = std::stoi(s.substr(e + 2));
  return mantissa + "e" + sign + std::to_string(exponent);
}

}  // namespace layernas
