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

#include "layernas/synthetic.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "layernas/error.h"

namespace layernas {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Uniform in (0, 1].
double UnitFromBits(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

std::uint64_t HashChoices(std::uint64_t seed, std::span<const int> choices) {
  std::uint64_t h = SplitMix64(seed ^ 0x6c61796572736e61ull);
  for (int c : choices) {
    h = SplitMix64(h ^ static_cast<std::uint64_t>(c + 1));
  }
  return SplitMix64(h ^ choices.size());
}

double StandardNormalFromKey(std::uint64_t key) {
  const double u1 = UnitFromBits(SplitMix64(key));
  const double u2 = UnitFromBits(SplitMix64(key ^ 0xd1b54a32d192ed03ull));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void ValidateSyntheticSpec(const SearchSpace& space, const SyntheticOracleSpec& spec) {
  auto fail = [](const std::string& m) {
    throw Error(ErrorCode::kInvalidArgument, "synthetic oracle: " + m);
  };
  if (spec.quality.size() != space.layers.size()) fail("quality has wrong layer count");
  for (std::size_t i = 0; i < spec.quality.size(); ++i) {
    if (static_cast<int>(spec.quality[i].size()) != space.layers[i].size()) {
      fail("quality row " + std::to_string(i) + " has wrong option count");
    }
  }
  if (!(spec.noise_sigma >= 0.0)) fail("noise_sigma must be >= 0");
  if (!(spec.train_seconds_per_eval >= 0.0)) fail("train_seconds_per_eval must be >= 0");
  if (!spec.noise_sigma_by_option.empty()) {
    if (spec.noise_sigma_by_option.size() != space.layers.size()) {
      fail("noise_sigma_by_option has wrong layer count");
    }
    for (std::size_t i = 0; i < spec.noise_sigma_by_option.size(); ++i) {
      const auto& row = spec.noise_sigma_by_option[i];
      if (static_cast<int>(row.size()) != space.layers[i].size()) {
        fail("noise_sigma_by_option row " + std::to_string(i) + " has wrong size");
      }
      for (double s : row) {
        if (!(s >= 0.0)) fail("noise sigmas must be >= 0");
      }
    }
  }
  for (const auto& c : spec.coupling) {
    if (c.layer_a < 0 || c.layer_b < 0 || c.layer_a >= space.num_layers() ||
        c.layer_b >= space.num_layers() || c.layer_a == c.layer_b) {
      fail("coupling layers invalid");
    }
    if (static_cast<int>(c.values.size()) != space.layers[c.layer_a].size()) {
      fail("coupling rows must match layer_a options");
    }
    for (const auto& row : c.values) {
      if (static_cast<int>(row.size()) != space.layers[c.layer_b].size()) {
        fail("coupling columns must match layer_b options");
      }
    }
  }
}

SyntheticOracle::SyntheticOracle(SearchSpace space, SyntheticOracleSpec spec)
    : space_(std::move(space)), spec_(std::move(spec)) {
  ValidateSyntheticSpec(space_, spec_);
}

double SyntheticOracle::MeanQuality(const Architecture& arch) const {
  double sum = 0.0;
  for (int i = 0; i < arch.size(); ++i) sum += spec_.quality[i][arch.choices[i]];
  for (const auto& c : spec_.coupling) {
    sum += c.values[arch.choices[c.layer_a]][arch.choices[c.layer_b]];
  }
  return sum;
}

double SyntheticOracle::NoiseSigma(const Architecture& arch) const {
  if (spec_.noise_sigma_by_option.empty()) return spec_.noise_sigma;
  double sigma = 0.0;
  for (int i = 0; i < arch.size(); ++i) {
    sigma = std::max(sigma, spec_.noise_sigma_by_option[i][arch.choices[i]]);
  }
  return sigma;
}

EvalResult SyntheticOracle::Evaluate(const EvalRequest& request) const {
  if (request.epoch_budget < 1) {
    throw Error(ErrorCode::kInvalidArgument, "epoch_budget must be >= 1");
  }
  CheckArchitecture(space_, request.arch);
  double value = MeanQuality(request.arch);
  const double sigma = NoiseSigma(request.arch);
  if (sigma > 0.0) {
    value += sigma * StandardNormalFromKey(HashChoices(request.seed, request.arch.choices));
  }
  EvalResult result;
  result.validation_accuracy = std::clamp(value, 0.0, 1.0);
  result.train_seconds = spec_.train_seconds_per_eval;
  result.cost_metrics[space_.cost_unit.empty() ? "cost" : space_.cost_unit] =
      space_.ToUnits(ArchitectureCost(space_, request.arch));
  return result;
}

SyntheticOracleSpec GenerateSizeSearchQuality(const SearchSpace& space,
                                              std::uint64_t seed,
                                              double noise_sigma,
                                              double train_seconds_per_eval) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  std::uniform_real_distribution<double> sharpness(1.5, 5.0);
  constexpr double kFloor = 0.4;
  constexpr double kSpan = 0.5;

  SyntheticOracleSpec spec;
  spec.noise_sigma = noise_sigma;
  spec.train_seconds_per_eval = train_seconds_per_eval;
  double total = 0.0;
  for (const auto& layer : space.layers) {
    const double w = weight(rng);
    const double k = sharpness(rng);
    const double lo = static_cast<double>(layer.min_cost());
    const double hi = static_cast<double>(layer.max_cost());
    std::vector<double> row;
    for (const auto& opt : layer.options) {
      const double r = hi > lo ? (static_cast<double>(opt.cost) - lo) / (hi - lo) : 1.0;
      row.push_back(w * (1.0 - std::exp(-k * r)) / (1.0 - std::exp(-k)));
    }
    total += w;
    spec.quality.push_back(std::move(row));
  }
  for (auto& row : spec.quality) {
    for (double& q : row) q *= kSpan / total;
  }
  for (double& q : spec.quality.front()) q += kFloor;
  return spec;
}

SearchSpace GenerateSizeSearchSpace(int num_layers, int num_options,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> multiplier(2, 9);
  std::vector<std::vector<Cost>> costs;
  for (int i = 0; i < num_layers; ++i) {
    const int m = multiplier(rng);
    std::vector<Cost> row;
    for (int j = 0; j < num_options; ++j) row.push_back(static_cast<Cost>(m) * (num_options - j));
    costs.push_back(std::move(row));
  }
  SearchSpace space = SpaceFromCosts(costs);
  space.name = "size_search_" + std::to_string(num_layers) + "x" +
               std::to_string(num_options) + "_s" + std::to_string(seed);
  space.cost_unit = "width_units";
  for (auto& layer : space.layers) {
    for (int j = 0; j < layer.size(); ++j) {
      layer.options[j].label = "w" + std::to_string(num_options - j);
      layer.options[j].payload = {{"width", num_options - j}};
    }
  }
  return space;
}

}  // namespace layernas
