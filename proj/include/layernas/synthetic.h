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

#ifndef LAYERNAS_SYNTHETIC_H_
#define LAYERNAS_SYNTHETIC_H_

#include <cstdint>
#include <span>
#include <vector>

#include "layernas/oracle.h"

namespace layernas {

// Adds values[option_a][option_b] when layer_a and layer_b take those options.
struct PairwiseCoupling {
  int layer_a = 0;
  int layer_b = 0;
  std::vector<std::vector<double>> values;
};

struct SyntheticOracleSpec {
  // quality[layer][option]; accuracy is the clamped sum over layers.
  std::vector<std::vector<double>> quality;
  std::vector<PairwiseCoupling> coupling;
  double noise_sigma = 0.0;
  // Optional per-option noise; an architecture's sigma is the largest over
  // its chosen options. Empty means noise_sigma everywhere.
  std::vector<std::vector<double>> noise_sigma_by_option;
  double train_seconds_per_eval = 1.0;
};

// Decomposable quality plus deterministic Gaussian noise keyed by
// (architecture, seed). With zero noise and no coupling the optimal
// architecture at a cost is always an extension of an optimal prefix.
class SyntheticOracle : public EvalOracle {
 public:
  SyntheticOracle(SearchSpace space, SyntheticOracleSpec spec);

  const SearchSpace& space() const override { return space_; }
  EvalResult Evaluate(const EvalRequest& request) const override;

  const SyntheticOracleSpec& spec() const { return spec_; }
  // Noise-free accuracy before clamping.
  double MeanQuality(const Architecture& arch) const;
  double NoiseSigma(const Architecture& arch) const;

 private:
  SearchSpace space_;
  SyntheticOracleSpec spec_;
};

void ValidateSyntheticSpec(const SearchSpace& space, const SyntheticOracleSpec& spec);

// Counter-based randomness: a 64-bit key from (seed, choices), then a
// standard normal from the key. Same inputs give the same draw everywhere.
std::uint64_t HashChoices(std::uint64_t seed, std::span<const int> choices);
double StandardNormalFromKey(std::uint64_t key);

// Quality for a size/compression search: within each layer, quality rises
// with option cost with diminishing returns, and layers get random weights.
// The all-max architecture scores about 0.9, the all-min about 0.4.
SyntheticOracleSpec GenerateSizeSearchQuality(const SearchSpace& space,
                                              std::uint64_t seed,
                                              double noise_sigma,
                                              double train_seconds_per_eval);

// Integer-cost space with `num_options` widths per layer and a random
// per-layer cost multiplier; defaults are the widest option.
SearchSpace GenerateSizeSearchSpace(int num_layers, int num_options,
                                    std::uint64_t seed);

}  // namespace layernas

#endif  // LAYERNAS_SYNTHETIC_H_
