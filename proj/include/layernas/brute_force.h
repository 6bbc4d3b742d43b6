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

#ifndef LAYERNAS_BRUTE_FORCE_H_
#define LAYERNAS_BRUTE_FORCE_H_

#include <cstdint>

#include "layernas/oracle.h"

namespace layernas {

struct BruteForceResult {
  Architecture arch;
  Cost cost = 0;
  EvalResult result;
  std::int64_t enumerated = 0;
};

inline constexpr double kDefaultEnumerationCap = 1e6;

// Exhaustive argmax of validation accuracy over architectures whose cost lies
// in `target`. Ties go to lower cost, then lexicographically smaller choices.
// Throws kSpaceTooLarge or kNoFeasibleArchitecture.
BruteForceResult BruteForceOptimum(const EvalOracle& oracle,
                                   const CostTarget& target, int epoch_budget,
                                   std::uint64_t seed = 0,
                                   double enumeration_cap = kDefaultEnumerationCap);

// Calls visit(arch) for every architecture in odometer order (last layer
// fastest).
template <typename Visitor>
void ForEachArchitecture(const SearchSpace& space, Visitor&& visit) {
  Architecture arch{std::vector<int>(space.layers.size(), 0)};
  while (true) {
    visit(static_cast<const Architecture&>(arch));
    int i = space.num_layers() - 1;
    while (i >= 0 && ++arch.choices[i] == space.layers[i].size()) {
      arch.choices[i] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

}  // namespace layernas

#endif  // LAYERNAS_BRUTE_FORCE_H_
