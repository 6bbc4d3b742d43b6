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

#include "layernas/brute_force.h"

#include <optional>

#include "layernas/error.h"

namespace layernas {

BruteForceResult BruteForceOptimum(const EvalOracle& oracle, const CostTarget& target,
                                   int epoch_budget, std::uint64_t seed,
                                   double enumeration_cap) {
  const SearchSpace& space = oracle.space();
  if (UniqueModelCount(space) > enumeration_cap) {
    throw Error(ErrorCode::kSpaceTooLarge,
                "space has " + UniqueModelCountDecimal(space) +
                    " architectures, above the enumeration cap");
  }
  std::optional<BruteForceResult> best;
  std::int64_t enumerated = 0;
  ForEachArchitecture(space, [&](const Architecture& arch) {
    ++enumerated;
    const Cost cost = ArchitectureCost(space, arch);
    if (!target.Contains(cost)) return;
    EvalResult result = oracle.Evaluate(EvalRequest{arch, epoch_budget, seed});
    const bool better =
        !best || result.validation_accuracy > best->result.validation_accuracy ||
        (result.validation_accuracy == best->result.validation_accuracy &&
         (cost < best->cost || (cost == best->cost && arch < best->arch)));
    if (better) best = BruteForceResult{arch, cost, std::move(result), 0};
  });
  if (!best) {
    throw Error(ErrorCode::kNoFeasibleArchitecture,
                "no architecture has cost in [" + std::to_string(target.low) + ", " +
                    std::to_string(target.high) + "]");
  }
  best->enumerated = enumerated;
  return *best;
}

}  // namespace layernas
