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

#ifndef LAYERNAS_ORACLE_H_
#define LAYERNAS_ORACLE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "layernas/space.h"

namespace layernas {

struct EvalRequest {
  Architecture arch;
  // Proxy-training depth in epochs; must be >= 1.
  int epoch_budget = 1;
  std::uint64_t seed = 0;
};

struct EvalResult {
  double validation_accuracy = 0.0;
  std::optional<double> test_accuracy;
  // Training time consumed; charged against search budgets.
  double train_seconds = 0.0;
  std::map<std::string, double> cost_metrics;
};

// Accuracy(.) for one search space. Implementations are immutable after
// construction and Evaluate is safe to call concurrently.
class EvalOracle {
 public:
  virtual ~EvalOracle() = default;

  virtual const SearchSpace& space() const = 0;
  virtual EvalResult Evaluate(const EvalRequest& request) const = 0;
};

}  // namespace layernas

#endif  // LAYERNAS_ORACLE_H_
