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

#ifndef LAYERNAS_TABULAR_H_
#define LAYERNAS_TABULAR_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "layernas/oracle.h"

namespace layernas {

struct TabularRow {
  std::map<int, double> validation_accuracy;  // epoch -> accuracy
  std::map<int, double> test_accuracy;
  std::map<int, double> train_seconds;
  std::map<std::string, double> cost_metrics;
};

// Precomputed benchmark answering Evaluate by lookup. Tabular JSON:
//   {space_name, metrics: [...], rows: [{choices: [...],
//    val_acc: {"epoch": acc}, test_acc: {...}, train_seconds: {...},
//    cost: {metric: value}}]}
class TabularBenchmark : public EvalOracle {
 public:
  TabularBenchmark(SearchSpace space, std::map<Architecture, TabularRow> rows);

  const SearchSpace& space() const override { return space_; }

  // Validation accuracy and train seconds at request.epoch_budget exactly;
  // test accuracy at that epoch when stored, otherwise at the last epoch.
  // Throws kMissingRow or kBudgetEpochUnavailable.
  EvalResult Evaluate(const EvalRequest& request) const override;

  std::size_t num_rows() const { return rows_.size(); }
  const std::map<Architecture, TabularRow>& rows() const { return rows_; }

 private:
  SearchSpace space_;
  std::map<Architecture, TabularRow> rows_;
};

// Throws kParseError for malformed documents and kArchMismatch for rows that
// do not fit `space`.
TabularBenchmark ParseTabular(const nlohmann::json& doc, const SearchSpace& space);
TabularBenchmark LoadTabular(const std::filesystem::path& path,
                             const SearchSpace& space);

}  // namespace layernas

#endif  // LAYERNAS_TABULAR_H_
