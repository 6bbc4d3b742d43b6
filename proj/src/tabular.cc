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

#include "layernas/tabular.h"

#include <fstream>

#include "layernas/error.h"

namespace layernas {
namespace {

using nlohmann::json;

std::map<int, double> ParseCurve(const json& row, const char* key,
                                 const std::string& at, bool required) {
  std::map<int, double> curve;
  if (!row.contains(key)) {
    if (required) {
      throw Error(ErrorCode::kParseError, std::string("missing ") + key,
                  at + "/" + key);
    }
    return curve;
  }
  const json& obj = row[key];
  if (!obj.is_object()) {
    throw Error(ErrorCode::kParseError, std::string(key) + " must map epoch to value",
                at + "/" + key);
  }
  for (const auto& [epoch, value] : obj.items()) {
    int e = 0;
    try {
      e = std::stoi(epoch);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "epoch key '" + epoch + "' is not an integer",
                  at + "/" + key);
    }
    if (!value.is_number()) {
      throw Error(ErrorCode::kParseError, "curve value must be numeric",
                  at + "/" + key + "/" + epoch);
    }
    curve[e] = value.get<double>();
  }
  if (required && curve.empty()) {
    throw Error(ErrorCode::kParseError, std::string(key) + " is empty", at + "/" + key);
  }
  return curve;
}

void CheckAccuracy(double v, const std::string& at) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kParseError, "accuracy outside [0, 1]", at);
  }
}

}  // namespace

TabularBenchmark::TabularBenchmark(SearchSpace space,
                                   std::map<Architecture, TabularRow> rows)
    : space_(std::move(space)), rows_(std::move(rows)) {}

EvalResult TabularBenchmark::Evaluate(const EvalRequest& request) const {
  if (request.epoch_budget < 1) {
    throw Error(ErrorCode::kInvalidArgument, "epoch_budget must be >= 1");
  }
  const auto it = rows_.find(request.arch);
  if (it == rows_.end()) {
    throw Error(ErrorCode::kMissingRow,
                "no row for architecture " + FormatChoices(request.arch.choices));
  }
  const TabularRow& row = it->second;
  const auto val = row.validation_accuracy.find(request.epoch_budget);
  const auto secs = row.train_seconds.find(request.epoch_budget);
  if (val == row.validation_accuracy.end() || secs == row.train_seconds.end()) {
    throw Error(ErrorCode::kBudgetEpochUnavailable,
                "epoch " + std::to_string(request.epoch_budget) + " not stored for " +
                    FormatChoices(request.arch.choices));
  }
  EvalResult result;
  result.validation_accuracy = val->second;
  result.train_seconds = secs->second;
  if (!row.test_accuracy.empty()) {
    const auto test = row.test_accuracy.find(request.epoch_budget);
    result.test_accuracy =
        test != row.test_accuracy.end() ? test->second : row.test_accuracy.rbegin()->second;
  }
  result.cost_metrics = row.cost_metrics;
  return result;
}

TabularBenchmark ParseTabular(const json& doc, const SearchSpace& space) {
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw Error(ErrorCode::kParseError, "tabular document needs a rows array", "/rows");
  }
  std::map<Architecture, TabularRow> rows;
  const json& src = doc["rows"];
  for (std::size_t r = 0; r < src.size(); ++r) {
    const std::string at = "/rows/" + std::to_string(r);
    const json& row = src[r];
    if (!row.is_object() || !row.contains("choices") || !row["choices"].is_array()) {
      throw Error(ErrorCode::kParseError, "row needs a choices array", at + "/choices");
    }
    Architecture arch{row["choices"].get<std::vector<int>>()};
    try {
      CheckArchitecture(space, arch);
    } catch (const Error& e) {
      throw Error(ErrorCode::kArchMismatch,
                  "row " + std::to_string(r) + " does not fit space '" + space.name +
                      "': " + e.what(),
                  at + "/choices");
    }
    TabularRow parsed;
    parsed.validation_accuracy = ParseCurve(row, "val_acc", at, true);
    parsed.test_accuracy = ParseCurve(row, "test_acc", at, false);
    parsed.train_seconds = ParseCurve(row, "train_seconds", at, true);
    for (const auto& [e, v] : parsed.validation_accuracy) CheckAccuracy(v, at + "/val_acc");
    for (const auto& [e, v] : parsed.test_accuracy) CheckAccuracy(v, at + "/test_acc");
    double previous = 0.0;
    for (const auto& [e, v] : parsed.train_seconds) {
      if (v < 0.0 || v < previous) {
        throw Error(ErrorCode::kParseError,
                    "train_seconds must be non-negative and non-decreasing in epoch",
                    at + "/train_seconds");
      }
      previous = v;
    }
    if (row.contains("cost")) {
      for (const auto& [metric, v] : row["cost"].items()) {
        parsed.cost_metrics[metric] = v.get<double>();
      }
    }
    if (!rows.emplace(std::move(arch), std::move(parsed)).second) {
      throw Error(ErrorCode::kParseError, "duplicate row", at + "/choices");
    }
  }
  return TabularBenchmark(space, std::move(rows));
}

TabularBenchmark LoadTabular(const std::filesystem::path& path,
                             const SearchSpace& space) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open tabular file " + path.string(),
                path.string());
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError,
                "invalid JSON in " + path.string() + ": " + e.what(), "");
  }
  return ParseTabular(doc, space);
}

}  // namespace layernas
