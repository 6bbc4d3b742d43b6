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

#include "layernas/error.h"

namespace layernas {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyLayer: return "EmptyLayer";
    case ErrorCode::kBadDefaultIndex: return "BadDefaultIndex";
    case ErrorCode::kUnsortedCosts: return "UnsortedCosts";
    case ErrorCode::kNegativeCost: return "NegativeCost";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kDepthOutOfRange: return "DepthOutOfRange";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kCostOutOfRange: return "CostOutOfRange";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kArchMismatch: return "ArchMismatch";
    case ErrorCode::kMissingRow: return "MissingRow";
    case ErrorCode::kBudgetEpochUnavailable: return "BudgetEpochUnavailable";
    case ErrorCode::kSpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::kNoFeasibleArchitecture: return "NoFeasibleArchitecture";
    case ErrorCode::kInfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::kNoAvailableCandidates: return "NoAvailableCandidates";
    case ErrorCode::kNonPositiveCost: return "NonPositiveCost";
    case ErrorCode::kDegenerateDistribution: return "DegenerateDistribution";
    case ErrorCode::kEmptyBundle: return "EmptyBundle";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string detail)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace layernas
