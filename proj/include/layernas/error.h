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

#ifndef LAYERNAS_ERROR_H_
#define LAYERNAS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace layernas {

enum class ErrorCode {
  kEmptyLayer,
  kBadDefaultIndex,
  kUnsortedCosts,
  kNegativeCost,
  kDuplicateLabel,
  kCountMismatch,
  kDepthOutOfRange,
  kIndexOutOfRange,
  kCostOutOfRange,
  kParseError,
  kArchMismatch,
  kMissingRow,
  kBudgetEpochUnavailable,
  kSpaceTooLarge,
  kNoFeasibleArchitecture,
  kInfeasibleTarget,
  kNoAvailableCandidates,
  kNonPositiveCost,
  kDegenerateDistribution,
  kEmptyBundle,
  kConfigError,
  kInvalidArgument,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `detail` carries the machine-readable
// locator: the offending layer for space errors, a JSON pointer for config
// errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = "");

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace layernas

#endif  // LAYERNAS_ERROR_H_
