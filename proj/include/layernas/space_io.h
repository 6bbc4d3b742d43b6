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

#ifndef LAYERNAS_SPACE_IO_H_
#define LAYERNAS_SPACE_IO_H_

#include <filesystem>

#include "json.hpp"
#include "layernas/space.h"

namespace layernas {

// Space-definition JSON:
//   {name, cost_unit, mode?, cost_resolution?, expected_unique_models?,
//    expected_option_sum?, declared_max_cost?,
//    layers: [{name?, default, options: [{label, cost, payload?}]}]}
//
// Integer costs are kept as ticks of 1. Fractional costs are scaled to ticks
// of `cost_resolution` (default 1e-6 of the all-max architecture cost).
// The parsed space is validated before it is returned.
SearchSpace ParseSpace(const nlohmann::json& doc);
SearchSpace LoadSpace(const std::filesystem::path& path);

nlohmann::json SpaceToJson(const SearchSpace& space);

}  // namespace layernas

#endif  // LAYERNAS_SPACE_IO_H_
