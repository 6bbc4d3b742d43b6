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

#include "layernas/space_io.h"

#include <cmath>
#include <fstream>

#include "layernas/error.h"

namespace layernas {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& message, const std::string& pointer) {
  throw Error(ErrorCode::kParseError, message + " at " + pointer, pointer);
}

const json& Require(const json& obj, const char* key, const std::string& at) {
  if (!obj.is_object() || !obj.contains(key)) {
    Fail(std::string("missing field '") + key + "'", at + "/" + key);
  }
  return obj.at(key);
}

}  // namespace

SearchSpace ParseSpace(const json& doc) {
  if (!doc.is_object()) Fail("space document must be an object", "");
  SearchSpace space;
  space.name = doc.value("name", "");
  space.cost_unit = doc.value("cost_unit", "");
  const std::string mode = doc.value("mode", "cost_bucket");
  if (mode == "cost_bucket") {
    space.mode = SpaceMode::kCostBucket;
  } else if (mode == "unique_id") {
    space.mode = SpaceMode::kUniqueId;
  } else {
    Fail("unknown mode '" + mode + "'", "/mode");
  }
  if (doc.contains("expected_unique_models")) {
    const json& v = doc["expected_unique_models"];
    if (v.is_string()) {
      space.expected_unique_models = v.get<std::string>();
    } else if (v.is_number_unsigned() || v.is_number_integer()) {
      space.expected_unique_models = std::to_string(v.get<std::uint64_t>());
    } else {
      Fail("expected_unique_models must be an integer or decimal string",
           "/expected_unique_models");
    }
  }
  if (doc.contains("expected_option_sum")) {
    space.expected_option_sum = doc["expected_option_sum"].get<std::int64_t>();
  }
  if (doc.contains("declared_max_cost")) {
    space.declared_max_cost = doc["declared_max_cost"].get<double>();
  }

  const json& layers = Require(doc, "layers", "");
  if (!layers.is_array()) Fail("layers must be an array", "/layers");

  // First pass: raw costs, to decide on the tick resolution.
  bool all_integer = true;
  double max_total = 0.0;
  std::vector<std::vector<double>> raw(layers.size());
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const std::string at = "/layers/" + std::to_string(i);
    const json& options = Require(layers[i], "options", at);
    if (!options.is_array()) Fail("options must be an array", at + "/options");
    double layer_max = 0.0;
    for (std::size_t j = 0; j < options.size(); ++j) {
      const json& cost =
          Require(options[j], "cost", at + "/options/" + std::to_string(j));
      if (!cost.is_number()) {
        Fail("cost must be a number", at + "/options/" + std::to_string(j) + "/cost");
      }
      const double c = cost.get<double>();
      all_integer = all_integer && cost.is_number_integer();
      raw[i].push_back(c);
      layer_max = std::max(layer_max, c);
    }
    max_total += layer_max;
  }
  if (doc.contains("cost_resolution")) {
    space.cost_resolution = doc["cost_resolution"].get<double>();
    if (!(space.cost_resolution > 0)) {
      Fail("cost_resolution must be positive", "/cost_resolution");
    }
  } else if (!all_integer) {
    space.cost_resolution = max_total > 0 ? max_total * 1e-6 : 1e-6;
  }

  for (std::size_t i = 0; i < layers.size(); ++i) {
    const std::string at = "/layers/" + std::to_string(i);
    const json& src = layers[i];
    LayerSpec layer;
    layer.name = src.value("name", "");
    layer.default_index = src.value("default", 0);
    const json& options = src["options"];
    for (std::size_t j = 0; j < options.size(); ++j) {
      OptionSpec opt;
      opt.label = options[j].value("label", std::to_string(j));
      opt.cost = static_cast<Cost>(std::llround(raw[i][j] / space.cost_resolution));
      if (options[j].contains("payload")) opt.payload = options[j]["payload"];
      layer.options.push_back(std::move(opt));
    }
    space.layers.push_back(std::move(layer));
  }
  ValidateSpace(space);
  return space;
}

SearchSpace LoadSpace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open space file " + path.string(),
                path.string());
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError,
                "invalid JSON in " + path.string() + ": " + e.what(), "");
  }
  return ParseSpace(doc);
}

json SpaceToJson(const SearchSpace& space) {
  json doc;
  doc["name"] = space.name;
  doc["cost_unit"] = space.cost_unit;
  doc["mode"] = space.mode == SpaceMode::kCostBucket ? "cost_bucket" : "unique_id";
  doc["cost_resolution"] = space.cost_resolution;
  doc["layers"] = json::array();
  for (const auto& layer : space.layers) {
    json l;
    if (!layer.name.empty()) l["name"] = layer.name;
    l["default"] = layer.default_index;
    l["options"] = json::array();
    for (const auto& opt : layer.options) {
      l["options"].push_back(
          {{"label", opt.label}, {"cost", space.ToUnits(opt.cost)}, {"payload", opt.payload}});
    }
    doc["layers"].push_back(std::move(l));
  }
  return doc;
}

}  // namespace layernas
