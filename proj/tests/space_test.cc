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

#include "layernas/space.h"

#include <random>

#include "gtest/gtest.h"
#include "layernas/error.h"
#include "layernas/space_io.h"
#include "test_util.h"

namespace layernas {
namespace {

SearchSpace Toy() { return SpaceFromCosts({{3, 1}, {2, 1}}, {0, 0}); }

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(ValidateSpaceTest, AcceptsSortedToy) { EXPECT_NO_THROW(ValidateSpace(Toy())); }

TEST(ValidateSpaceTest, RejectsUnsortedCostsAndNamesLayer) {
  SearchSpace s = SpaceFromCosts({{3, 1}, {1, 3}}, {0, 0});
  try {
    ValidateSpace(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsortedCosts);
    EXPECT_NE(e.detail().find("layer 1"), std::string::npos);
  }
}

TEST(ValidateSpaceTest, RejectsEmptyLayer) {
  SearchSpace s = SpaceFromCosts({{3, 1}, {}}, {0, 0});
  EXPECT_EQ(CodeOf([&] { ValidateSpace(s); }), ErrorCode::kEmptyLayer);
  SearchSpace none;
  EXPECT_EQ(CodeOf([&] { ValidateSpace(none); }), ErrorCode::kEmptyLayer);
}

TEST(ValidateSpaceTest, RejectsBadDefaultNegativeCostDuplicateLabel) {
  EXPECT_EQ(CodeOf([] { ValidateSpace(SpaceFromCosts({{3, 1}}, {2})); }),
            ErrorCode::kBadDefaultIndex);
  EXPECT_EQ(CodeOf([] { ValidateSpace(SpaceFromCosts({{1, -1}}, {0})); }),
            ErrorCode::kNegativeCost);
  SearchSpace dup = Toy();
  dup.layers[0].options[1].label = dup.layers[0].options[0].label;
  EXPECT_EQ(CodeOf([&] { ValidateSpace(dup); }), ErrorCode::kDuplicateLabel);
}

TEST(ValidateSpaceTest, ChecksDeclaredCounts) {
  SearchSpace s = Toy();
  s.expected_unique_models = "4";
  s.expected_option_sum = 4;
  s.declared_max_cost = 5;
  EXPECT_NO_THROW(ValidateSpace(s));
  s.expected_unique_models = "5";
  EXPECT_EQ(CodeOf([&] { ValidateSpace(s); }), ErrorCode::kCountMismatch);
  s.expected_unique_models.reset();
  s.expected_option_sum = 5;
  EXPECT_EQ(CodeOf([&] { ValidateSpace(s); }), ErrorCode::kCountMismatch);
  s.expected_option_sum.reset();
  s.declared_max_cost = 6;
  EXPECT_EQ(CodeOf([&] { ValidateSpace(s); }), ErrorCode::kCountMismatch);
}

TEST(CompleteWithDefaultsTest, Examples) {
  const SearchSpace s = SpaceFromCosts({{5, 4, 3}, {5, 4, 3}, {5, 4, 3}}, {0, 0, 0});
  EXPECT_EQ(CompleteWithDefaults(s, Prefix{{1, 2}}).choices, (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(CompleteWithDefaults(s, Prefix{}).choices, DefaultArchitecture(s).choices);
  EXPECT_EQ(CompleteWithDefaults(s, Prefix{{1, 0, 2}}).choices, (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(CodeOf([&] { CompleteWithDefaults(s, Prefix{{0, 0, 0, 0}}); }),
            ErrorCode::kDepthOutOfRange);
}

TEST(CompleteWithDefaultsTest, UsesNonZeroDefaults) {
  const SearchSpace s = SpaceFromCosts({{5, 4}, {5, 4, 3}, {2, 1}}, {1, 2, 1});
  EXPECT_EQ(CompleteWithDefaults(s, Prefix{{0}}).choices, (std::vector<int>{0, 2, 1}));
}

TEST(ArchitectureCostTest, Examples) {
  const SearchSpace s = Toy();
  EXPECT_EQ(ArchitectureCost(s, Architecture{{0, 0}}), 5);
  EXPECT_EQ(ArchitectureCost(s, Architecture{{1, 1}}), 2);
  EXPECT_EQ(CodeOf([&] { ArchitectureCost(s, Architecture{{2, 0}}); }),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(CodeOf([&] { ArchitectureCost(s, Architecture{{0}}); }),
            ErrorCode::kIndexOutOfRange);
}

TEST(CostCompletionIntervalTest, Examples) {
  const SearchSpace s = Toy();
  EXPECT_EQ(CostCompletionInterval(s, Prefix{}).min, 2);
  EXPECT_EQ(CostCompletionInterval(s, Prefix{}).max, 5);
  EXPECT_EQ(CostCompletionInterval(s, Prefix{{0}}).min, 4);
  EXPECT_EQ(CostCompletionInterval(s, Prefix{{0}}).max, 5);
  const CostInterval full = CostCompletionInterval(s, Prefix{{1, 0}});
  EXPECT_EQ(full.min, 3);
  EXPECT_EQ(full.max, 3);
  EXPECT_EQ(ArchitectureCost(s, Architecture{{1, 0}}), 3);
}

// Extending a prefix only narrows its interval, and the default completion
// always lies inside.
TEST(CostCompletionIntervalTest, MonotoneAndContainsDefaultCompletion) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const SearchSpace s = testing::RandomSpace(rng, 1, 5, 1, 5, 0, 30);
    Prefix p;
    for (int i = 0; i <= s.num_layers(); ++i) {
      const CostInterval outer = CostCompletionInterval(s, p);
      const Cost c = ArchitectureCost(s, CompleteWithDefaults(s, p));
      EXPECT_TRUE(outer.Contains(c));
      if (i == s.num_layers()) break;
      for (int o = 0; o < s.layers[i].size(); ++o) {
        const CostInterval inner = CostCompletionInterval(s, p.Extend(o));
        EXPECT_LE(outer.min, inner.min);
        EXPECT_GE(outer.max, inner.max);
      }
      p = p.Extend(std::uniform_int_distribution<int>(0, s.layers[i].size() - 1)(rng));
    }
  }
}

TEST(BucketIndexTest, Examples) {
  EXPECT_EQ(BucketIndex(10, 20, 15, 100), 50);
  EXPECT_EQ(BucketIndex(10, 20, 20, 100), 99);
  EXPECT_EQ(BucketIndex(10, 20, 10, 100), 0);
  EXPECT_EQ(BucketIndex(7, 7, 7, 100), 0);
  EXPECT_EQ(CodeOf([] { BucketIndex(10, 20, 21, 100); }), ErrorCode::kCostOutOfRange);
  EXPECT_EQ(CodeOf([] { BucketIndex(10, 20, 9, 100); }), ErrorCode::kCostOutOfRange);
  EXPECT_EQ(CodeOf([] { BucketIndex(10, 20, 15, 0); }), ErrorCode::kInvalidArgument);
}

TEST(BucketIndexTest, SingleBucketAlwaysZero) {
  for (Cost c = 0; c <= 9; ++c) EXPECT_EQ(BucketIndex(0, 9, c, 1), 0);
}

TEST(BucketOfTest, UsesSearchedLayersAndDefaultsBeyond) {
  // Layer 0 searched, layer 1 at its default (cost 2): range [3, 5].
  const SearchSpace s = Toy();
  EXPECT_EQ(LayerCostRange(s, 0).min, 3);
  EXPECT_EQ(LayerCostRange(s, 0).max, 5);
  EXPECT_EQ(BucketOf(s, 0, 3, 4), 0);
  EXPECT_EQ(BucketOf(s, 0, 4, 4), 2);
  EXPECT_EQ(BucketOf(s, 0, 5, 4), 3);
  EXPECT_EQ(LayerCostRange(s, 1).min, 2);
  EXPECT_EQ(LayerCostRange(s, 1).max, 5);
}

TEST(CountsTest, UniqueModelsAndOptionSum) {
  const SearchSpace s = SpaceFromCosts({{1, 0}, {2, 1, 0}, {3, 2, 1, 0}}, {});
  EXPECT_EQ(UniqueModelCountDecimal(s), "24");
  EXPECT_DOUBLE_EQ(UniqueModelCount(s), 24.0);
  EXPECT_EQ(OptionSum(s), 9);
}

TEST(CountsTest, DecimalCountBeyond64Bits) {
  // 10^30 from thirty layers of ten options.
  const SearchSpace s =
      SpaceFromCosts(std::vector<std::vector<Cost>>(30, std::vector<Cost>(10, 1)), {});
  EXPECT_EQ(UniqueModelCountDecimal(s), "1" + std::string(30, '0'));
}

TEST(FormatTest, TwoSignificantAndChoices) {
  EXPECT_EQ(FormatTwoSignificant(497462147692736937984.0), "5.0e+20");
  EXPECT_EQ(FormatTwoSignificant(117900), "1.2e+5");
  EXPECT_EQ(FormatTwoSignificant(0.00123), "1.2e-3");
  EXPECT_EQ(FormatChoices({1, 0, 2}), "1-0-2");
  EXPECT_EQ(FormatChoices({}), "");
}

TEST(ResolveTargetTest, RoundsInward) {
  SearchSpace s = Toy();
  s.cost_resolution = 0.5;
  const CostTarget t = ResolveTarget(s, 1.2, 2.7);
  EXPECT_EQ(t.low, 3);   // 1.5
  EXPECT_EQ(t.high, 5);  // 2.5
  const CostTarget open = ResolveTarget(s, 0, std::numeric_limits<double>::infinity());
  EXPECT_TRUE(open.Contains(1'000'000'000));
  EXPECT_EQ(CodeOf([&] { ResolveTarget(s, 3, 2); }), ErrorCode::kInvalidArgument);
}

TEST(SpaceIoTest, ParsesIntegerAndFractionalCosts) {
  const auto doc = nlohmann::json::parse(R"({
    "name": "t", "cost_unit": "mflops",
    "layers": [{"default": 0, "options": [{"label": "a", "cost": 3}, {"label": "b", "cost": 1}]},
               {"default": 1, "options": [{"label": "a", "cost": 2}, {"label": "b", "cost": 1}]}]})");
  const SearchSpace s = ParseSpace(doc);
  EXPECT_EQ(s.num_layers(), 2);
  EXPECT_EQ(s.cost_resolution, 1.0);
  EXPECT_EQ(s.layers[1].default_index, 1);
  EXPECT_EQ(ArchitectureCost(s, MaxCostArchitecture(s)), 5);

  const auto frac = nlohmann::json::parse(R"({
    "name": "f", "cost_unit": "ms", "cost_resolution": 0.25,
    "layers": [{"default": 0, "options": [{"label": "a", "cost": 1.5}, {"label": "b", "cost": 0.25}]}]})");
  const SearchSpace f = ParseSpace(frac);
  EXPECT_EQ(f.layers[0].options[0].cost, 6);
  EXPECT_EQ(f.layers[0].options[1].cost, 1);
  EXPECT_DOUBLE_EQ(f.ToUnits(6), 1.5);

  const SearchSpace round = ParseSpace(SpaceToJson(s));
  EXPECT_EQ(round.layers[0].options[0].cost, 3);
  EXPECT_EQ(round.layers[1].default_index, 1);
}

TEST(SpaceIoTest, SchemaErrorsCarryPointer) {
  try {
    ParseSpace(nlohmann::json::parse(R"({"layers": [{"options": [{"label": "a"}]}]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_EQ(e.detail(), "/layers/0/options/0/cost");
  }
  EXPECT_EQ(CodeOf([] {
              ParseSpace(nlohmann::json::parse(
                  R"({"layers": [{"options": [{"label": "a", "cost": 1}, {"label": "b", "cost": 2}]}]})"));
            }),
            ErrorCode::kUnsortedCosts);
}

TEST(BundledSpacesTest, DeclaredCountsMatch) {
  const SearchSpace m = LoadSpace(LAYERNAS_SOURCE_DIR "/data/spaces/mobilenetv3_small_60m.json");
  EXPECT_EQ(m.num_layers(), 17);
  EXPECT_EQ(OptionSum(m), 393);
  EXPECT_EQ(UniqueModelCountDecimal(m), "497462147692736937984");
  const SearchSpace n = LoadSpace(LAYERNAS_SOURCE_DIR "/data/spaces/nats_sss.json");
  EXPECT_EQ(n.num_layers(), 5);
  EXPECT_EQ(UniqueModelCountDecimal(n), "32768");
  EXPECT_EQ(ArchitectureCost(n, DefaultArchitecture(n)), 320);
}

}  // namespace
}  // namespace layernas
