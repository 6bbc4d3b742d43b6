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

#ifndef LAYERNAS_EXPERIMENT_H_
#define LAYERNAS_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "layernas/analysis.h"
#include "layernas/baselines.h"
#include "layernas/engine.h"
#include "layernas/oracle.h"
#include "layernas/synthetic.h"

namespace layernas {

enum class AlgorithmKind { kLayerNas, kLayerNasDp, kRandom, kRegularizedEvolution };

std::string AlgorithmName(AlgorithmKind kind);

// Experiment config JSON. Paths are relative to the config file's directory.
//
//   {
//     "space_file": "../data/spaces/nats_sss.json",
//     "oracle": {"tabular": "nats_sss_tabular.json"}
//            |  {"synthetic": {"quality": [[...]], "coupling": [...],
//                              "noise_sigma": 0.001,
//                              "noise_sigma_by_option": [[...]],
//                              "train_seconds_per_eval": 1.0}}
//            |  {"synthetic": {"generator": {"kind": "size_search", "seed": 7},
//                              "noise_sigma": 0.001,
//                              "train_seconds_per_eval": 1.0}},
//     "algorithm": {"layernas": {"buckets": 100, "replicas": 3,
//                                "selections_per_layer": 100,
//                                "options_per_selection": 8,
//                                "pass_mode": "cyclic", "max_passes": 2,
//                                "mode": "cost_bucket", "allow_reeval": false}}
//               |  {"layernas_dp": {}} | {"random": {}}
//               |  {"regularized_evolution": {"population_size": 50,
//                                             "tournament_size": 10,
//                                             "mnas_exponent": -0.07,
//                                             "mnas_target": 123.0}},
//     "cost_metric": "channels",
//     "target": {"low": 0, "high": 160} | {"fraction_of_max": 0.5},
//     "epoch_budget": 1,
//     "total_train_seconds_budget": 2000,
//     "max_trials": 5000,            (optional)
//     "seeds": [1, 2, 3],
//     "output_dir": "out/nats_layernas"
//   }
struct ExperimentConfig {
  nlohmann::json raw;
  std::filesystem::path base_dir;

  std::filesystem::path space_file;
  SearchSpace space;

  std::optional<std::filesystem::path> tabular_file;
  std::optional<SyntheticOracleSpec> synthetic;

  AlgorithmKind algorithm = AlgorithmKind::kLayerNas;
  LayerNasConfig layernas;
  RegularizedEvolutionConfig evolution;
  std::optional<MnasObjectiveSpec> objective;

  std::string cost_metric;
  // Cost units, resolved against the space.
  double target_low = 0.0;
  double target_high = 0.0;
  int epoch_budget = 1;
  double total_train_seconds_budget = 0.0;
  std::optional<std::int64_t> max_trials;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path output_dir;
};

// Schema, space invariants, oracle/space compatibility and budget checks.
// Throws kConfigError whose detail() is a JSON pointer to the bad field.
ExperimentConfig ParseExperimentConfig(const nlohmann::json& doc,
                                       const std::filesystem::path& base_dir);
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);

// Re-runs the checks of ParseExperimentConfig, including loading the oracle.
void ValidateConfig(const ExperimentConfig& config);

std::unique_ptr<EvalOracle> BuildOracle(const ExperimentConfig& config);

// One search with `seed` under the config's budget.
SearchResult RunOne(const EvalOracle& oracle, const ExperimentConfig& config,
                    std::uint64_t seed);

// cumulative_train_seconds,trial_index,layer,choices,cost,validation_accuracy,
// feasible,best_so_far_validation
std::string TrajectoryCsv(const SearchSpace& space, const SearchResult& result);

struct ExperimentOutput {
  std::filesystem::path manifest;
  std::vector<std::filesystem::path> trajectories;
  std::filesystem::path summary;
};

// Runs every seed concurrently and writes trajectory_seed<N>.csv,
// summary.csv and manifest.json into config.output_dir. Files are written
// atomically; on failure the files of this run are removed.
ExperimentOutput RunExperiment(const ExperimentConfig& config);

// Rebuilds the summary table from the trajectory files and manifest in `dir`.
std::vector<SummaryRow> AnalyzeDirectory(const std::filesystem::path& dir);

}  // namespace layernas

#endif  // LAYERNAS_EXPERIMENT_H_
