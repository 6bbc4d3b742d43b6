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

// Command-line driver: run, validate and analyze experiments.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "layernas/error.h"
#include "layernas/experiment.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSearch = 3;

int ExitCodeFor(const layernas::Error& e) {
  switch (e.code()) {
    case layernas::ErrorCode::kConfigError:
      return kExitConfig;
    default:
      return kExitSearch;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layer-wise neural architecture search experiments"};
  app.require_subcommand(1);

  std::string run_config;
  std::string output_dir;
  std::vector<std::uint64_t> seed_override;
  CLI::App* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("config", run_config, "Experiment config JSON")->required();
  run->add_option("--output-dir", output_dir, "Override output_dir");
  run->add_option("--seed-override", seed_override, "Replace the config's seeds");

  std::string validate_config;
  CLI::App* validate = app.add_subcommand("validate", "Check a config without running");
  validate->add_option("config", validate_config, "Experiment config JSON")->required();

  std::string analyze_dir;
  CLI::App* analyze = app.add_subcommand("analyze", "Summarize an output directory");
  analyze->add_option("dir", analyze_dir, "Experiment output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      layernas::ExperimentConfig cfg = layernas::LoadExperimentConfig(run_config);
      if (!output_dir.empty()) cfg.output_dir = output_dir;
      if (!seed_override.empty()) {
        cfg.seeds = seed_override;
        cfg.raw["seeds"] = seed_override;
      }
      const layernas::ExperimentOutput out = layernas::RunExperiment(cfg);
      std::cout << out.manifest.string() << "\n";
    } else if (*validate) {
      const layernas::ExperimentConfig cfg = layernas::LoadExperimentConfig(validate_config);
      std::cout << "ok: " << layernas::AlgorithmName(cfg.algorithm) << " on "
                << cfg.space.name << ", " << cfg.seeds.size() << " seed(s)\n";
    } else if (*analyze) {
      std::cout << layernas::SummaryCsv(layernas::AnalyzeDirectory(analyze_dir));
    }
  } catch (const layernas::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSearch;
  }
  return 0;
}
