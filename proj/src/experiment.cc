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

#include "layernas/experiment.h"

#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "layernas/brute_force.h"
#include "layernas/error.h"
#include "layernas/space_io.h"
#include "layernas/tabular.h"

namespace layernas {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

[[noreturn]] void ConfigFail(const std::string& pointer, const std::string& message) {
  throw Error(ErrorCode::kConfigError, pointer + ": " + message, pointer);
}

const json& Need(const json& obj, const std::string& key, const std::string& at) {
  if (!obj.is_object() || !obj.contains(key)) ConfigFail(at + "/" + key, "missing");
  return obj.at(key);
}

double NumberAt(const json& obj, const std::string& key, const std::string& at) {
  const json& v = Need(obj, key, at);
  if (!v.is_number()) ConfigFail(at + "/" + key, "must be a number");
  return v.get<double>();
}

std::int64_t IntegerAt(const json& obj, const std::string& key, const std::string& at) {
  const json& v = Need(obj, key, at);
  if (!v.is_number_integer()) ConfigFail(at + "/" + key, "must be an integer");
  return v.get<std::int64_t>();
}

int OptionalInt(const json& obj, const std::string& key, const std::string& at,
                int fallback) {
  if (!obj.contains(key)) return fallback;
  return static_cast<int>(IntegerAt(obj, key, at));
}

// Exactly one key of `obj`, which must be one of `allowed`.
std::string SingleVariant(const json& obj, const std::string& at,
                          const std::set<std::string>& allowed) {
  if (!obj.is_object() || obj.size() != 1) {
    ConfigFail(at, "must hold exactly one variant");
  }
  const std::string key = obj.begin().key();
  if (!allowed.contains(key)) ConfigFail(at + "/" + key, "unknown variant");
  return key;
}

std::vector<std::vector<double>> Matrix(const json& v, const std::string& at) {
  if (!v.is_array()) ConfigFail(at, "must be an array of arrays");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array()) ConfigFail(at + "/" + std::to_string(i), "must be an array");
    std::vector<double> row;
    for (std::size_t j = 0; j < v[i].size(); ++j) {
      if (!v[i][j].is_number()) {
        ConfigFail(at + "/" + std::to_string(i) + "/" + std::to_string(j), "must be a number");
      }
      row.push_back(v[i][j].get<double>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

SyntheticOracleSpec ParseSynthetic(const json& doc, const SearchSpace& space) {
  const std::string at = "/oracle/synthetic";
  if (!doc.is_object()) ConfigFail(at, "must be an object");
  const double sigma = doc.contains("noise_sigma") ? NumberAt(doc, "noise_sigma", at) : 0.0;
  const double secs = doc.contains("train_seconds_per_eval")
                          ? NumberAt(doc, "train_seconds_per_eval", at)
                          : 1.0;
  SyntheticOracleSpec spec;
  if (doc.contains("generator")) {
    const json& gen = doc["generator"];
    const std::string kind = gen.is_object() ? gen.value("kind", "") : "";
    if (kind != "size_search") ConfigFail(at + "/generator/kind", "must be \"size_search\"");
    const std::int64_t seed = IntegerAt(gen, "seed", at + "/generator");
    spec = GenerateSizeSearchQuality(space, static_cast<std::uint64_t>(seed), sigma, secs);
  } else {
    spec.quality = Matrix(Need(doc, "quality", at), at + "/quality");
    spec.noise_sigma = sigma;
    spec.train_seconds_per_eval = secs;
    if (doc.contains("noise_sigma_by_option")) {
      spec.noise_sigma_by_option =
          Matrix(doc["noise_sigma_by_option"], at + "/noise_sigma_by_option");
    }
    if (doc.contains("coupling")) {
      const json& list = doc["coupling"];
      if (!list.is_array()) ConfigFail(at + "/coupling", "must be an array");
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string c_at = at + "/coupling/" + std::to_string(i);
        PairwiseCoupling c;
        c.layer_a = static_cast<int>(IntegerAt(list[i], "layer_a", c_at));
        c.layer_b = static_cast<int>(IntegerAt(list[i], "layer_b", c_at));
        c.values = Matrix(Need(list[i], "values", c_at), c_at + "/values");
        spec.coupling.push_back(std::move(c));
      }
    }
  }
  try {
    ValidateSyntheticSpec(space, spec);
  } catch (const Error& e) {
    ConfigFail(at, e.what());
  }
  return spec;
}

void ParseAlgorithm(const json& doc, ExperimentConfig& cfg) {
  const std::string at = "/algorithm";
  const std::string kind = SingleVariant(
      doc, at, {"layernas", "layernas_dp", "random", "regularized_evolution"});
  const json& body = doc[kind];
  const std::string b_at = at + "/" + kind;
  if (!body.is_object()) ConfigFail(b_at, "must be an object");
  if (kind == "layernas") {
    cfg.algorithm = AlgorithmKind::kLayerNas;
    LayerNasConfig& l = cfg.layernas;
    l.buckets = OptionalInt(body, "buckets", b_at, l.buckets);
    l.replicas = OptionalInt(body, "replicas", b_at, l.replicas);
    l.selections_per_layer =
        OptionalInt(body, "selections_per_layer", b_at, l.selections_per_layer);
    l.options_per_selection =
        OptionalInt(body, "options_per_selection", b_at, l.options_per_selection);
    l.max_passes = OptionalInt(body, "max_passes", b_at, l.max_passes);
    const std::string pass = body.value("pass_mode", "cyclic");
    if (pass == "cyclic") {
      l.pass_mode = PassMode::kCyclic;
    } else if (pass == "single_pass") {
      l.pass_mode = PassMode::kSinglePass;
    } else {
      ConfigFail(b_at + "/pass_mode", "must be \"cyclic\" or \"single_pass\"");
    }
    if (body.contains("mode")) {
      const std::string mode = body["mode"].is_string() ? body["mode"].get<std::string>() : "";
      if (mode == "cost_bucket") {
        l.mode = SpaceMode::kCostBucket;
      } else if (mode == "unique_id") {
        l.mode = SpaceMode::kUniqueId;
      } else {
        ConfigFail(b_at + "/mode", "must be \"cost_bucket\" or \"unique_id\"");
      }
    }
    if (body.contains("allow_reeval")) {
      if (!body["allow_reeval"].is_boolean()) ConfigFail(b_at + "/allow_reeval", "must be a bool");
      l.allow_reeval = body["allow_reeval"].get<bool>();
    }
    const auto check = [&](bool ok, const char* key, const char* what) {
      if (!ok) ConfigFail(b_at + "/" + key, what);
    };
    check(l.buckets >= 1, "buckets", "must be >= 1");
    check(l.replicas >= 1, "replicas", "must be >= 1");
    check(l.selections_per_layer >= 1, "selections_per_layer", "must be >= 1");
    check(l.options_per_selection >= 1, "options_per_selection", "must be >= 1");
    check(l.max_passes >= 1, "max_passes", "must be >= 1");
  } else if (kind == "layernas_dp") {
    cfg.algorithm = AlgorithmKind::kLayerNasDp;
  } else if (kind == "random") {
    cfg.algorithm = AlgorithmKind::kRandom;
  } else {
    cfg.algorithm = AlgorithmKind::kRegularizedEvolution;
    RegularizedEvolutionConfig& e = cfg.evolution;
    e.population_size = OptionalInt(body, "population_size", b_at, e.population_size);
    e.tournament_size = OptionalInt(body, "tournament_size", b_at, e.tournament_size);
    if (e.population_size < 1) ConfigFail(b_at + "/population_size", "must be >= 1");
    if (e.tournament_size < 1 || e.tournament_size > e.population_size) {
      ConfigFail(b_at + "/tournament_size", "must lie in [1, population_size]");
    }
    if (body.contains("mnas_exponent") || body.contains("mnas_target")) {
      MnasObjectiveSpec obj;
      if (body.contains("mnas_exponent")) obj.exponent = NumberAt(body, "mnas_exponent", b_at);
      obj.target_cost = body.contains("mnas_target") ? NumberAt(body, "mnas_target", b_at)
                                                     : -1.0;  // filled in from the target
      cfg.objective = obj;
    }
  }
}

void ParseTarget(const json& doc, ExperimentConfig& cfg) {
  const std::string at = "/target";
  if (!doc.is_object()) ConfigFail(at, "must be an object");
  const double max_cost =
      cfg.space.ToUnits(ArchitectureCost(cfg.space, MaxCostArchitecture(cfg.space)));
  if (doc.contains("fraction_of_max")) {
    const double f = NumberAt(doc, "fraction_of_max", at);
    if (!(f > 0.0 && f <= 1.0)) ConfigFail(at + "/fraction_of_max", "must lie in (0, 1]");
    cfg.target_low = 0.0;
    cfg.target_high = f * max_cost;
  } else {
    cfg.target_low = doc.contains("low") ? NumberAt(doc, "low", at) : 0.0;
    cfg.target_high = NumberAt(doc, "high", at);
    if (cfg.target_low > cfg.target_high) ConfigFail(at, "low exceeds high");
  }
  const CostTarget t = ResolveTarget(cfg.space, cfg.target_low, cfg.target_high);
  if (!CostCompletionInterval(cfg.space, Prefix{}).Intersects(t.low, t.high)) {
    ConfigFail(at, "no architecture of the space lands in the target band");
  }
  if (cfg.objective && cfg.objective->target_cost < 0) {
    cfg.objective->target_cost = cfg.target_high;
  }
}

std::unique_ptr<EvalOracle> LoadTabularChecked(const ExperimentConfig& cfg) {
  try {
    auto oracle = std::make_unique<TabularBenchmark>(LoadTabular(*cfg.tabular_file, cfg.space));
    for (const auto& [arch, row] : oracle->rows()) {
      if (!row.validation_accuracy.contains(cfg.epoch_budget)) {
        ConfigFail("/epoch_budget", "tabular rows lack epoch " +
                                        std::to_string(cfg.epoch_budget));
      }
    }
    return oracle;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfigError) throw;
    ConfigFail("/oracle/tabular", e.what());
  }
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

fs::path TrajectoryName(std::uint64_t seed) {
  return "trajectory_seed" + std::to_string(seed) + ".csv";
}

void WriteAtomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string(), tmp.string());
    out << content;
    out.close();
    if (!out) throw Error(ErrorCode::kIoError, "write failed for " + tmp.string(), tmp.string());
  }
  fs::rename(tmp, path);
}

json RecordJson(const SearchSpace& space, const std::optional<CandidateRecord>& rec) {
  if (!rec) return nullptr;
  json out;
  out["choices"] = rec->arch.choices;
  out["choices_str"] = FormatChoices(rec->arch.choices);
  out["cost"] = space.ToUnits(rec->cost);
  out["validation_accuracy"] = rec->validation_accuracy;
  out["test_accuracy"] = rec->test_accuracy ? json(*rec->test_accuracy) : json(nullptr);
  return out;
}

// Effective trial cap for the layer-wise searches.
std::optional<std::int64_t> LayerNasCap(const ExperimentConfig& cfg) {
  const BucketMode mode = BucketModeFor(cfg.layernas.mode.value_or(cfg.space.mode));
  if (mode != BucketMode::kCostBucket) return cfg.max_trials;
  const std::int64_t bound =
      MaxTrialBound(cfg.space, cfg.layernas.replicas, cfg.layernas.buckets);
  return cfg.max_trials ? std::min(*cfg.max_trials, bound) : bound;
}

}  // namespace

std::string AlgorithmName(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kLayerNas: return "layernas";
    case AlgorithmKind::kLayerNasDp: return "layernas_dp";
    case AlgorithmKind::kRandom: return "random";
    case AlgorithmKind::kRegularizedEvolution: return "regularized_evolution";
  }
  return "";
}

ExperimentConfig ParseExperimentConfig(const json& doc, const fs::path& base_dir) {
  if (!doc.is_object()) ConfigFail("", "config must be a JSON object");
  ExperimentConfig cfg;
  cfg.raw = doc;
  cfg.base_dir = base_dir;

  const json& space_file = Need(doc, "space_file", "");
  if (!space_file.is_string()) ConfigFail("/space_file", "must be a path string");
  cfg.space_file = base_dir / space_file.get<std::string>();
  try {
    cfg.space = LoadSpace(cfg.space_file);
  } catch (const Error& e) {
    ConfigFail("/space_file", e.what());
  }

  if (doc.contains("cost_metric")) {
    if (!doc["cost_metric"].is_string()) ConfigFail("/cost_metric", "must be a string");
    cfg.cost_metric = doc["cost_metric"].get<std::string>();
    if (cfg.cost_metric != cfg.space.cost_unit) {
      ConfigFail("/cost_metric", "space costs are in '" + cfg.space.cost_unit + "'");
    }
  } else {
    cfg.cost_metric = cfg.space.cost_unit;
  }

  cfg.epoch_budget = static_cast<int>(doc.contains("epoch_budget")
                                          ? IntegerAt(doc, "epoch_budget", "")
                                          : 1);
  if (cfg.epoch_budget < 1) ConfigFail("/epoch_budget", "must be >= 1");
  cfg.total_train_seconds_budget = NumberAt(doc, "total_train_seconds_budget", "");
  if (!(cfg.total_train_seconds_budget > 0) || std::isinf(cfg.total_train_seconds_budget)) {
    ConfigFail("/total_train_seconds_budget", "must be finite and positive");
  }
  if (doc.contains("max_trials")) {
    cfg.max_trials = IntegerAt(doc, "max_trials", "");
    if (*cfg.max_trials < 1) ConfigFail("/max_trials", "must be >= 1");
  }

  const json& seeds = Need(doc, "seeds", "");
  if (!seeds.is_array() || seeds.empty()) ConfigFail("/seeds", "must be a non-empty array");
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (!seeds[i].is_number_integer() || seeds[i].get<std::int64_t>() < 0) {
      ConfigFail("/seeds/" + std::to_string(i), "must be a non-negative integer");
    }
    const auto s = seeds[i].get<std::uint64_t>();
    if (!seen.insert(s).second) ConfigFail("/seeds/" + std::to_string(i), "repeated seed");
    cfg.seeds.push_back(s);
  }

  const json& out = Need(doc, "output_dir", "");
  if (!out.is_string()) ConfigFail("/output_dir", "must be a path string");
  cfg.output_dir = base_dir / out.get<std::string>();

  ParseAlgorithm(Need(doc, "algorithm", ""), cfg);
  ParseTarget(Need(doc, "target", ""), cfg);

  const json& oracle = Need(doc, "oracle", "");
  const std::string kind = SingleVariant(oracle, "/oracle", {"tabular", "synthetic"});
  if (kind == "tabular") {
    if (!oracle["tabular"].is_string()) ConfigFail("/oracle/tabular", "must be a path string");
    cfg.tabular_file = base_dir / oracle["tabular"].get<std::string>();
    LoadTabularChecked(cfg);
  } else {
    cfg.synthetic = ParseSynthetic(oracle["synthetic"], cfg.space);
  }
  return cfg;
}

ExperimentConfig LoadExperimentConfig(const fs::path& path) {
  std::ifstream in(path);
  if (!in) ConfigFail("", "cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    ConfigFail("", std::string("invalid JSON: ") + e.what());
  }
  return ParseExperimentConfig(doc, path.parent_path());
}

void ValidateConfig(const ExperimentConfig& config) {
  ParseExperimentConfig(config.raw, config.base_dir);
}

std::unique_ptr<EvalOracle> BuildOracle(const ExperimentConfig& config) {
  if (config.tabular_file) return LoadTabularChecked(config);
  if (!config.synthetic) ConfigFail("/oracle", "no oracle configured");
  return std::make_unique<SyntheticOracle>(config.space, *config.synthetic);
}

SearchResult RunOne(const EvalOracle& oracle, const ExperimentConfig& config,
                    std::uint64_t seed) {
  switch (config.algorithm) {
    case AlgorithmKind::kLayerNas:
    case AlgorithmKind::kLayerNasDp: {
      LayerNasConfig l = config.layernas;
      l.target_low = config.target_low;
      l.target_high = config.target_high;
      l.epoch_budget = config.epoch_budget;
      l.train_seconds_budget = config.total_train_seconds_budget;
      l.seed = seed;
      if (config.algorithm == AlgorithmKind::kLayerNas) {
        l.max_trials = LayerNasCap(config);
        return RunLayerNas(oracle, l).search;
      }
      l.max_trials = config.max_trials;
      return RunLayerNasDp(oracle, l).search;
    }
    case AlgorithmKind::kRandom:
    case AlgorithmKind::kRegularizedEvolution: {
      BaselineBudget b;
      b.target_low = config.target_low;
      b.target_high = config.target_high;
      b.epoch_budget = config.epoch_budget;
      b.train_seconds_budget = config.total_train_seconds_budget;
      b.max_trials = config.max_trials;
      b.seed = seed;
      if (config.algorithm == AlgorithmKind::kRandom) return RunRandomSearch(oracle, b);
      return RunRegularizedEvolution(oracle, b, config.evolution, config.objective);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

std::string TrajectoryCsv(const SearchSpace& space, const SearchResult& result) {
  std::string out =
      "cumulative_train_seconds,trial_index,layer,choices,cost,validation_accuracy,"
      "feasible,best_so_far_validation\n";
  for (const auto& e : result.trajectory) {
    out += FormatDouble(e.cumulative_train_seconds);
    out += ',' + std::to_string(e.trial_index);
    out += ',' + std::to_string(e.layer);
    out += ',' + FormatChoices(e.arch.choices);
    out += ',' + FormatDouble(space.ToUnits(e.cost));
    out += ',' + FormatDouble(e.validation_accuracy);
    out += e.feasible ? ",1," : ",0,";
    if (e.best_so_far) out += FormatDouble(*e.best_so_far);
    out += '\n';
  }
  return out;
}

ExperimentOutput RunExperiment(const ExperimentConfig& config) {
  const std::unique_ptr<EvalOracle> oracle = BuildOracle(config);
  const fs::path dir = config.output_dir;
  const bool created_dir = !fs::exists(dir);
  fs::create_directories(dir);

  ExperimentOutput output;
  std::vector<fs::path> written;
  try {
    std::vector<std::future<SearchResult>> jobs;
    for (std::uint64_t seed : config.seeds) {
      jobs.push_back(std::async(std::launch::async, [&oracle, &config, seed] {
        return RunOne(*oracle, config, seed);
      }));
    }
    std::vector<SearchResult> results;
    std::exception_ptr failure;
    for (auto& job : jobs) {
      try {
        results.push_back(job.get());
      } catch (...) {
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    const SearchSpace& space = config.space;
    json manifest;
    manifest["config"] = config.raw;
    manifest["algorithm"] = AlgorithmName(config.algorithm);
    manifest["space"] = {{"name", space.name},
                         {"cost_unit", space.cost_unit},
                         {"num_layers", space.num_layers()},
                         {"option_sum", OptionSum(space)},
                         {"options_per_layer", [&] {
                            std::vector<int> sizes;
                            for (const auto& l : space.layers) sizes.push_back(l.size());
                            return sizes;
                          }()}};
    manifest["unique_models"] = {{"exact", UniqueModelCountDecimal(space)},
                                 {"approx", UniqueModelCount(space)},
                                 {"two_significant", FormatTwoSignificant(UniqueModelCount(space))}};
    manifest["target"] = {{"low", config.target_low}, {"high", config.target_high}};
    manifest["total_train_seconds_budget"] = config.total_train_seconds_budget;

    json bound = nullptr;
    if (config.algorithm == AlgorithmKind::kLayerNas) {
      const int k = config.layernas.replicas;
      const int h = config.layernas.buckets;
      const std::int64_t formula = MaxTrialBound(space, k, h);
      bound = {{"replicas_times_buckets", static_cast<std::int64_t>(k) * h},
               {"value", formula},
               {"two_significant", FormatTwoSignificant(static_cast<double>(formula))}};
      const auto cap = LayerNasCap(config);
      manifest["trial_cap"] = cap ? json(*cap) : json(nullptr);
    } else if (config.algorithm == AlgorithmKind::kLayerNasDp) {
      try {
        const std::int64_t dp = DpTrialBound(space);
        bound = {{"value", dp}, {"two_significant", FormatTwoSignificant(static_cast<double>(dp))}};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSpaceTooLarge) throw;
      }
    }
    manifest["max_trial_bound"] = bound;

    TrajectoryBundle bundle;
    bundle.grid = LogSpacedCheckpoints(config.total_train_seconds_budget, 20);
    manifest["runs"] = json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const SearchResult& r = results[i];
      const fs::path file = dir / TrajectoryName(config.seeds[i]);
      WriteAtomic(file, TrajectoryCsv(space, r));
      written.push_back(file);
      output.trajectories.push_back(file);
      bundle.runs.push_back(r.trajectory);
      manifest["runs"].push_back(
          {{"seed", config.seeds[i]},
           {"trajectory_file", file.filename().string()},
           {"best", RecordJson(space, r.best_by_validation)},
           {"validation_accuracy", r.best_by_validation
                                       ? json(r.best_by_validation->validation_accuracy)
                                       : json(nullptr)},
           {"test_accuracy", r.best_test_accuracy ? json(*r.best_test_accuracy) : json(nullptr)},
           {"evals_used", r.evals_used},
           {"passes", r.passes},
           {"budget_exhausted", r.budget_exhausted}});
    }

    output.summary = dir / "summary.csv";
    WriteAtomic(output.summary, SummaryCsv(Summarize(bundle)));
    written.push_back(output.summary);
    manifest["summary_file"] = "summary.csv";

    output.manifest = dir / "manifest.json";
    WriteAtomic(output.manifest, manifest.dump(2) + "\n");
    written.push_back(output.manifest);
  } catch (...) {
    std::error_code ec;
    for (const auto& f : written) fs::remove(f, ec);
    for (std::uint64_t seed : config.seeds) {
      fs::remove((dir / TrajectoryName(seed)).string() + ".tmp", ec);
    }
    fs::remove(dir / "summary.csv.tmp", ec);
    fs::remove(dir / "manifest.json.tmp", ec);
    if (created_dir && fs::is_empty(dir, ec)) fs::remove(dir, ec);
    throw;
  }
  return output;
}

std::vector<SummaryRow> AnalyzeDirectory(const fs::path& dir) {
  const fs::path manifest_path = dir / "manifest.json";
  std::ifstream in(manifest_path);
  if (!in) throw Error(ErrorCode::kIoError, "no manifest.json in " + dir.string(), dir.string());
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad manifest: ") + e.what());
  }
  TrajectoryBundle bundle;
  bundle.grid = LogSpacedCheckpoints(manifest.at("total_train_seconds_budget").get<double>(), 20);
  for (const auto& run : manifest.at("runs")) {
    const fs::path file = dir / run.at("trajectory_file").get<std::string>();
    std::ifstream csv(file);
    if (!csv) throw Error(ErrorCode::kIoError, "cannot read " + file.string(), file.string());
    std::string line;
    std::getline(csv, line);  // header
    std::vector<TrajectoryEntry> entries;
    while (std::getline(csv, line)) {
      if (line.empty()) continue;
      std::vector<std::string> fields;
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, ',')) fields.push_back(field);
      if (line.back() == ',') fields.emplace_back();
      if (fields.size() != 8) {
        throw Error(ErrorCode::kParseError, "malformed row in " + file.string(), file.string());
      }
      TrajectoryEntry e;
      e.cumulative_train_seconds = std::stod(fields[0]);
      e.trial_index = std::stoll(fields[1]);
      e.feasible = fields[6] == "1";
      if (!fields[7].empty()) e.best_so_far = std::stod(fields[7]);
      entries.push_back(std::move(e));
    }
    bundle.runs.push_back(std::move(entries));
  }
  return Summarize(bundle);
}

}  // namespace layernas
