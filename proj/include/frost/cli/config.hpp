#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "frost/fridgesim/fridgesim.hpp"
#include "frost/neural/train.hpp"
#include "frost/orchestrator/orchestrator.hpp"
#include "frost/pipelines/pipelines.hpp"

namespace frost::cli {

namespace fs = std::filesystem;

struct SimulateSection {
  fridgesim::SimConfig sim;
  fs::path telemetry_csv;
  fs::path work_orders_csv;
};

struct IngestSection {
  fs::path telemetry_csv;
  std::optional<fs::path> work_orders_csv;
  telemetry::CsvSchema schema;
  wrangler::CleanConfig clean;
  telemetry::Setpoints setpoints;
};

struct ModelSection {
  std::string name;
  fs::path pipeline;
  std::vector<neural::LayerSpec> layers;
  neural::TrainConfig train;
};

struct InferSection {
  std::string model;               // registered name
  std::vector<std::string> fridges;  // empty: the whole fleet
  double as_of_ts = 0;
  double lead_seconds = pipelines::kDefaultLead;  // DSR only
};

struct SelectSection {
  std::string model;
  fridgesim::DsrEvent event;
  double safety_margin_s = pipelines::kDefaultSafetyMargin;
};

struct ReportSpec {
  std::string model;
  std::optional<std::string> ahead_model;
  std::string split = "test";
};

// Relative paths resolve against the directory holding the config file.
struct RunConfig {
  fs::path config_path;
  fs::path store_path;
  fs::path log_dir;
  std::uint64_t seed = 0;
  std::string log_level = "info";

  std::optional<SimulateSection> simulate;
  std::optional<IngestSection> ingest;
  std::optional<pipelines::DsrWrangleConfig> wrangle_dsr;
  std::optional<pipelines::FaultWrangleConfig> wrangle_faults;
  std::vector<ModelSection> learn_dsr;
  std::vector<ModelSection> learn_faults;
  std::optional<InferSection> infer_dsr;
  std::optional<InferSection> infer_faults;
  std::optional<SelectSection> select_dsr;
  std::vector<ReportSpec> reports;
  std::vector<orchestrator::StageSpec> stages;
};

inline const std::vector<std::string> kTaskNames = {"simulate",    "ingest",      "wrangle_dsr", "wrangle_faults",
                                                    "learn_dsr",   "learn_faults", "infer_dsr",  "infer_faults",
                                                    "select_dsr",  "report"};

// Throws BadConfig naming the JSON pointer of the offending value. A seed
// override replaces the top-level seed and every section that inherits it.
RunConfig parse_config(const docstore::Json& doc, const fs::path& config_path,
                       std::optional<std::uint64_t> seed_override = std::nullopt);
RunConfig load_config(const fs::path& path, std::optional<std::uint64_t> seed_override = std::nullopt);

// Checks that input files exist (unless an earlier simulate section writes
// them), pipeline files parse, and every stage task has its section.
void validate(const RunConfig& config);

docstore::OrderedJson read_pipeline(const fs::path& path);
const ModelSection& find_model(const std::vector<ModelSection>& models, const std::string& name);

}  // namespace frost::cli
