#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frost/docstore/store.hpp"
#include "frost/fridgesim/fridgesim.hpp"
#include "frost/neural/train.hpp"
#include "frost/telemetry/telemetry.hpp"
#include "frost/wrangler/cleaning.hpp"
#include "frost/wrangler/examples.hpp"

namespace frost::pipelines {

using docstore::Json;
using docstore::Store;

inline constexpr const char* kTelemetry = "telemetry";
inline constexpr const char* kWorkOrders = "work_orders";
inline constexpr const char* kDefrostExamples = "defrost_examples";
inline constexpr const char* kFaultExamples = "fault_examples";
inline constexpr const char* kModelIndex = "model_index";
inline constexpr const char* kDsrPredictions = "dsr_predictions";
inline constexpr const char* kFaultPredictions = "fault_predictions";
inline constexpr const char* kSelections = "dsr_selections";
inline constexpr const char* kReports = "reports";

inline constexpr double kDefaultSafetyMargin = 300;
inline constexpr double kDefaultLead = 120;

// ---- ingest and wrangle ---------------------------------------------------

struct IngestSummary {
  std::size_t records = 0;
  std::size_t rejected_rows = 0;
  wrangler::CleanLog clean;
};

// CSV text -> unify -> parse -> clean -> derived features -> `telemetry`
// (indexed on fridge_id). Store must be writable.
IngestSummary ingest_telemetry(Store& store, std::string_view csv, const telemetry::CsvSchema& schema,
                               const wrangler::CleanConfig& clean, telemetry::Setpoints setpoints = {});
void store_work_orders(Store& store, const std::vector<telemetry::WorkOrder>& orders);

// Every telemetry record in the store, sorted by (fridge_id, timestamp).
std::vector<telemetry::TelemetryRecord> load_telemetry(const Store& store);
std::vector<telemetry::TelemetryRecord> load_fridge_stream(const Store& store, const std::string& fridge_id);
std::vector<telemetry::WorkOrder> load_work_orders(const Store& store);

struct DsrWrangleConfig {
  wrangler::ExtractConfig extract;
  std::vector<double> leads = {kDefaultLead};  // extra lead-shifted copies besides lead 0
  double test_fraction = 0.1;
  double val_fraction = 0.1;
  std::uint64_t seed = 0;
};

struct DsrDataset {
  std::vector<wrangler::DefrostExample> examples;  // lead 0 first, then each lead
  std::map<std::string, std::string> split;        // example id -> "train" | "test"
  std::vector<wrangler::ExtractReject> rejects;
};

// The split is drawn over lead-0 events; lead copies inherit their event's split.
DsrDataset build_dsr_dataset(std::span<const telemetry::TelemetryRecord> records, const DsrWrangleConfig& config);
// Example documents, each tagged with its "split".
std::vector<Json> dataset_documents(const DsrDataset& dataset);
// Writes the dataset to `defrost_examples`.
std::size_t wrangle_dsr(Store& store, const DsrWrangleConfig& config);

struct FaultWrangleConfig {
  wrangler::FaultConfig faults;
  double test_fraction = 0.2;
  double val_fraction = 0.1;
  std::uint64_t seed = 0;
};

struct FaultDataset {
  std::vector<wrangler::FaultExample> examples;  // balanced
  std::map<std::string, std::string> split;  // stratified by label, so train and test stay balanced
  wrangler::FaultMerge merge;
};

FaultDataset build_fault_dataset(std::span<const telemetry::TelemetryRecord> records,
                                 std::span<const telemetry::WorkOrder> orders, const FaultWrangleConfig& config);
std::vector<Json> dataset_documents(const FaultDataset& dataset);
std::size_t wrangle_faults(Store& store, const FaultWrangleConfig& config);

// ---- learn ---------------------------------------------------------------

neural::SequenceSet to_sequences(const std::vector<wrangler::DefrostExample>& examples);
neural::SequenceSet to_sequences(const std::vector<wrangler::FaultExample>& examples);

struct ModelBlob {
  Json meta;
  std::vector<std::byte> weights;
};

// Network from `layers` sized to the examples; linear head for DSR, softmax for faults.
neural::NetworkSpec network_for(const std::vector<neural::LayerSpec>& layers, neural::HeadKind head,
                                std::size_t seq_len, std::size_t features);

// Selects examples with `pipeline` (an aggregation over the example
// collection), trains, and returns the artifact with its task metadata.
// Throws EmptyDataset; faults also throw SingleClass for one or unequal classes.
ModelBlob fit_dsr(const Store& store, const docstore::OrderedJson& pipeline, const std::vector<neural::LayerSpec>& layers,
                  neural::TrainConfig hyper, const wrangler::WindowConfig& window);
ModelBlob fit_faults(const Store& store, const docstore::OrderedJson& pipeline, const std::vector<neural::LayerSpec>& layers,
                     neural::TrainConfig hyper, const wrangler::WindowConfig& window);

std::string learn_dsr(Store& store, const docstore::OrderedJson& pipeline, const std::vector<neural::LayerSpec>& layers,
                      const neural::TrainConfig& hyper, const wrangler::WindowConfig& window);
std::string learn_faults(Store& store, const docstore::OrderedJson& pipeline, const std::vector<neural::LayerSpec>& layers,
                         const neural::TrainConfig& hyper, const wrangler::WindowConfig& window);

struct LoadedModel {
  std::string model_id;
  neural::ModelArtifact artifact;
  wrangler::WindowConfig window;
  std::string task;  // "dsr" or "faults"
  Json meta;
};
LoadedModel load_model(const Store& store, const std::string& model_id);

// Named pointers to content-addressed models.
void register_model(Store& store, const std::string& name, const std::string& model_id);
std::string resolve_model(const Store& store, const std::string& name);

// ---- infer and select ----------------------------------------------------

struct DsrPrediction {
  std::string fridge_id;
  double predicted_safe_off_s = 0;  // from as_of_ts
  std::string model_id;
  double as_of_ts = 0;
  double lead_seconds = 0;
};

struct FaultPrediction {
  std::string fridge_id;
  double p_fault = 0;
  std::string model_id;
  double as_of_ts = 0;
};

struct InferReject {
  std::string fridge_id;
  std::string reason;
};

struct DsrInference {
  std::vector<DsrPrediction> predictions;
  std::vector<InferReject> rejects;
};

struct FaultInference {
  std::vector<FaultPrediction> predictions;
  std::vector<InferReject> rejects;
};

// The window ends before as_of_ts - lead_seconds and is assembled exactly as
// in training. lead_seconds must match the model. Per-fridge failures are
// reported, not thrown.
DsrInference infer_dsr(const Store& store, const std::string& model_id, const std::vector<std::string>& fridge_ids,
                       double as_of_ts, double lead_seconds);
FaultInference infer_faults(const Store& store, const std::string& model_id,
                            const std::vector<std::string>& fridge_ids, double as_of_ts);

struct CandidateSelection {
  fridgesim::DsrEvent event;
  std::vector<std::string> chosen;
  double shed_kw = 0;
  bool feasible = false;
};

// Eligible: predicted_safe_off_s - safety_margin_s >= event.secondary_s.
// Greedy by power descending, then longer safe-off time, then fridge id,
// until the target is met. Throws NotFound for a fridge without a power.
CandidateSelection select_dsr_candidates(const std::vector<DsrPrediction>& predictions,
                                         const std::map<std::string, double>& powers, const fridgesim::DsrEvent& event,
                                         double safety_margin_s = kDefaultSafetyMargin);

// Distinct fridge ids in the telemetry, sorted.
std::vector<std::string> fleet_ids(const Store& store);
// Rated compressor power per fridge: the largest power_kw reading seen.
std::map<std::string, double> fleet_ratings(const Store& store);

Json to_document(const DsrPrediction& p);
DsrPrediction dsr_prediction_from_document(const Json& doc);
Json to_document(const FaultPrediction& p);
Json to_document(const CandidateSelection& s);

// ---- report --------------------------------------------------------------

// Evaluates a model on one split of its example collection. Regression:
// train MAE (final epoch), test MAE, and the ahead model's MAE when given;
// classification: accuracy and CCE. Throws NotFound.
Json report(const Store& store, const std::string& model_id, const std::string& split,
            const std::optional<std::string>& ahead_model_id = std::nullopt);
std::string format_report(const Json& report);

}  // namespace frost::pipelines
