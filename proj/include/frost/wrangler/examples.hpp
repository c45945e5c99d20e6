#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frost/docstore/document.hpp"
#include "frost/telemetry/telemetry.hpp"

namespace frost::wrangler {

struct WindowConfig {
  std::size_t window_len = 32;
  double cadence_s = 60;
  double gap_factor = 3;  // a gap above gap_factor * cadence breaks a sequence
  // Record fields (see field_value), or "<field>_delta" for the per-record change.
  std::vector<std::string> features = {"air_on", "air_off"};
  bool require_no_defrost = true;
  bool operator==(const WindowConfig&) const = default;
};

struct Window {
  std::vector<double> values;  // window_len x features, row-major
  double last_ts = 0;
};

// The window_len records of one fridge's sorted stream strictly before
// as_of_ts. Returns the reject reason on failure.
struct WindowOutcome {
  std::optional<Window> window;
  std::string reason;
};
WindowOutcome assemble_window(std::span<const telemetry::TelemetryRecord> stream, double as_of_ts,
                              const WindowConfig& config);

struct DefrostExample {
  std::string id;
  std::string fridge_id;
  std::string store_id;
  std::vector<double> observed;  // window_len x features, row-major
  std::vector<std::string> feature_names;
  double target_seconds = 0;  // from the end of the observed window to the final defrost point
  double defrost_start_ts = 0;
  double defrost_end_ts = 0;
  double lead_seconds = 0;
  double threshold_temp = 8;

  double as_of_ts() const { return defrost_start_ts - lead_seconds; }
  std::size_t steps() const { return feature_names.empty() ? 0 : observed.size() / feature_names.size(); }
  bool operator==(const DefrostExample&) const = default;
};

struct ExtractConfig {
  WindowConfig window{.features = {"air_on", "air_off", "air_on_delta"}};
  double threshold_temp = 8;
  double min_target_s = 600;
  double max_target_s = 3 * 2700;
};

struct ExtractReject {
  std::string fridge_id;
  double defrost_start_ts = 0;
  std::string reason;
};

struct Extraction {
  std::vector<DefrostExample> examples;
  std::vector<ExtractReject> rejects;
};

// Records sorted by (fridge_id, timestamp); any number of fridges.
Extraction extract_defrost_examples(std::span<const telemetry::TelemetryRecord> records, const ExtractConfig& config);

// Slides the window back by lead_seconds against the same source stream.
// Throws InsufficientHistory when the earlier window cannot be assembled.
DefrostExample shift_for_lead_time(const DefrostExample& example, std::span<const telemetry::TelemetryRecord> stream,
                                   double lead_seconds, const WindowConfig& config);

using telemetry::WorkOrder;

// Capture-group numbers are 1-based; 0 means the pattern does not capture it.
struct WorkOrderPattern {
  std::string regex;
  int fault_group = 0;
  int fridge_group = 0;
  int store_group = 0;
};

struct FaultConfig {
  std::vector<WorkOrderPattern> patterns;
  WindowConfig window{.window_len = 60, .features = {"air_on", "air_off", "defrost_state"}, .require_no_defrost = false};
  double horizon_s = 86400;
  double negative_stride_s = 6 * 3600.0;
  double exclusion_factor = 2;  // negatives stay this many horizons from any fault
};

struct FaultExample {
  std::string id;
  std::string fridge_id;
  std::string store_id;
  std::vector<double> observed;
  std::vector<std::string> feature_names;
  int label = 0;  // 1 = fault within the horizon
  std::string fault_name;
  double horizon_seconds = 86400;
  double as_of_ts = 0;

  bool operator==(const FaultExample&) const = default;
};

struct ParsedWorkOrder {
  std::string fault_name;
  std::string fridge_id;
  std::string store_id;
  double timestamp = 0;
};

std::optional<ParsedWorkOrder> parse_work_order(const WorkOrder& order, std::span<const WorkOrderPattern> patterns);

struct FaultMerge {
  std::vector<FaultExample> examples;
  std::size_t skipped_orders = 0;   // nothing extractable
  std::size_t unmatched_orders = 0;  // extracted but no such fridge in the telemetry
  std::vector<ExtractReject> rejects;
};

// Telemetry sorted by (fridge_id, timestamp).
FaultMerge merge_faults(std::span<const telemetry::TelemetryRecord> telemetry, std::span<const WorkOrder> orders,
                        const FaultConfig& config);

// Indices kept after seeded uniform downsampling of the majority label, in
// input order. Throws SingleClass.
std::vector<std::size_t> balance_indices(std::span<const int> labels, std::uint64_t seed);
std::vector<FaultExample> balance_classes(const std::vector<FaultExample>& examples, std::uint64_t seed);

struct DatasetSplit {
  std::vector<std::string> train;  // the pool validation is drawn from
  std::vector<std::string> validation;
  std::vector<std::string> test;
  std::size_t validation_size = 0;
  std::uint64_t seed = 0;
};

// Throws BadConfig for fractions outside (0,1) or summing to >= 1 and
// TooFewExamples when a part would be empty.
DatasetSplit split_dataset(const std::vector<std::string>& ids, double test_fraction, double val_fraction,
                           std::uint64_t seed);
// Fresh validation multiset drawn with replacement from the train pool.
DatasetSplit resample_validation(const DatasetSplit& split, std::uint64_t round_seed);

docstore::Json to_document(const DefrostExample& example);
DefrostExample defrost_from_document(const docstore::Json& doc);
docstore::Json to_document(const FaultExample& example);
FaultExample fault_from_document(const docstore::Json& doc);

}  // namespace frost::wrangler
