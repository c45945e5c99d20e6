#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frost/common/errors.hpp"
#include "frost/telemetry/telemetry.hpp"

namespace frost::wrangler {

// Lowercased, trimmed variant -> canonical token; nullopt maps to missing.
using CanonMap = std::map<std::string, std::optional<std::string>>;
using Cell = std::optional<std::string>;

struct UnifyResult {
  std::vector<Cell> values;
  std::vector<std::string> unmapped;  // distinct values with no canonical form
};

UnifyResult unify_categoricals(const std::vector<Cell>& values, const CanonMap& canon);

struct DropResult {
  std::vector<std::string> retained;
  std::vector<std::string> dropped;
};

// Columns with at most one distinct non-missing value are dropped unless
// protected. Throws EmptyDataset when there is nothing to inspect.
template <class T>
DropResult drop_constant_features(const std::map<std::string, std::vector<std::optional<T>>>& columns,
                                  const std::set<std::string>& protect = {});

struct SigmaClipResult {
  std::vector<double> kept;
  std::vector<double> removed;
  std::vector<std::size_t> removed_index;
  bool degenerate_std = false;
  double mean = 0;
  double stddev = 0;  // population
};

// One pass: drop |v - mean| > k * std. Constant input keeps everything and
// flags degenerate_std.
SigmaClipResult sigma_clip(const std::vector<double>& values, double k);

struct DedupeResult {
  std::vector<telemetry::TelemetryRecord> records;
  std::size_t duplicates = 0;
  std::size_t conflicts = 0;  // duplicates whose other fields differed
};

// Keeps the first record for each (fridge_id, timestamp), preserving order.
DedupeResult dedupe_records(std::vector<telemetry::TelemetryRecord> records);

struct CleanConfig {
  // Per-column canon maps for the raw table; "*" applies to every column.
  std::map<std::string, CanonMap> canon;
  double sigma_k = 5.0;
  std::vector<std::string> clip_fields = {"air_on", "air_off"};
  bool drop_constant = true;
};

struct CleanLog {
  std::vector<std::string> unmapped;
  std::size_t duplicates = 0;
  std::size_t conflicts = 0;
  std::vector<std::string> dropped_features;
  std::size_t clipped = 0;
  int clip_rounds = 0;
};

// Default canon entries: blanks and "-" become missing, yes/no variants fold.
CanonMap default_canon();

// First cleaning step, applied to the raw text table before typing.
telemetry::RawTable unify_table(telemetry::RawTable table, const CleanConfig& config, CleanLog& log);

// Remaining steps in order: dedupe, drop-constant, sigma-clip. Repeats the
// drop/clip steps until nothing changes so a second pass is a no-op.
std::vector<telemetry::TelemetryRecord> clean_records(std::vector<telemetry::TelemetryRecord> records,
                                                      const CleanConfig& config, CleanLog& log);

// Field by name: air_on, air_off, defrost_state, or an extra key.
std::optional<double> field_value(const telemetry::TelemetryRecord& record, const std::string& name);

template <class T>
DropResult drop_constant_features(const std::map<std::string, std::vector<std::optional<T>>>& columns,
                                  const std::set<std::string>& protect) {
  bool any_rows = false;
  for (const auto& [_, values] : columns) any_rows = any_rows || !values.empty();
  if (columns.empty() || !any_rows) throw Error(Errc::empty_dataset, "no columns or rows to inspect");
  DropResult out;
  for (const auto& [name, values] : columns) {
    std::optional<T> first;
    bool varied = false;
    for (const auto& v : values) {
      if (!v) continue;
      if (!first) first = v;
      else if (!(*v == *first)) {
        varied = true;
        break;
      }
    }
    if (varied || protect.count(name)) out.retained.push_back(name);
    else out.dropped.push_back(name);
  }
  return out;
}

}  // namespace frost::wrangler
