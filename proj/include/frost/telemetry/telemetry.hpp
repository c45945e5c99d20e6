#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frost/docstore/document.hpp"

namespace frost::telemetry {

struct DerivedFields {
  double timestamp_sec = 0;
  double time_diff_sec = 0;  // gap to the previous record of the same fridge
  double targetTemp_on = 0;
  double targetTemp_on_diff = 0;
  double targetTemp_off = 0;
  double targetTemp_off_diff = 0;
  double targetTime_sec = 0;  // seconds since UTC midnight

  bool operator==(const DerivedFields&) const = default;
};

// One sensor reading for one fridge.
struct TelemetryRecord {
  double timestamp = 0;  // unix seconds
  std::string fridge_id;
  std::string store_id;  // empty when unknown
  double air_on = 0;
  double air_off = 0;
  int defrost_state = 0;
  std::map<std::string, double> extra;
  std::optional<DerivedFields> derived;

  bool operator==(const TelemetryRecord&) const = default;
};

// Maps record roles to CSV header names. An empty store_id column means the
// file has none; an empty fridge_id column means every row gets
// fridge_id_default. Unmapped numeric columns land in `extra` under their
// header name unless renamed through extra_columns.
struct CsvSchema {
  std::string timestamp = "timestamp";
  std::string fridge_id = "refrigeration_case";
  std::string store_id = "store_number";
  std::string air_on = "air_on_temperature";
  std::string air_off = "air_off_temperature";
  std::string defrost = "defrost_state";
  std::string fridge_id_default;
  std::map<std::string, std::string> extra_columns;  // header -> extra key
  std::vector<std::string> ignore_columns;
};

// Free-text maintenance record, e.g. "ICE CLEARED case C12 store 7".
struct WorkOrder {
  std::string raw_text;
  double timestamp = 0;
};

struct Reject {
  std::size_t row = 0;  // 1-based file line; the header is line 1
  std::string reason;
};

struct ParseResult {
  std::vector<TelemetryRecord> records;
  std::vector<Reject> rejects;
};

// CSV cells as text; an empty cell is a missing value.
struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;  // file line of each row
};

RawTable read_csv_table(std::string_view text);
std::string write_csv_table(const RawTable& table);

// Throws MissingColumn when a required column is absent from the header.
ParseResult parse_telemetry_table(const RawTable& table, const CsvSchema& schema = {});
ParseResult parse_telemetry_csv(std::string_view text, const CsvSchema& schema = {});

// Inverse of parse_telemetry_csv for the same schema. Derived fields are not written.
std::string write_telemetry_csv(std::span<const TelemetryRecord> records, const CsvSchema& schema = {});

struct Setpoints {
  double on = 4.0;
  double off = 2.0;
};

// Input must be sorted by (fridge_id, timestamp); throws UnsortedInput otherwise.
std::vector<TelemetryRecord> derive_features(std::vector<TelemetryRecord> records, Setpoints setpoints);

std::string document_id(const TelemetryRecord& record);
docstore::Json to_document(const TelemetryRecord& record);
TelemetryRecord from_document(const docstore::Json& doc);
std::vector<docstore::Json> to_documents(std::span<const TelemetryRecord> records);
std::vector<TelemetryRecord> from_documents(std::span<const docstore::Json> docs);

// Splits one CSV line, honoring double-quoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace frost::telemetry
