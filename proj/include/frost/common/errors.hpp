#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frost {

enum class Errc {
  io,
  lock_held,
  corrupt_collection,
  duplicate_id,
  bad_field_path,
  pipeline_parse,
  not_found,
  checksum_mismatch,
  missing_column,
  unsorted_input,
  empty_dataset,
  insufficient_history,
  single_class,
  too_few_examples,
  shape_mismatch,
  length_mismatch,
  bad_distribution,
  diverged_loss,
  version_mismatch,
  manifest_shape_mismatch,
  bad_config,
  bad_temperature_order,
  out_of_range,
  stage_failure,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class CorruptCollection : public Error {
 public:
  CorruptCollection(std::string collection, std::size_t line, const std::string& detail)
      : Error(Errc::corrupt_collection,
              collection + " line " + std::to_string(line) + ": " + detail),
        collection_(std::move(collection)),
        line_(line) {}

  const std::string& collection() const noexcept { return collection_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string collection_;
  std::size_t line_;
};

}  // namespace frost
