#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "frost/common/exec.hpp"
#include "frost/docstore/document.hpp"
#include "frost/docstore/pipeline.hpp"

namespace frost::docstore {

// GridFS-style chunk size for model weight blobs.
inline constexpr std::size_t kModelChunkBytes = std::size_t{4} << 20;

inline constexpr const char* kModelsCollection = "models";
inline constexpr const char* kModelChunksCollection = "model_chunks";

// Single-field hash index. Keys are canonical scalar encodings where numbers
// go through double, so 3 and 3.0 share a bucket exactly as $match sees them.
class HashIndex {
 public:
  explicit HashIndex(std::string field_path) : path_(std::move(field_path)) {}

  const std::string& path() const noexcept { return path_; }
  void add(const Json& doc, std::size_t position);
  // Ascending document positions whose field equals `value`.
  std::vector<std::size_t> lookup(const Json& value) const;

  static bool indexable(const Json& value) noexcept;

 private:
  std::string path_;
  std::unordered_map<std::string, std::vector<std::size_t>> buckets_;
};

class Collection {
 public:
  explicit Collection(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  const std::vector<Json>& documents() const noexcept { return docs_; }
  std::size_t size() const noexcept { return docs_.size(); }

  const Json* find_id(const std::string& id) const;
  bool has_index(const std::string& path) const { return indexes_.count(path) > 0; }
  std::vector<std::string> index_paths() const;

  // Indexed equality lookup when available, otherwise a scan. Same result.
  std::vector<Json> find_equal(const std::string& path, const Json& value) const;

 private:
  friend class Store;

  void append(Json doc);
  void add_index(const std::string& path);
  // Candidate positions for a pipeline whose first stage is an indexed
  // equality $match; nullopt when no index applies.
  std::optional<std::vector<std::size_t>> index_candidates(const MatchStage& stage) const;

  std::string name_;
  std::vector<Json> docs_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::map<std::string, HashIndex> indexes_;
  std::uint64_t next_auto_id_ = 0;
};

enum class OpenMode { read, write };

struct OpenOptions {
  OpenMode mode = OpenMode::read;
  // How long a writer waits for another writer's lock before LockHeld.
  std::chrono::milliseconds lock_wait{0};
};

struct StoredModel {
  std::string model_id;
  Json meta;
  std::vector<std::byte> weights;
};

// Embedded file-backed document store. One `<name>.ndjson` per collection,
// index specs in `.indexes.json`, and a `.lock` holding the writer's pid.
class Store {
 public:
  static Store open(const std::filesystem::path& dir, OpenOptions options = {});

  Store(Store&& other) noexcept;
  Store& operator=(Store&& other) noexcept;
  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;
  ~Store();

  const std::filesystem::path& path() const noexcept { return dir_; }
  bool writable() const noexcept { return mode_ == OpenMode::write; }

  std::vector<std::string> collection_names() const;
  bool has_collection(const std::string& name) const { return collections_.count(name) > 0; }
  // Missing collections read as empty.
  const Collection& collection(const std::string& name) const;

  // All-or-nothing append. Documents without `_id` get `<collection>:<n>`.
  std::size_t insert_many(const std::string& name, std::vector<Json> docs);
  void create_index(const std::string& name, const std::string& field_path);

  std::vector<Json> aggregate(const std::string& name, const Pipeline& pipeline,
                              Exec exec = Exec::parallel) const;

  // Content-addressed: the id is derived from meta + weights, so storing the
  // same model twice returns the existing id.
  std::string put_model(const Json& meta, std::span<const std::byte> weights);
  StoredModel get_model(const std::string& model_id) const;

  // Re-reads every collection file; picks up other writers' flushed appends.
  void reload();

 private:
  Store() = default;

  void require_writable() const;
  void load_collection(const std::string& name, const std::filesystem::path& file);
  void persist_index_specs() const;
  void release_lock() noexcept;

  std::filesystem::path dir_;
  OpenMode mode_ = OpenMode::read;
  bool holds_lock_ = false;
  std::map<std::string, Collection> collections_;
};

// Free-function spellings of the store operations.
inline Store open_store(const std::filesystem::path& dir, OpenOptions options = {}) {
  return Store::open(dir, options);
}

}  // namespace frost::docstore
