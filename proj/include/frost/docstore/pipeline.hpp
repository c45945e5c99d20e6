#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "frost/common/exec.hpp"
#include "frost/docstore/document.hpp"

namespace frost::docstore {

using OrderedJson = nlohmann::ordered_json;

enum class MatchOp { eq, ne, gt, gte, lt, lte, in, exists };

struct FieldCondition {
  std::string path;
  MatchOp op;
  Json operand;
};

// Conditions are implicitly ANDed.
struct MatchStage {
  std::vector<FieldCondition> conditions;
};

struct ProjectField {
  std::string path;
  // Empty for plain inclusion; otherwise the source path of a "$ref".
  std::string source;
};

struct ProjectStage {
  bool exclusion = false;
  bool include_id = true;
  std::vector<ProjectField> fields;
};

struct SortStage {
  std::vector<std::pair<std::string, int>> keys;  // +1 ascending, -1 descending
};

struct LimitStage {
  std::size_t n = 0;
};

struct SkipStage {
  std::size_t n = 0;
};

enum class AccumulatorKind { sum, avg, min, max, count };

struct Accumulator {
  std::string output;
  AccumulatorKind kind;
  Json expr;
};

struct GroupStage {
  Json id_expr;
  std::vector<Accumulator> accumulators;
};

struct SampleStage {
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

using Stage =
    std::variant<MatchStage, ProjectStage, SortStage, LimitStage, SkipStage, GroupStage, SampleStage>;

// MongoDB-style stage list: [{"$match": {...}}, {"$sort": {...}}, ...].
class Pipeline {
 public:
  Pipeline() = default;

  // Parsing from text keeps key order, which matters for multi-key $sort.
  // A plain Json object has sorted keys, so sort keys come out ordered by name.
  static Pipeline parse(std::string_view text);
  static Pipeline from_json(const OrderedJson& stages);
  static Pipeline from_json(const Json& stages);

  const std::vector<Stage>& stages() const noexcept { return stages_; }
  const OrderedJson& to_json() const noexcept { return source_; }
  std::string dump() const { return source_.dump(); }
  std::uint64_t hash() const;

 private:
  std::vector<Stage> stages_;
  OrderedJson source_ = OrderedJson::array();
};

bool matches(const MatchStage& stage, const Json& doc);

// Evaluates a group id / accumulator expression ("$path", literal, or an
// object of expressions) against one document.
Json evaluate_expression(const Json& expr, const Json& doc);

// Stages applied left to right. Exec selects the OpenMP $match filter or
// its serial reference.
std::vector<Json> run_stages(std::vector<Json> docs, const Pipeline& pipeline,
                             Exec exec = Exec::parallel);

std::vector<Json> apply_stage(std::vector<Json> docs, const Stage& stage, Exec exec);

}  // namespace frost::docstore
