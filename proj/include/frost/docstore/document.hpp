#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace frost::docstore {

// Objects are std::map-backed, so dump() is already canonical (sorted keys).
using Json = nlohmann::json;

inline std::string canonical(const Json& doc) { return doc.dump(); }

// Dotted-path access ("a.b.2.c"); numeric segments index into arrays.
// Returns nullptr when any segment is missing.
const Json* lookup_path(const Json& doc, std::string_view path);

// Creates intermediate objects as needed.
void set_path(Json& doc, std::string_view path, Json value);

bool is_scalar(const Json& value) noexcept;

// Deep equality where integers and floats compare by numeric value.
bool values_equal(const Json& a, const Json& b);

// Ordering for the comparison operators: numbers against numbers, strings
// against strings, bools against bools. Anything else is not comparable.
std::optional<int> compare_values(const Json& a, const Json& b);

// Total order used by $sort, $min and $max: missing/null < numbers <
// strings < booleans. Throws BadFieldPath for arrays and objects.
int sort_compare(const Json* a, const Json* b, std::string_view path);

}  // namespace frost::docstore
