#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace frost {

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// Whole-string parse; surrounding blanks allowed, anything else rejected.
std::optional<double> parse_double(std::string_view text);

}  // namespace frost
