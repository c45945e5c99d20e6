#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frost {

// 64-bit SipHash-2-4 with a fixed all-zero key.
std::uint64_t hash64(std::span<const std::byte> bytes);
std::uint64_t hash64(std::string_view text);

std::string hex64(std::uint64_t value);
std::uint64_t parse_hex64(std::string_view text);

std::string base64_encode(std::span<const std::byte> bytes);
std::vector<std::byte> base64_decode(std::string_view text);

}  // namespace frost
