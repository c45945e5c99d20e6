#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace frost {

// splitmix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// First min(k, n) entries of a seeded Fisher-Yates shuffle of 0..n-1.
// Step i swaps slot i with slot i + (rng() % (n - i)), rng = mt19937_64(seed).
std::vector<std::size_t> shuffle_prefix(std::size_t n, std::size_t k, std::uint64_t seed);

// k uniform draws from 0..n-1 with replacement (rng() % n, mt19937_64(seed)).
std::vector<std::size_t> draw_with_replacement(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace frost
