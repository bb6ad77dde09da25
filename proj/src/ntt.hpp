#pragma once

#include <cstdint>
#include <vector>

#include "tardy/bitvec.hpp"

namespace tardy::detail {

// Number-theoretic transform modulo 2013265921 = 15 * 2^27 + 1
// (primitive root 31). Transform sizes up to 2^27 are supported, and
// 0/1 inputs of those lengths cannot wrap the modulus, so boolean
// convolution counts computed through it are exact.
inline constexpr std::uint32_t kNttMod = 2013265921u;
inline constexpr std::uint32_t kNttRoot = 31u;
inline constexpr std::size_t kNttMaxSize = std::size_t{1} << 27;

// Exact pairwise-sum counts of two bit vectors; result length
// |u| + |v| - 1. Throws std::length_error beyond the transform cap.
std::vector<std::uint32_t> conv_counts(const BitVec& u, const BitVec& v);

}  // namespace tardy::detail
