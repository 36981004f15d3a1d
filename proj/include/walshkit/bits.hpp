#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "walshkit/errors.hpp"

namespace walshkit {

inline constexpr int kMaxDimension = 30;

// 2^n table length; rejects n outside [1, kMaxDimension].
std::size_t table_size(int n);

// Coordinate encoding: bit j-1 of a point index is 0 when delta_j = +1,
// so the all-plus point is index 0.
inline int coordinate_sign(std::uint32_t index, int j) {
  return ((index >> (j - 1)) & 1u) ? -1 : +1;
}

inline std::uint32_t flip_coordinate(std::uint32_t index, int j) {
  return index ^ (1u << (j - 1));
}

// w_S(delta) for S given as a bitmask: parity of the overlap with the index.
inline int character_sign(std::uint32_t index, std::uint32_t mask) {
  return (std::popcount(index & mask) & 1) ? -1 : +1;
}

std::vector<int> decode_signs(std::uint32_t index, int n);
std::uint32_t encode_signs(std::span<const int> signs);

}  // namespace walshkit
