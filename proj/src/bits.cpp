#include "walshkit/bits.hpp"

#include <string>

namespace walshkit {

std::size_t table_size(int n) {
  if (n < 1) {
    throw DomainError("dimension must be at least 1, got " + std::to_string(n));
  }
  if (n > kMaxDimension) {
    throw CapacityError("dimension " + std::to_string(n) +
                        " exceeds dense capacity " + std::to_string(kMaxDimension));
  }
  return std::size_t{1} << n;
}

std::vector<int> decode_signs(std::uint32_t index, int n) {
  std::vector<int> signs(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) signs[j - 1] = coordinate_sign(index, j);
  return signs;
}

std::uint32_t encode_signs(std::span<const int> signs) {
  std::uint32_t index = 0;
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j] < 0) index |= (1u << j);
  }
  return index;
}

}  // namespace walshkit
