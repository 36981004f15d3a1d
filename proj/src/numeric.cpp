#include "walshkit/numeric.hpp"

#include <array>
#include <charconv>

namespace walshkit {

std::string format_double(double x) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  (void)ec;
  return std::string(buf.data(), end);
}

}  // namespace walshkit
