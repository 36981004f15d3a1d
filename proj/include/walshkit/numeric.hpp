#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace walshkit {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Pairwise (cascade) summation. Fixed association order, so results do
// not depend on how callers schedule the surrounding work.
template <class F>
auto pairwise_sum(std::size_t count, F&& term) -> decltype(term(std::size_t{0})) {
  using Value = decltype(term(std::size_t{0}));
  struct Impl {
    F& f;
    Value run(std::size_t begin, std::size_t len) {
      if (len <= 32) {
        Value acc{};
        for (std::size_t i = 0; i < len; ++i) acc += f(begin + i);
        return acc;
      }
      const std::size_t half = len / 2;
      return run(begin, half) + run(begin + half, len - half);
    }
  };
  Impl impl{term};
  return impl.run(0, count);
}

// Shortest round-trip decimal form, locale-free.
std::string format_double(double x);

}  // namespace walshkit
