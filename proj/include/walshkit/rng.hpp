#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "walshkit/numeric.hpp"

namespace walshkit {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seeded random source backed by std::mt19937_64.
//
// Stream-splitting rule: stream s of base seed b seeds the engine with the
// second splitmix64 output of the state b + (s+1) * 0x9e3779b97f4a7c15.
// Concurrent work units (trials, restarts) each own a stream, so results
// are independent of scheduling.
//
// Gaussians come from an explicit Box-Muller transform;
// std::normal_distribution is implementation-defined and would not
// reproduce across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t state = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    (void)splitmix64(state);
    engine_.seed(splitmix64(state));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace walshkit
