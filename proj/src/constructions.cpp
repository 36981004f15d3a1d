#include "walshkit/constructions.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "walshkit/fwht.hpp"
#include "walshkit/numeric.hpp"
#include "walshkit/spectral_ops.hpp"

namespace walshkit::constructions {

namespace {

std::size_t boolean_table_size(int n) {
  if (n < 1) {
    throw DomainError("boolean function needs at least 1 variable");
  }
  if (n > kMaxMaterializedVars) {
    throw CapacityError("boolean table on " + std::to_string(n) +
                        " variables exceeds the materialization cap of " +
                        std::to_string(kMaxMaterializedVars));
  }
  return std::size_t{1} << n;
}

}  // namespace

Boolean01Function::Boolean01Function(int n, std::vector<std::uint8_t> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != boolean_table_size(n)) {
    throw DimensionMismatchError("boolean table has length " +
                                 std::to_string(values_.size()) +
                                 ", expected 2^" + std::to_string(n));
  }
  for (std::uint8_t v : values_) {
    if (v > 1) throw DomainError("boolean table entries must be 0 or 1");
  }
}

Boolean01Function Boolean01Function::constant(int n, int v) {
  if (v != 0 && v != 1) throw DomainError("constant must be 0 or 1");
  return Boolean01Function(
      n, std::vector<std::uint8_t>(boolean_table_size(n),
                                   static_cast<std::uint8_t>(v)));
}

double chebyshev_T(int d, double x) {
  if (d < 0) throw DomainError("chebyshev degree must be nonnegative");
  if (d == 0) return 1.0;
  double prev = 1.0;
  double curr = x;
  for (int i = 1; i < d; ++i) {
    const double next = 2.0 * x * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

CubeFunction chebyshev_function(int n, int d) {
  if (d < 1 || d > n) {
    throw DomainError("chebyshev_function requires 1 <= d <= n");
  }
  const std::size_t size = table_size(n);
  // The value depends only on the number of minus coordinates.
  std::vector<double> by_weight(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) {
    by_weight[w] = chebyshev_T(d, static_cast<double>(n - 2 * w) /
                                      static_cast<double>(n));
  }
  std::vector<Complex> values(size);
  for (std::size_t i = 0; i < size; ++i) {
    values[i] = by_weight[std::popcount(static_cast<std::uint32_t>(i))];
  }
  return CubeFunction(n, std::move(values));
}

const std::array<std::array<int, 3>, 10>& kushilevitz_monomials() {
  static const std::array<std::array<int, 3>, 10> k = {{{1, 2, 5},
                                                        {1, 2, 6},
                                                        {1, 3, 4},
                                                        {1, 3, 6},
                                                        {1, 4, 5},
                                                        {2, 3, 4},
                                                        {2, 3, 5},
                                                        {2, 4, 6},
                                                        {3, 5, 6},
                                                        {4, 5, 6}}};
  return k;
}

const std::array<std::uint32_t, 10>& kushilevitz_monomial_masks() {
  static const std::array<std::uint32_t, 10> masks = [] {
    std::array<std::uint32_t, 10> m{};
    const auto& subsets = kushilevitz_monomials();
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (int var : subsets[i]) m[i] |= 1u << (var - 1);
    }
    return m;
  }();
  return masks;
}

Boolean01Function theta_tilde() {
  const auto& cubics = kushilevitz_monomial_masks();
  std::vector<std::uint8_t> values(64);
  for (std::uint32_t x = 0; x < 64; ++x) {
    const int w = std::popcount(x);
    int value = w - w * (w - 1) / 2;
    for (std::uint32_t mask : cubics) {
      if ((x & mask) == mask) ++value;
    }
    if (value != 0 && value != 1) {
      throw std::logic_error("theta_tilde produced a value outside {0,1}");
    }
    values[x] = static_cast<std::uint8_t>(value);
  }
  return Boolean01Function(6, std::move(values));
}

Boolean01Function compose(const Boolean01Function& outer,
                          const Boolean01Function& inner) {
  const int m = outer.n();
  const int n = inner.n();
  if (m * n > kMaxMaterializedVars) {
    throw CapacityError("composition on " + std::to_string(m * n) +
                        " variables exceeds the materialization cap; use a "
                        "lazy handle instead");
  }
  const std::size_t size = std::size_t{1} << (m * n);
  const std::uint64_t block_mask = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint8_t> values(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    std::uint64_t y = 0;
    for (int i = 0; i < m; ++i) {
      const std::uint64_t block = (x >> (i * n)) & block_mask;
      y |= static_cast<std::uint64_t>(inner.value(block)) << i;
    }
    values[x] = static_cast<std::uint8_t>(outer.value(y));
  }
  return Boolean01Function(m * n, std::move(values));
}

Boolean01Function kushilevitz(int k) {
  if (k < 1) throw DomainError("kushilevitz requires k >= 1");
  if (k != 1) {
    throw CapacityError("kushilevitz on 6^" + std::to_string(k) +
                        " variables cannot be materialized; use "
                        "LazyKushilevitz");
  }
  return theta_tilde();
}

LazyKushilevitz::LazyKushilevitz(int k) : k_(k) {
  if (k < 1) throw DomainError("kushilevitz requires k >= 1");
  if (k > 2) {
    throw CapacityError("lazy point queries support 6^k <= 64 variables, "
                        "i.e. k <= 2");
  }
  n_ = 1;
  for (int i = 0; i < k; ++i) n_ *= 6;
  theta_ = theta_tilde().values();
}

int LazyKushilevitz::eval_rec(std::uint64_t x, int level) const {
  if (level == 1) return theta_[x & 63];
  int width = 1;
  for (int i = 1; i < level; ++i) width *= 6;
  const std::uint64_t block_mask = (std::uint64_t{1} << width) - 1;
  std::uint64_t y = 0;
  for (int i = 0; i < 6; ++i) {
    const std::uint64_t block = (x >> (i * width)) & block_mask;
    y |= static_cast<std::uint64_t>(eval_rec(block, level - 1)) << i;
  }
  return theta_[y];
}

int LazyKushilevitz::evaluate(std::uint64_t x) const { return eval_rec(x, k_); }

int sensitivity_at(const Boolean01Function& f, std::uint64_t x) {
  const int base = f.value(x);
  int count = 0;
  for (int j = 0; j < f.n(); ++j) {
    if (f.value(x ^ (std::uint64_t{1} << j)) != base) ++count;
  }
  return count;
}

int sensitivity_at(const LazyKushilevitz& f, std::uint64_t x) {
  const int base = f.evaluate(x);
  int count = 0;
  for (int j = 0; j < f.n(); ++j) {
    if (f.evaluate(x ^ (std::uint64_t{1} << j)) != base) ++count;
  }
  return count;
}

int sensitivity(const Boolean01Function& f) {
  int best = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    best = std::max(best, sensitivity_at(f, x));
  }
  return best;
}

std::uint64_t kushilevitz_sensitive_input(int k) {
  if (k < 1 || k > 2) {
    throw CapacityError("sensitive-input construction supports k <= 2");
  }
  const Boolean01Function theta = theta_tilde();
  // Lowest fully sensitive input overall, and one per output value.
  std::uint64_t outer = 64;
  std::uint64_t witness[2] = {64, 64};
  for (std::uint64_t x = 0; x < 64; ++x) {
    if (sensitivity_at(theta, x) == 6) {
      if (outer == 64) outer = x;
      const int v = theta.value(x);
      if (witness[v] == 64) witness[v] = x;
    }
  }
  if (outer == 64 || witness[0] == 64 || witness[1] == 64) {
    throw std::logic_error("base function lacks a fully sensitive input for "
                           "one of its output values");
  }
  if (k == 1) return outer;
  // Each block receives a fully sensitive inner input realizing the bit the
  // outer point needs there; every one of the 36 flips then propagates.
  std::uint64_t assembled = 0;
  for (int i = 0; i < 6; ++i) {
    const int needed = static_cast<int>((outer >> i) & 1);
    assembled |= witness[needed] << (i * 6);
  }
  return assembled;
}

CubeFunction to_signs(const Boolean01Function& f) {
  std::vector<Complex> raw(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    raw[x] = static_cast<double>(f.value(x));
  }
  return from_boolean01(CubeFunction(f.n(), std::move(raw)));
}

verify::VerificationReport linf_laplacian_equals_sensitivity_check(
    const Boolean01Function& f) {
  verify::Stopwatch timer;
  if (f.n() > 20) {
    throw CapacityError("exhaustive check supports at most 20 variables");
  }
  const int s = sensitivity(f);
  const CubeFunction signs = to_signs(f);
  // Point-space route: exact integer arithmetic for ±1 tables.
  const double linf = lp_norm(spectral::laplacian_via_partials(signs),
                              std::numeric_limits<double>::infinity());

  verify::VerificationReport report;
  report.check_id = "linf-equals-sensitivity";
  report.params["n"] = std::to_string(f.n());
  report.params["sensitivity"] = std::to_string(s);
  report.observed = linf;
  report.bound = static_cast<double>(s);
  report.verdict = linf == static_cast<double>(s) ? verify::Verdict::pass
                                                  : verify::Verdict::fail;
  report.wall_time_ms = timer.elapsed_ms();
  return report;
}

}  // namespace walshkit::constructions
