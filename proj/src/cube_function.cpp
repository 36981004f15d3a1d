#include "walshkit/cube_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "walshkit/numeric.hpp"

namespace walshkit {

CubeFunction::CubeFunction(int n, std::vector<Complex> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != table_size(n)) {
    throw DimensionMismatchError("value table has length " +
                                 std::to_string(values_.size()) +
                                 ", expected 2^" + std::to_string(n));
  }
}

CubeFunction CubeFunction::zeros(int n) {
  return CubeFunction(n, std::vector<Complex>(table_size(n)));
}

CubeFunction CubeFunction::constant(int n, Complex value) {
  return CubeFunction(n, std::vector<Complex>(table_size(n), value));
}

CubeFunction CubeFunction::character(int n, std::uint32_t mask) {
  const std::size_t size = table_size(n);
  if (mask >= size) {
    throw DomainError("character mask out of range for dimension " +
                      std::to_string(n));
  }
  std::vector<Complex> values(size);
  for (std::size_t i = 0; i < size; ++i) {
    values[i] = static_cast<double>(
        character_sign(static_cast<std::uint32_t>(i), mask));
  }
  return CubeFunction(n, std::move(values));
}

CubeFunction CubeFunction::point_indicator(int n, std::uint32_t index) {
  const std::size_t size = table_size(n);
  if (index >= size) {
    throw DomainError("point index out of range for dimension " +
                      std::to_string(n));
  }
  std::vector<Complex> values(size);
  values[index] = 1.0;
  return CubeFunction(n, std::move(values));
}

bool CubeFunction::all_finite() const {
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

double CubeFunction::max_imag_abs() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

Spectrum::Spectrum(int n, std::vector<Complex> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != table_size(n)) {
    throw DimensionMismatchError("coefficient table has length " +
                                 std::to_string(coeffs_.size()) +
                                 ", expected 2^" + std::to_string(n));
  }
}

Spectrum Spectrum::zeros(int n) {
  return Spectrum(n, std::vector<Complex>(table_size(n)));
}

Spectrum Spectrum::unit(int n, std::uint32_t mask) {
  const std::size_t size = table_size(n);
  if (mask >= size) {
    throw DomainError("mask out of range for dimension " + std::to_string(n));
  }
  std::vector<Complex> coeffs(size);
  coeffs[mask] = 1.0;
  return Spectrum(n, std::move(coeffs));
}

double DegreeProfile::total() const {
  double acc = 0.0;
  for (double w : weights) acc += w;
  return acc;
}

double lp_norm(const CubeFunction& f, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw DomainError("lp_norm requires p >= 1, got " + format_double(p));
  }
  const auto vals = f.values();
  if (std::isinf(p)) {
    double m = 0.0;
    for (const Complex& v : vals) m = std::max(m, std::abs(v));
    return m;
  }
  const double mean =
      pairwise_sum(vals.size(),
                   [&](std::size_t i) { return std::pow(std::abs(vals[i]), p); }) /
      static_cast<double>(vals.size());
  return std::pow(mean, 1.0 / p);
}

Complex inner_product(const CubeFunction& f, const CubeFunction& g) {
  if (f.n() != g.n()) {
    throw DimensionMismatchError("inner_product operands have dimensions " +
                                 std::to_string(f.n()) + " and " +
                                 std::to_string(g.n()));
  }
  const auto fv = f.values();
  const auto gv = g.values();
  return pairwise_sum(fv.size(),
                      [&](std::size_t i) { return fv[i] * std::conj(gv[i]); }) /
         static_cast<double>(fv.size());
}

int degree(const Spectrum& s, double tol) {
  if (tol < 0.0) throw DomainError("degree tolerance must be nonnegative");
  int deg = 0;
  const auto coeffs = s.coeffs();
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (std::abs(coeffs[m]) > tol) {
      deg = std::max(deg, std::popcount(static_cast<std::uint32_t>(m)));
    }
  }
  return deg;
}

DegreeProfile degree_profile(const Spectrum& s) {
  DegreeProfile profile;
  profile.weights.assign(static_cast<std::size_t>(s.n()) + 1, 0.0);
  const auto coeffs = s.coeffs();
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    profile.weights[std::popcount(static_cast<std::uint32_t>(m))] +=
        std::norm(coeffs[m]);
  }
  return profile;
}

CubeFunction from_boolean01(const CubeFunction& f01, Boolean01Options opts) {
  const auto vals = f01.values();
  const std::uint32_t mask = static_cast<std::uint32_t>(vals.size() - 1);
  std::vector<Complex> out(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const std::size_t src = opts.reindex_coordinates
                                ? (~static_cast<std::uint32_t>(i)) & mask
                                : i;
    const Complex v = vals[src];
    const double re = v.real();
    const bool is0 = std::abs(re) <= 1e-12;
    const bool is1 = std::abs(re - 1.0) <= 1e-12;
    if (std::abs(v.imag()) > 1e-12 || (!is0 && !is1)) {
      throw DomainError("from_boolean01 requires {0,1} values");
    }
    const double bit = is1 ? 1.0 : 0.0;
    out[i] = opts.remap_values ? 2.0 * bit - 1.0 : bit;
  }
  return CubeFunction(f01.n(), std::move(out));
}

}  // namespace walshkit
