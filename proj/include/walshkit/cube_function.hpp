#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "walshkit/bits.hpp"

namespace walshkit {

using Complex = std::complex<double>;

inline constexpr double kDegreeTol = 1e-10;

// Dense complex-valued function on the sign cube {-1,+1}^n, stored by
// point index (coordinate encoding in bits.hpp). Values are immutable
// after construction.
class CubeFunction {
 public:
  CubeFunction(int n, std::vector<Complex> values);

  static CubeFunction zeros(int n);
  static CubeFunction constant(int n, Complex value);
  // The character w_S, with S given as a bitmask.
  static CubeFunction character(int n, std::uint32_t mask);
  // Indicator of a single point delta_0 given by its index.
  static CubeFunction point_indicator(int n, std::uint32_t index);

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  Complex value(std::size_t i) const { return values_[i]; }
  std::span<const Complex> values() const { return values_; }

  bool all_finite() const;
  double max_imag_abs() const;
  bool is_real(double tol = 1e-12) const { return max_imag_abs() <= tol; }

 private:
  int n_;
  std::vector<Complex> values_;
};

// Dense Walsh coefficients; entry at bitmask m is the coefficient of w_m.
class Spectrum {
 public:
  Spectrum(int n, std::vector<Complex> coeffs);

  static Spectrum zeros(int n);
  static Spectrum unit(int n, std::uint32_t mask);

  int n() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  Complex coeff(std::uint32_t mask) const { return coeffs_[mask]; }
  std::span<const Complex> coeffs() const { return coeffs_; }

 private:
  int n_;
  std::vector<Complex> coeffs_;
};

// Spectral mass per level: weights[d] = sum over |S| = d of |coeff(S)|^2.
struct DegreeProfile {
  std::vector<double> weights;
  double total() const;
};

// (2^{-n} sum |f|^p)^{1/p}; p = infinity gives the max modulus.
double lp_norm(const CubeFunction& f, double p);

// Hermitian inner product 2^{-n} sum f conj(g).
Complex inner_product(const CubeFunction& f, const CubeFunction& g);

// Largest |S| carrying a coefficient above tol; 0 for the zero spectrum.
int degree(const Spectrum& s, double tol = kDegreeTol);

DegreeProfile degree_profile(const Spectrum& s);

// Conversion from {0,1}-valued tables. remap_values applies v -> 2v-1.
// reindex_coordinates treats the input table as indexed by x in {0,1}^n
// (bit j-1 of the index is x_j) and produces the table of
// delta -> f((delta_1+1)/2, ..., (delta_n+1)/2).
struct Boolean01Options {
  bool remap_values = true;
  bool reindex_coordinates = true;
};
CubeFunction from_boolean01(const CubeFunction& f01, Boolean01Options opts = {});

}  // namespace walshkit
