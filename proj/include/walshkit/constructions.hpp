#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "walshkit/cube_function.hpp"
#include "walshkit/multilinear_poly.hpp"
#include "walshkit/report.hpp"

namespace walshkit::constructions {

// Dense {0,1}-valued function of n bits; bit j-1 of the table index is x_j.
class Boolean01Function {
 public:
  Boolean01Function(int n, std::vector<std::uint8_t> values);

  static Boolean01Function constant(int n, int v);

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  int value(std::uint64_t x) const { return values_[x]; }
  const std::vector<std::uint8_t>& values() const { return values_; }

 private:
  int n_;
  std::vector<std::uint8_t> values_;
};

// Materialization cap for composed truth tables.
inline constexpr int kMaxMaterializedVars = 24;

// Chebyshev polynomial of the first kind by the three-term recurrence.
double chebyshev_T(int d, double x);

// The radial function delta -> T_d((delta_1 + ... + delta_n)/n). Lies in
// the span of levels <= d, has sup norm exactly 1 (attained at the
// all-plus point), and pushes ||Laplacian f||_inf toward d^2 as n grows.
CubeFunction chebyshev_function(int n, int d);

// The ten cubic supports of the 6-variable base function, as 1-based
// 3-element subsets.
const std::array<std::array<int, 3>, 10>& kushilevitz_monomials();
// Same family as variable bitmasks.
const std::array<std::uint32_t, 10>& kushilevitz_monomial_masks();

// The 6-variable cubic sum x_i - sum x_i x_j + sum_K x_i x_j x_k,
// evaluated over all 64 inputs. {0,1}-valued by construction; a value
// outside {0,1} would be an implementation bug and throws logic_error.
Boolean01Function theta_tilde();

// Block substitution: feeds m disjoint n-bit blocks of the input through
// `inner` and the m results through `outer`. Variable (i, j) of the result
// is flat index (i-1)*n + j.
Boolean01Function compose(const Boolean01Function& outer,
                          const Boolean01Function& inner);

// k-fold self-composition of theta_tilde on 6^k bits, materialized.
// Only k = 1 fits the materialization cap.
Boolean01Function kushilevitz(int k);

// Point-query handle for the k-fold composition; supports 6^k <= 64,
// i.e. k <= 2. Each query costs O(6^k) table lookups.
class LazyKushilevitz {
 public:
  explicit LazyKushilevitz(int k);

  int k() const { return k_; }
  int n() const { return n_; }
  int evaluate(std::uint64_t x) const;

 private:
  int eval_rec(std::uint64_t x, int level) const;

  int k_;
  int n_;
  std::vector<std::uint8_t> theta_;
};

// Number of coordinates whose flip changes the output at x.
int sensitivity_at(const Boolean01Function& f, std::uint64_t x);
int sensitivity_at(const LazyKushilevitz& f, std::uint64_t x);
// Exhaustive maximum over all 2^n inputs.
int sensitivity(const Boolean01Function& f);

// Input of the k-fold composition at which all 6^k flips change the
// output, built recursively from a fully sensitive base input per output
// value. The returned input is meant to be validated by direct flip
// queries, not assumed extremal.
std::uint64_t kushilevitz_sensitive_input(int k);

// ±1-valued image 2 f((delta+1)/2) - 1 of a {0,1} table.
CubeFunction to_signs(const Boolean01Function& f);

// Compares the exhaustive sensitivity of f with the sup norm of the
// Laplacian of its ±1 image; the two are equal for every Boolean function.
verify::VerificationReport linf_laplacian_equals_sensitivity_check(
    const Boolean01Function& f);

}  // namespace walshkit::constructions
