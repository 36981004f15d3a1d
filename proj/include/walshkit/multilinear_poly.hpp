#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace walshkit::constructions {

class Boolean01Function;

// Integer-coefficient multilinear polynomial over {0,1} variables, sparse
// in the monomial basis. Monomials are variable bitmasks (up to 64 vars).
// Products reduce x_i^2 = x_i, so multiplication is OR-convolution.
class MultilinearPoly {
 public:
  MultilinearPoly() = default;

  // Exact multilinear interpolation of a truth table (finite-difference
  // transform over the subset lattice).
  static MultilinearPoly from_table(const Boolean01Function& f);

  void add_term(std::uint64_t monomial, std::int64_t coeff);

  std::int64_t coeff(std::uint64_t monomial) const;
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Largest monomial size with nonzero coefficient; 0 for the zero poly.
  int degree() const;

  std::int64_t evaluate01(std::uint64_t x) const;

  MultilinearPoly multiply(const MultilinearPoly& other) const;

  // Substitute variable i of *this by inners[i]; inners are already
  // expressed on the final variable space.
  MultilinearPoly compose(const std::vector<MultilinearPoly>& inners) const;

  // Same polynomial with every variable index shifted up by offset.
  MultilinearPoly shifted(int offset) const;

 private:
  std::unordered_map<std::uint64_t, std::int64_t> terms_;
};

}  // namespace walshkit::constructions
