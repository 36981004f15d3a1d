#include "walshkit/multilinear_poly.hpp"

#include <bit>

#include "walshkit/constructions.hpp"
#include "walshkit/errors.hpp"

namespace walshkit::constructions {

MultilinearPoly MultilinearPoly::from_table(const Boolean01Function& f) {
  // In-place finite-difference transform: a[M] becomes the coefficient of
  // the monomial with support M.
  std::vector<std::int64_t> a(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) a[x] = f.value(x);
  for (int b = 0; b < f.n(); ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (x & bit) a[x] -= a[x ^ bit];
    }
  }
  MultilinearPoly poly;
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] != 0) poly.terms_.emplace(m, a[m]);
  }
  return poly;
}

void MultilinearPoly::add_term(std::uint64_t monomial, std::int64_t coeff) {
  auto [it, inserted] = terms_.emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else if (coeff == 0) {
    terms_.erase(it);
  }
}

std::int64_t MultilinearPoly::coeff(std::uint64_t monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? 0 : it->second;
}

int MultilinearPoly::degree() const {
  int deg = 0;
  for (const auto& [monomial, coeff] : terms_) {
    (void)coeff;
    deg = std::max(deg, std::popcount(monomial));
  }
  return deg;
}

std::int64_t MultilinearPoly::evaluate01(std::uint64_t x) const {
  std::int64_t acc = 0;
  for (const auto& [monomial, coeff] : terms_) {
    if ((monomial & x) == monomial) acc += coeff;
  }
  return acc;
}

MultilinearPoly MultilinearPoly::multiply(const MultilinearPoly& other) const {
  MultilinearPoly result;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      result.add_term(ma | mb, ca * cb);
    }
  }
  return result;
}

MultilinearPoly MultilinearPoly::compose(
    const std::vector<MultilinearPoly>& inners) const {
  MultilinearPoly result;
  for (const auto& [monomial, coeff] : terms_) {
    MultilinearPoly product;
    product.add_term(0, 1);
    std::uint64_t m = monomial;
    while (m != 0) {
      const int var = std::countr_zero(m);
      m &= m - 1;
      if (static_cast<std::size_t>(var) >= inners.size()) {
        throw DomainError("compose: outer variable has no inner polynomial");
      }
      product = product.multiply(inners[var]);
    }
    for (const auto& [pm, pc] : product.terms_) {
      result.add_term(pm, coeff * pc);
    }
  }
  return result;
}

MultilinearPoly MultilinearPoly::shifted(int offset) const {
  MultilinearPoly result;
  for (const auto& [monomial, coeff] : terms_) {
    result.terms_.emplace(monomial << offset, coeff);
  }
  return result;
}

}  // namespace walshkit::constructions
