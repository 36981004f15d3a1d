#include "walshkit/fwht.hpp"

#include <vector>

namespace walshkit {

void walsh_hadamard_inplace(std::span<Complex> data) {
  const std::size_t size = data.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const Complex x = data[j];
        const Complex y = data[j + h];
        data[j] = x + y;
        data[j + h] = x - y;
      }
    }
  }
}

Spectrum fwht_forward(const CubeFunction& f) {
  std::vector<Complex> coeffs(f.values().begin(), f.values().end());
  walsh_hadamard_inplace(coeffs);
  const double scale = 1.0 / static_cast<double>(coeffs.size());
  for (Complex& c : coeffs) c *= scale;
  return Spectrum(f.n(), std::move(coeffs));
}

CubeFunction fwht_inverse(const Spectrum& s) {
  std::vector<Complex> values(s.coeffs().begin(), s.coeffs().end());
  walsh_hadamard_inplace(values);
  return CubeFunction(s.n(), std::move(values));
}

}  // namespace walshkit
