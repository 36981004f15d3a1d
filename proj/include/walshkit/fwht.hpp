#pragma once

#include <span>

#include "walshkit/cube_function.hpp"

namespace walshkit {

// In-place unnormalized Walsh-Hadamard butterflies over a power-of-two
// length; applying it twice multiplies the input by the length.
void walsh_hadamard_inplace(std::span<Complex> data);

// Analysis: coeffs[m] = 2^{-n} sum_delta f(delta) w_m(delta).
Spectrum fwht_forward(const CubeFunction& f);

// Unnormalized synthesis; exact inverse of fwht_forward up to round-off.
CubeFunction fwht_inverse(const Spectrum& s);

}  // namespace walshkit
