#pragma once

#include <span>

#include "walshkit/cube_function.hpp"
#include "walshkit/report.hpp"

namespace walshkit::interp {

// Exponent bundle for the three-lines argument. theta solves
// 1/p = theta/p_eps + (1-theta)/2, q = p_eps, and N = k/(1-theta).
struct InterpolationParams {
  double p = 0.0;
  double eps = 0.0;
  double p_eps = 0.0;
  double theta = 0.0;
  double q = 0.0;
  double q_dual = 0.0;
  double p_dual = 0.0;
  int k = 1;
  double N = 0.0;
};

// p in (1, inf) \ {2}; eps > 0, and eps < p-1 when p < 2 (p_eps = p - eps
// there, p + eps for p > 2). p = 2 makes theta collapse to 0 and is
// rejected rather than extrapolated.
InterpolationParams make_params(double p, double eps, int k);

// Point of the closed strip 0 <= Re z <= 1.
struct StripPoint {
  Complex z;
  explicit StripPoint(Complex value);
};

// Pointwise deformation sgn(g) |g|^{p'(1-z)/2 + p' z / q'} of a
// real-valued g. sgn(0) = 0, so zeros of g stay zeros for every z.
CubeFunction build_g_z(const CubeFunction& g, const InterpolationParams& params,
                       Complex z);

// exp(z^2 N pi |1/q - 1/2|) <(Laplacian + gamma)^{N(1-z)} f, conj(g_z)>.
// Holomorphic on the strip; at z = theta it reduces (after removing the
// exponential prefactor) to <(Laplacian + gamma)^k f, g>.
Complex phi(StripPoint z, const CubeFunction& f, const CubeFunction& g,
            const InterpolationParams& params, double gamma);

// exp[((1-u^2) pi |1/q-1/2| + (pi |1/q-1/2| + 1) |u|) / (1-theta)],
// the per-power envelope of |phi| along Re z = 1.
double boundary_bound(double u, const InterpolationParams& params);

// Maximum of boundary_bound over u >= 0 by golden-section search.
double boundary_bound_max(const InterpolationParams& params);

struct ThreeLinesOptions {
  double degree_tol = kDegreeTol;
  // Golden-section polish around the best Re z = 1 sample.
  bool refine_boundary = true;
};

// Samples |phi| on the two boundary lines, forms the three-lines bound
// |phi(theta)| <= B0^{1-theta} * B1hat^theta with B0 = (d+gamma)^N ||f||_2
// and B1hat the empirical Re z = 1 maximum, and records the margin.
// A negative margin is inconclusive (finite samples can understate the
// boundary supremum); violating the provable Re z = 0 envelope fails.
verify::VerificationReport three_lines_check(std::span<const StripPoint> samples,
                                             const CubeFunction& f,
                                             const CubeFunction& g,
                                             const InterpolationParams& params,
                                             double gamma,
                                             const ThreeLinesOptions& options = {});

}  // namespace walshkit::interp
