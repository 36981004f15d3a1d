#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "walshkit/cube_function.hpp"

namespace walshkit::spectral {

enum class MultiplierKind { identity, power, heat, project_low, project_tail, custom };

// Diagonal operator in the Walsh basis whose symbol depends only on the
// level |S|. Symbols are evaluated once per level (n+1 special-function
// calls), never per mask.
class LevelMultiplier {
 public:
  static LevelMultiplier identity();
  // l^k, the k-th power of the cube Laplacian (k = 0 degenerates to identity).
  static LevelMultiplier eigenvalue_power(int k);
  // (l + gamma)^z for Re z >= 0; 0^z = 0 for Re z > 0 and undefined for
  // Re z = 0.
  static LevelMultiplier power(Complex z, double gamma);
  // exp(-t (l + gamma)).
  static LevelMultiplier heat(double t, double gamma = 0.0);
  static LevelMultiplier project_low(int d);
  static LevelMultiplier project_tail(int d);
  static LevelMultiplier from_rule(std::function<Complex(int)> rule);

  MultiplierKind kind() const { return kind_; }
  double gamma() const { return gamma_; }
  Complex exponent() const { return z_; }
  double time() const { return t_; }
  int level_cut() const { return d_; }

  // One entry per level 0..n; nullopt marks an undefined level.
  std::vector<std::optional<Complex>> level_values(int n) const;

 private:
  LevelMultiplier() = default;

  MultiplierKind kind_ = MultiplierKind::identity;
  double gamma_ = 0.0;
  Complex z_{};
  double t_ = 0.0;
  int d_ = 0;
  std::function<Complex(int)> rule_;
};

// coeffs'[m] = symbol(popcount(m)) * coeffs[m]. Throws
// SingularMultiplierError if an undefined level carries a coefficient of
// modulus above tol; below-tol mass on such levels is dropped.
Spectrum apply_multiplier(const Spectrum& s, const LevelMultiplier& m,
                          double tol = 1e-12);

// Same action conjugated by the transform pair.
CubeFunction apply_multiplier(const CubeFunction& f, const LevelMultiplier& m,
                              double tol = 1e-12);

// Half-difference under flipping coordinate j (1-based), in point space.
CubeFunction partial_derivative(const CubeFunction& f, int j);

// Sum of the n partial derivatives, accumulated in point space. Reference
// route for the spectral Laplacian below.
CubeFunction laplacian_via_partials(const CubeFunction& f);

// Spectral route: level symbol l^k.
CubeFunction laplacian_power(const CubeFunction& f, int k);
inline CubeFunction laplacian(const CubeFunction& f) { return laplacian_power(f, 1); }

// Bf(delta) = (1/2) sum_j f(delta with coordinate j flipped), so that
// the Laplacian equals (n/2) I - B.
CubeFunction b_operator(const CubeFunction& f);

// Heat flow exp(-t Laplacian). Negative t grows high levels exponentially
// and must be requested explicitly via allow_unstable.
CubeFunction heat(const CubeFunction& f, double t, bool allow_unstable = false);

// (Laplacian + gamma I)^z for Re z >= 0, gamma >= 0.
CubeFunction complex_power(const CubeFunction& f, Complex z, double gamma,
                           double tol = 1e-12);

struct ProjectionWindow {
  enum class Kind { low, tail };
  Kind kind;
  int d;

  static ProjectionWindow low(int d) { return {Kind::low, d}; }
  static ProjectionWindow tail(int d) { return {Kind::tail, d}; }
};

// Zero out coefficients outside the window (levels <= d, or levels >= d).
Spectrum project(const Spectrum& s, ProjectionWindow window);
CubeFunction project(const CubeFunction& f, ProjectionWindow window);

}  // namespace walshkit::spectral
