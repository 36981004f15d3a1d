#include "walshkit/spectral_ops.hpp"

#include <cmath>
#include <string>

#include "walshkit/fwht.hpp"
#include "walshkit/numeric.hpp"

namespace walshkit::spectral {

LevelMultiplier LevelMultiplier::identity() {
  LevelMultiplier m;
  m.kind_ = MultiplierKind::identity;
  return m;
}

LevelMultiplier LevelMultiplier::eigenvalue_power(int k) {
  if (k < 0) throw DomainError("eigenvalue_power requires k >= 0");
  if (k == 0) return identity();
  return power(Complex(static_cast<double>(k), 0.0), 0.0);
}

LevelMultiplier LevelMultiplier::power(Complex z, double gamma) {
  if (z.real() < 0.0) {
    throw DomainError("complex power requires Re z >= 0, got " +
                      format_double(z.real()));
  }
  if (gamma < 0.0) {
    throw DomainError("power shift gamma must be nonnegative, got " +
                      format_double(gamma));
  }
  LevelMultiplier m;
  m.kind_ = MultiplierKind::power;
  m.z_ = z;
  m.gamma_ = gamma;
  return m;
}

LevelMultiplier LevelMultiplier::heat(double t, double gamma) {
  if (gamma < 0.0) {
    throw DomainError("heat shift gamma must be nonnegative");
  }
  LevelMultiplier m;
  m.kind_ = MultiplierKind::heat;
  m.t_ = t;
  m.gamma_ = gamma;
  return m;
}

LevelMultiplier LevelMultiplier::project_low(int d) {
  LevelMultiplier m;
  m.kind_ = MultiplierKind::project_low;
  m.d_ = d;
  return m;
}

LevelMultiplier LevelMultiplier::project_tail(int d) {
  LevelMultiplier m;
  m.kind_ = MultiplierKind::project_tail;
  m.d_ = d;
  return m;
}

LevelMultiplier LevelMultiplier::from_rule(std::function<Complex(int)> rule) {
  LevelMultiplier m;
  m.kind_ = MultiplierKind::custom;
  m.rule_ = std::move(rule);
  return m;
}

std::vector<std::optional<Complex>> LevelMultiplier::level_values(int n) const {
  std::vector<std::optional<Complex>> values(static_cast<std::size_t>(n) + 1);
  for (int level = 0; level <= n; ++level) {
    switch (kind_) {
      case MultiplierKind::identity:
        values[level] = Complex(1.0, 0.0);
        break;
      case MultiplierKind::power: {
        const double base = static_cast<double>(level) + gamma_;
        if (base > 0.0) {
          if (z_.imag() == 0.0 && z_.real() >= 0.0 && z_.real() <= 1024.0 &&
              z_.real() == std::floor(z_.real())) {
            // Integer exponents multiply out exactly; Laplacian powers of
            // integer-valued functions must stay integer-valued.
            double value = 1.0;
            for (int e = 0; e < static_cast<int>(z_.real()); ++e) value *= base;
            values[level] = Complex(value, 0.0);
          } else {
            // Real log of a positive base: no branch ambiguity.
            values[level] = std::exp(z_ * std::log(base));
          }
        } else if (z_.real() > 0.0) {
          values[level] = Complex(0.0, 0.0);
        } else {
          values[level] = std::nullopt;  // 0^{iu}
        }
        break;
      }
      case MultiplierKind::heat:
        values[level] = Complex(
            std::exp(-t_ * (static_cast<double>(level) + gamma_)), 0.0);
        break;
      case MultiplierKind::project_low:
        values[level] = Complex(level <= d_ ? 1.0 : 0.0, 0.0);
        break;
      case MultiplierKind::project_tail:
        values[level] = Complex(level >= d_ ? 1.0 : 0.0, 0.0);
        break;
      case MultiplierKind::custom:
        values[level] = rule_(level);
        break;
    }
  }
  return values;
}

Spectrum apply_multiplier(const Spectrum& s, const LevelMultiplier& m, double tol) {
  const auto symbol = m.level_values(s.n());
  const auto coeffs = s.coeffs();
  std::vector<Complex> out(coeffs.size());
  for (std::size_t mask = 0; mask < coeffs.size(); ++mask) {
    const int level = std::popcount(static_cast<std::uint32_t>(mask));
    if (!symbol[level]) {
      if (std::abs(coeffs[mask]) > tol) {
        throw SingularMultiplierError(
            "multiplier undefined on level " + std::to_string(level) +
            " which carries coefficient mass " +
            format_double(std::abs(coeffs[mask])));
      }
      out[mask] = Complex(0.0, 0.0);
      continue;
    }
    out[mask] = *symbol[level] * coeffs[mask];
  }
  return Spectrum(s.n(), std::move(out));
}

CubeFunction apply_multiplier(const CubeFunction& f, const LevelMultiplier& m,
                              double tol) {
  return fwht_inverse(apply_multiplier(fwht_forward(f), m, tol));
}

CubeFunction partial_derivative(const CubeFunction& f, int j) {
  if (j < 1 || j > f.n()) {
    throw DomainError("coordinate " + std::to_string(j) +
                      " out of range 1.." + std::to_string(f.n()));
  }
  const auto vals = f.values();
  std::vector<Complex> out(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    out[i] = 0.5 * (vals[i] - vals[flip_coordinate(static_cast<std::uint32_t>(i), j)]);
  }
  return CubeFunction(f.n(), std::move(out));
}

CubeFunction laplacian_via_partials(const CubeFunction& f) {
  const auto vals = f.values();
  const int n = f.n();
  std::vector<Complex> out(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    Complex acc = static_cast<double>(n) * vals[i];
    for (int j = 1; j <= n; ++j) {
      acc -= vals[flip_coordinate(static_cast<std::uint32_t>(i), j)];
    }
    out[i] = 0.5 * acc;
  }
  return CubeFunction(n, std::move(out));
}

CubeFunction laplacian_power(const CubeFunction& f, int k) {
  if (k < 0) throw DomainError("laplacian_power requires k >= 0");
  return apply_multiplier(f, LevelMultiplier::eigenvalue_power(k));
}

CubeFunction b_operator(const CubeFunction& f) {
  const auto vals = f.values();
  const int n = f.n();
  std::vector<Complex> out(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    Complex acc(0.0, 0.0);
    for (int j = 1; j <= n; ++j) {
      acc += vals[flip_coordinate(static_cast<std::uint32_t>(i), j)];
    }
    out[i] = 0.5 * acc;
  }
  return CubeFunction(n, std::move(out));
}

CubeFunction heat(const CubeFunction& f, double t, bool allow_unstable) {
  if (t < 0.0 && !allow_unstable) {
    throw DomainError(
        "negative-time heat is unstable; pass allow_unstable to opt in");
  }
  return apply_multiplier(f, LevelMultiplier::heat(t));
}

CubeFunction complex_power(const CubeFunction& f, Complex z, double gamma,
                           double tol) {
  return apply_multiplier(f, LevelMultiplier::power(z, gamma), tol);
}

Spectrum project(const Spectrum& s, ProjectionWindow window) {
  if (window.d < 0 || window.d > s.n()) {
    throw DomainError("projection level " + std::to_string(window.d) +
                      " out of range 0.." + std::to_string(s.n()));
  }
  const auto m = window.kind == ProjectionWindow::Kind::low
                     ? LevelMultiplier::project_low(window.d)
                     : LevelMultiplier::project_tail(window.d);
  return apply_multiplier(s, m);
}

CubeFunction project(const CubeFunction& f, ProjectionWindow window) {
  return fwht_inverse(project(fwht_forward(f), window));
}

}  // namespace walshkit::spectral
