#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "walshkit/cube_function.hpp"
#include "walshkit/fwht.hpp"
#include "walshkit/interpolation.hpp"
#include "walshkit/numeric.hpp"
#include "walshkit/rng.hpp"
#include "walshkit/spectral_ops.hpp"
#include "walshkit/verify.hpp"

using namespace walshkit;
using interp::InterpolationParams;
using interp::StripPoint;

namespace {

CubeFunction random_real(int n, std::uint64_t seed, std::uint64_t stream) {
  Rng rng(seed, stream);
  std::vector<Complex> values(table_size(n));
  for (Complex& v : values) v = rng.gaussian();
  return CubeFunction(n, std::move(values));
}

CubeFunction normalized(const CubeFunction& f, double p) {
  const double norm = lp_norm(f, p);
  std::vector<Complex> values(f.values().begin(), f.values().end());
  for (Complex& v : values) v /= norm;
  return CubeFunction(f.n(), std::move(values));
}

}  // namespace

TEST_CASE("parameter bundle solves the exponent equation") {
  const InterpolationParams a = interp::make_params(4.0, 4.0, 1);
  CHECK(a.p_eps == 8.0);
  CHECK(a.theta == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(a.N == doctest::Approx(3.0).epsilon(1e-12));
  const InterpolationParams a5 = interp::make_params(4.0, 4.0, 5);
  CHECK(a5.N == doctest::Approx(15.0).epsilon(1e-12));

  const InterpolationParams b = interp::make_params(1.5, 0.25, 1);
  CHECK(b.p_eps == 1.25);
  CHECK(b.theta == doctest::Approx(5.0 / 9.0).epsilon(1e-14));

  // 1/p = theta/p_eps + (1-theta)/2 and N (1-theta) = k.
  for (const auto& params : {a, a5, b}) {
    CHECK(1.0 / params.p ==
          doctest::Approx(params.theta / params.p_eps + (1.0 - params.theta) / 2.0)
              .epsilon(1e-12));
    CHECK(params.N * (1.0 - params.theta) ==
          doctest::Approx(params.k).epsilon(1e-12));
  }
}

TEST_CASE("degenerate and out-of-range parameters are rejected") {
  CHECK_THROWS_AS(interp::make_params(2.0, 1.0, 1), DomainError);
  CHECK_THROWS_AS(interp::make_params(1.0, 0.5, 1), DomainError);
  CHECK_THROWS_AS(interp::make_params(4.0, -1.0, 1), DomainError);
  CHECK_THROWS_AS(interp::make_params(1.5, 0.75, 1), DomainError);  // eps >= p-1
  CHECK_THROWS_AS(interp::make_params(4.0, 4.0, 0), DomainError);
}

TEST_CASE("dual exponent identity") {
  for (const auto& [p, eps] : std::vector<std::pair<double, double>>{
           {4.0, 4.0}, {4.0, 2.0}, {1.5, 0.25}, {3.0, 0.5}, {1.2, 0.1}}) {
    const InterpolationParams params = interp::make_params(p, eps, 2);
    CHECK(1.0 / params.p_dual ==
          doctest::Approx((1.0 - params.theta) / 2.0 + params.theta / params.q_dual)
              .epsilon(1e-12));
  }
}

TEST_CASE("deformation family fixes g at z = theta") {
  const InterpolationParams params = interp::make_params(4.0, 4.0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const CubeFunction g = random_real(6, 10, trial);
    const CubeFunction gtheta =
        interp::build_g_z(g, params, Complex(params.theta, 0.0));
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(std::abs(gtheta.value(i) - g.value(i)) <= 1e-12);
    }
  }
}

TEST_CASE("deformation family boundary moduli") {
  const InterpolationParams params = interp::make_params(4.0, 2.0, 1);
  const CubeFunction g = random_real(7, 11, 0);
  for (double u : {-1.5, 0.0, 2.0}) {
    const CubeFunction g0 = interp::build_g_z(g, params, Complex(0.0, u));
    const CubeFunction g1 = interp::build_g_z(g, params, Complex(1.0, u));
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double mag = std::abs(g.value(i).real());
      CHECK(std::abs(std::abs(g0.value(i)) - std::pow(mag, params.p_dual / 2.0)) <=
            1e-10);
      CHECK(std::abs(std::abs(g1.value(i)) -
                     std::pow(mag, params.p_dual / params.q_dual)) <= 1e-10);
    }
  }
}

TEST_CASE("zeros of g stay zeros for every z") {
  const InterpolationParams params = interp::make_params(4.0, 4.0, 1);
  std::vector<Complex> values(table_size(4), 0.0);
  values[3] = 2.5;
  const CubeFunction g(4, std::move(values));
  const CubeFunction gz = interp::build_g_z(g, params, Complex(0.25, 1.5));
  for (std::size_t i = 0; i < gz.size(); ++i) {
    if (i != 3) CHECK(gz.value(i) == Complex(0.0, 0.0));
  }
}

TEST_CASE("deformation rejects non-real g") {
  const InterpolationParams params = interp::make_params(4.0, 4.0, 1);
  std::vector<Complex> values(table_size(3), Complex(0.0, 1.0));
  CHECK_THROWS_AS(
      interp::build_g_z(CubeFunction(3, std::move(values)), params, 0.5),
      DomainError);
}

TEST_CASE("pointwise deformation satisfies the Cauchy-Riemann equations") {
  const InterpolationParams params = interp::make_params(4.0, 2.0, 1);
  const CubeFunction g = random_real(5, 12, 0);
  const double h = 1e-4;
  const std::size_t idx = 7;
  REQUIRE(std::abs(g.value(idx).real()) > 1e-3);
  const auto at = [&](double x, double y) {
    return interp::build_g_z(g, params, Complex(x, y)).value(idx);
  };
  for (const Complex z0 : {Complex(0.3, 0.4), Complex(0.7, -1.1)}) {
    const Complex dx = (at(z0.real() + h, z0.imag()) - at(z0.real() - h, z0.imag())) /
                       (2.0 * h);
    const Complex dy = (at(z0.real(), z0.imag() + h) - at(z0.real(), z0.imag() - h)) /
                       (2.0 * h);
    CHECK(std::abs(dx.real() - dy.imag()) <= 1e-6);
    CHECK(std::abs(dx.imag() + dy.real()) <= 1e-6);
  }
}

TEST_CASE("norm bookkeeping of the boundary deformations") {
  const InterpolationParams params = interp::make_params(4.0, 4.0, 1);
  const CubeFunction g = random_real(8, 13, 0);
  const double gp = std::pow(lp_norm(g, params.p_dual), params.p_dual);
  const CubeFunction g0 = interp::build_g_z(g, params, Complex(0.0, 0.8));
  CHECK(std::pow(lp_norm(g0, 2.0), 2.0) == doctest::Approx(gp).epsilon(1e-10));
  const CubeFunction g1 = interp::build_g_z(g, params, Complex(1.0, -0.3));
  CHECK(std::pow(lp_norm(g1, params.q_dual), params.q_dual) ==
        doctest::Approx(gp).epsilon(1e-10));
}

TEST_CASE("phi at theta recovers the pairing with the shifted power") {
  const int n = 8;
  const int d = 3;
  const double gamma = 0.7;
  for (int k : {1, 2}) {
    const InterpolationParams params = interp::make_params(4.0, 4.0, k);
    Rng rng(2025, k);
    const CubeFunction f = verify::random_low_degree(n, d, rng);
    const CubeFunction g = normalized(random_real(n, 77, k), params.p_dual);

    const Complex phi_theta =
        interp::phi(StripPoint(Complex(params.theta, 0.0)), f, g, params, gamma);
    const double c = std::abs(1.0 / params.q - 0.5);
    const Complex recovered =
        std::exp(Complex(-params.theta * params.theta * params.N * kPi * c, 0.0)) *
        phi_theta;

    const CubeFunction lkf =
        spectral::complex_power(f, Complex(static_cast<double>(k), 0.0), gamma);
    const Complex direct = inner_product(lkf, g);
    CHECK(std::abs(recovered - direct) <= 1e-9);
  }
}

TEST_CASE("phi on a character pair has the closed form at z = 0") {
  const int n = 6;
  const std::uint32_t mask = 0b10110;
  const double gamma = 0.9;
  const InterpolationParams params = interp::make_params(4.0, 4.0, 1);
  const CubeFunction w = CubeFunction::character(n, mask);
  const Complex value = interp::phi(StripPoint(Complex(0.0, 0.0)), w, w, params, gamma);
  const double expected = std::pow(std::popcount(mask) + gamma, params.N);
  CHECK(std::abs(value - expected) <= 1e-9 * expected);
}

TEST_CASE("phi obeys the left-boundary envelope on low-degree data") {
  const int n = 8;
  const int d = 3;
  const double gamma = 0.7;
  const InterpolationParams params = interp::make_params(4.0, 4.0, 1);
  Rng rng(31, 0);
  const CubeFunction f = verify::random_low_degree(n, d, rng);
  const CubeFunction g = normalized(random_real(n, 32, 0), params.p_dual);
  const double envelope = std::pow(d + gamma, params.N) * lp_norm(f, 2.0);
  for (int i = 0; i <= 48; ++i) {
    const double u = -3.0 + 6.0 * i / 48.0;
    const Complex value = interp::phi(StripPoint(Complex(0.0, u)), f, g, params, gamma);
    CHECK(std::abs(value) <= envelope * (1.0 + 1e-9));
  }
}

TEST_CASE("phi rejects out-of-strip points and nonpositive gamma") {
  const InterpolationParams params = interp::make_params(4.0, 4.0, 1);
  CHECK_THROWS_AS(StripPoint(Complex(-0.1, 0.0)), DomainError);
  CHECK_THROWS_AS(StripPoint(Complex(1.2, 0.0)), DomainError);
  const CubeFunction f = CubeFunction::character(4, 1);
  CHECK_THROWS_AS(interp::phi(StripPoint(Complex(0.5, 0.0)), f, f, params, 0.0),
                  DomainError);
}

TEST_CASE("boundary envelope closed form, symmetry, and maximum") {
  const InterpolationParams params = interp::make_params(4.0, 4.0, 1);
  const double c = std::abs(1.0 / params.q - 0.5);
  CHECK(interp::boundary_bound(0.0, params) ==
        doctest::Approx(std::exp(kPi * c / (1.0 - params.theta))).epsilon(1e-12));
  for (double u : {0.3, 1.0, 2.5}) {
    CHECK(interp::boundary_bound(u, params) ==
          doctest::Approx(interp::boundary_bound(-u, params)).epsilon(1e-14));
  }

  // Dense grid oracle for the maximum.
  double grid_max = 0.0;
  for (int i = 0; i <= 400000; ++i) {
    grid_max = std::max(grid_max, interp::boundary_bound(i * 1e-5, params));
  }
  CHECK(interp::boundary_bound_max(params) ==
        doctest::Approx(grid_max).epsilon(1e-8));
}

TEST_CASE("three-lines check passes in the closed-form character case") {
  const int n = 6;
  const CubeFunction w = CubeFunction::character(n, 0b111);
  const InterpolationParams params = interp::make_params(4.0, 4.0, 1);
  std::vector<StripPoint> samples;
  for (int i = 0; i <= 64; ++i) {
    const double u = -8.0 + 16.0 * i / 64.0;
    samples.emplace_back(Complex(0.0, u));
    samples.emplace_back(Complex(1.0, u));
  }
  const auto report = interp::three_lines_check(samples, w, w, params, 0.9);
  CHECK(report.verdict == verify::Verdict::pass);
  CHECK(report.observed <= *report.bound);
}

TEST_CASE("three-lines check on random data passes or is inconclusive") {
  const auto report = verify::check_three_lines(8, 3, 4.0, 4.0, 1, 0.7, 65, 3);
  const double margin = std::stod(report.params.at("margin"));
  if (report.verdict == verify::Verdict::pass) {
    CHECK(margin >= 0.0);
  } else {
    CHECK(report.verdict == verify::Verdict::inconclusive);
    CHECK(margin >= -1e-6);
  }
}

TEST_CASE("three-lines check on the zero function") {
  const int n = 5;
  const CubeFunction zero = CubeFunction::zeros(n);
  const CubeFunction g = random_real(n, 40, 0);
  const InterpolationParams params = interp::make_params(4.0, 4.0, 1);
  std::vector<StripPoint> samples = {StripPoint(Complex(0.0, 0.0)),
                                     StripPoint(Complex(1.0, 0.0)),
                                     StripPoint(Complex(1.0, 1.0))};
  const auto report = interp::three_lines_check(samples, zero, g, params, 1.0);
  CHECK(report.observed == 0.0);
  CHECK(*report.bound == 0.0);
  CHECK(report.verdict == verify::Verdict::pass);
}

TEST_CASE("dual-certified bound dominates the direct norm") {
  // ||L^k f||_p equals <L^k f, g*> for the normalized dual witness g*;
  // the three-lines bound for that witness must therefore dominate the
  // directly computed norm.
  const int n = 8;
  const int d = 3;
  const int k = 1;
  const double gamma = 0.7;
  const InterpolationParams params = interp::make_params(4.0, 4.0, k);
  for (int trial = 0; trial < 5; ++trial) {
    Rng rng(500, trial);
    const CubeFunction f = verify::random_low_degree(n, d, rng);
    const CubeFunction lkf =
        spectral::complex_power(f, Complex(static_cast<double>(k), 0.0), gamma);
    const double direct = lp_norm(lkf, params.p);

    std::vector<Complex> dual(lkf.size());
    for (std::size_t i = 0; i < dual.size(); ++i) {
      const double v = lkf.value(i).real();
      dual[i] = v == 0.0 ? 0.0
                         : std::pow(std::abs(v), params.p - 1.0) *
                               (v > 0.0 ? 1.0 : -1.0);
    }
    const CubeFunction gstar =
        normalized(CubeFunction(n, std::move(dual)), params.p_dual);

    std::vector<StripPoint> samples;
    for (int i = 0; i <= 128; ++i) {
      const double u = -8.0 + 16.0 * i / 128.0;
      samples.emplace_back(Complex(0.0, u));
      samples.emplace_back(Complex(1.0, u));
    }
    const auto report = interp::three_lines_check(samples, f, gstar, params, gamma);
    const double c = std::abs(1.0 / params.q - 0.5);
    const double certified =
        std::exp(-params.theta * params.theta * params.N * kPi * c) * *report.bound;
    CHECK(direct <= certified + 1e-8);
  }
}
