#include "walshkit/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "walshkit/fwht.hpp"
#include "walshkit/numeric.hpp"
#include "walshkit/spectral_ops.hpp"

namespace walshkit::interp {

namespace {

constexpr double kRealTol = 1e-12;

// Maximizes a unimodal-ish fn on [a, b]; returns the best value seen.
double golden_section_max(const std::function<double(double)>& fn, double a,
                          double b, int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = fn(x1);
  double f2 = fn(x2);
  double best = std::max({fn(a), fn(b), f1, f2});
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = fn(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = fn(x1);
    }
    best = std::max({best, f1, f2});
  }
  return best;
}

}  // namespace

InterpolationParams make_params(double p, double eps, int k) {
  if (!(p > 1.0) || std::isinf(p)) {
    throw DomainError("interpolation requires p in (1, inf), got " +
                      format_double(p));
  }
  if (p == 2.0) {
    throw DomainError("p = 2 is degenerate: theta collapses to 0");
  }
  if (!(eps > 0.0)) {
    throw DomainError("eps must be positive, got " + format_double(eps));
  }
  if (p < 2.0 && eps >= p - 1.0) {
    throw DomainError("for p < 2, eps must stay below p - 1");
  }
  if (k < 1) throw DomainError("k must be at least 1");

  InterpolationParams params;
  params.p = p;
  params.eps = eps;
  params.p_eps = p > 2.0 ? p + eps : p - eps;
  params.theta = (0.5 - 1.0 / p) / (0.5 - 1.0 / params.p_eps);
  params.q = params.p_eps;
  params.q_dual = params.q / (params.q - 1.0);
  params.p_dual = p / (p - 1.0);
  params.k = k;
  params.N = static_cast<double>(k) / (1.0 - params.theta);
  return params;
}

StripPoint::StripPoint(Complex value) : z(value) {
  if (z.real() < 0.0 || z.real() > 1.0) {
    throw DomainError("strip point must satisfy 0 <= Re z <= 1, got Re z = " +
                      format_double(z.real()));
  }
}

CubeFunction build_g_z(const CubeFunction& g, const InterpolationParams& params,
                       Complex z) {
  if (!g.is_real(kRealTol)) {
    throw DomainError("build_g_z requires a real-valued function");
  }
  const Complex w = params.p_dual * (1.0 - z) / 2.0 + params.p_dual * z / params.q_dual;
  const auto vals = g.values();
  std::vector<Complex> out(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double v = vals[i].real();
    if (v == 0.0) {
      out[i] = Complex(0.0, 0.0);
      continue;
    }
    const double sign = v > 0.0 ? 1.0 : -1.0;
    out[i] = sign * std::exp(w * std::log(std::abs(v)));
  }
  return CubeFunction(g.n(), std::move(out));
}

Complex phi(StripPoint z, const CubeFunction& f, const CubeFunction& g,
            const InterpolationParams& params, double gamma) {
  if (!(gamma > 0.0)) {
    throw DomainError("phi requires gamma > 0");
  }
  if (f.n() != g.n()) {
    throw DimensionMismatchError("phi operands live on different cubes");
  }
  const double c = std::abs(1.0 / params.q - 0.5);
  const CubeFunction lf =
      spectral::complex_power(f, params.N * (1.0 - z.z), gamma);
  const CubeFunction gz = build_g_z(g, params, z.z);
  const auto lv = lf.values();
  const auto gv = gz.values();
  // <Lf, conj(g_z)> = mean of Lf * g_z.
  const Complex ip = pairwise_sum(lv.size(), [&](std::size_t i) {
                       return lv[i] * gv[i];
                     }) /
                     static_cast<double>(lv.size());
  return std::exp(z.z * z.z * params.N * kPi * c) * ip;
}

double boundary_bound(double u, const InterpolationParams& params) {
  const double c = std::abs(1.0 / params.q - 0.5);
  return std::exp(((1.0 - u * u) * kPi * c + (kPi * c + 1.0) * std::abs(u)) /
                  (1.0 - params.theta));
}

double boundary_bound_max(const InterpolationParams& params) {
  const auto fn = [&](double u) { return boundary_bound(u, params); };
  const double c = std::abs(1.0 / params.q - 0.5);
  const double stationary = c > 0.0 ? (kPi * c + 1.0) / (2.0 * kPi * c) : 4.0;
  const double hi = std::max(4.0, 2.0 * stationary);
  return golden_section_max(fn, 0.0, hi, 200);
}

verify::VerificationReport three_lines_check(std::span<const StripPoint> samples,
                                             const CubeFunction& f,
                                             const CubeFunction& g,
                                             const InterpolationParams& params,
                                             double gamma,
                                             const ThreeLinesOptions& options) {
  verify::Stopwatch timer;
  const int d = degree(fwht_forward(f), options.degree_tol);
  const double b0 = std::pow(static_cast<double>(d) + gamma, params.N) *
                    lp_norm(f, 2.0);

  const double lhs = std::abs(phi(StripPoint(Complex(params.theta, 0.0)), f, g,
                                  params, gamma));

  bool envelope_ok = true;
  double b1_hat = 0.0;
  double best_u = 0.0;
  for (const StripPoint& sample : samples) {
    const double value = std::abs(phi(sample, f, g, params, gamma));
    if (std::abs(sample.z.real()) <= kRealTol) {
      // Provable Re z = 0 envelope (d + gamma)^N ||f||_2.
      if (value > b0 * (1.0 + 1e-9) + 1e-12) envelope_ok = false;
    } else if (std::abs(sample.z.real() - 1.0) <= kRealTol) {
      if (value > b1_hat) {
        b1_hat = value;
        best_u = sample.z.imag();
      }
    }
  }
  if (options.refine_boundary && b1_hat > 0.0) {
    const auto line1 = [&](double u) {
      return std::abs(phi(StripPoint(Complex(1.0, u)), f, g, params, gamma));
    };
    b1_hat = std::max(b1_hat,
                      golden_section_max(line1, best_u - 1.0, best_u + 1.0, 80));
  }

  const double rhs =
      std::pow(b0, 1.0 - params.theta) * std::pow(b1_hat, params.theta);
  const double margin = rhs - lhs;

  verify::VerificationReport report;
  report.check_id = "three-lines";
  report.params["n"] = std::to_string(f.n());
  report.params["d"] = std::to_string(d);
  report.params["p"] = format_double(params.p);
  report.params["eps"] = format_double(params.eps);
  report.params["k"] = std::to_string(params.k);
  report.params["gamma"] = format_double(gamma);
  report.params["theta"] = format_double(params.theta);
  report.params["N"] = format_double(params.N);
  report.params["samples"] = std::to_string(samples.size());
  report.params["b0"] = format_double(b0);
  report.params["b1_hat"] = format_double(b1_hat);
  report.params["margin"] = format_double(margin);
  report.params["envelope_ok"] = envelope_ok ? "true" : "false";
  report.observed = lhs;
  report.bound = rhs;
  if (!envelope_ok) {
    report.verdict = verify::Verdict::fail;
  } else if (margin >= 0.0) {
    report.verdict = verify::Verdict::pass;
  } else {
    report.verdict = verify::Verdict::inconclusive;
  }
  report.wall_time_ms = timer.elapsed_ms();
  return report;
}

}  // namespace walshkit::interp
