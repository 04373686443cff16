#include "opsum/oscillator.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "opsum/generating_functions.hpp"
#include "opsum/poly_kernels.hpp"

namespace opsum {

namespace {

// Cramer's bound: |H_n(x)| e^{-x^2/2} <= k 2^{n/2} sqrt(n!).
constexpr double kCramer = 1.086435;
constexpr double kCausticGuard = 1e-8;
constexpr double kRescaleAbove = 1e150;

void require_point(const SpacetimePoint& pt) {
  require_finite(pt.x_b, "x_b");
  require_finite(pt.t_b, "t_b");
  require_finite(pt.x_a, "x_a");
  require_finite(pt.t_a, "t_a");
}

// Distance of phase from the nearest multiple of pi.
double caustic_distance(double phase) {
  const double k = std::round(phase / std::numbers::pi);
  return std::abs(phase - k * std::numbers::pi);
}

void append_number(std::string& line, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  line.append(buf, res.ptr);
}

}  // namespace

void OscillatorParams::validate() const {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(mass) || !positive(omega) || !positive(hbar) || !positive(epsilon)) {
    fail(ErrorKind::InvalidParameter, "mass, omega, hbar and epsilon must be positive and finite");
  }
}

double OscillatorParams::alpha() const { return std::sqrt(mass * omega / hbar); }

std::vector<double> eigenfunction_sequence(const OscillatorParams& params, unsigned n_max, double x) {
  params.validate();
  require_finite(x, "x");
  check_degree(n_max, kDefaultDegreeCap);

  const double alpha = params.alpha();
  const double xi = alpha * x;
  const double log_norm = 0.5 * std::log(alpha) - 0.25 * std::log(std::numbers::pi) - 0.5 * xi * xi;

  std::vector<double> out;
  out.reserve(std::size_t{n_max} + 1);
  NormalizedHermite<double> h(xi);
  double log_scale = 0.0;
  for (unsigned n = 0;; ++n) {
    const double v = h.value();
    out.push_back(v == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(v)) + log_norm + log_scale), v));
    if (n == n_max) break;
    h.advance();
    if (std::abs(h.value()) > kRescaleAbove) {
      h.rescale(kRescaleAbove);
      log_scale += std::log(kRescaleAbove);
    }
  }
  return out;
}

double eigenfunction(const OscillatorParams& params, unsigned n, double x) {
  return eigenfunction_sequence(params, n, x).back();
}

EvalReport propagator_expansion(const OscillatorParams& params, const SpacetimePoint& pt, unsigned n_max,
                                double rel_tol) {
  params.validate();
  require_point(pt);
  const auto ub = eigenfunction_sequence(params, n_max, pt.x_b);
  const auto ua = eigenfunction_sequence(params, n_max, pt.x_a);

  // exp(-i E_n dtau / hbar) = z^{n + 1/2}, z = exp(-i omega dt - epsilon).
  const double phase = params.omega * (pt.t_b - pt.t_a);
  const Complex log_z(-params.epsilon, -phase);
  const Complex z = std::exp(log_z);
  Complex weight = std::exp(0.5 * log_z);
  Complex sum = 0.0;
  for (unsigned n = 0; n <= n_max; ++n) {
    sum += weight * (ub[n] * ua[n]);
    weight *= z;
  }

  const double alpha = params.alpha();
  const double bound = kCramer * kCramer * alpha / std::sqrt(std::numbers::pi);
  EvalReport report;
  report.value = sum;
  report.terms_used = n_max + 1;
  report.est_abs_error =
      bound * std::exp(-params.epsilon * (n_max + 1.5)) / -std::expm1(-params.epsilon);
  report.converged = report.est_abs_error <= rel_tol * std::abs(sum);
  return report;
}

Complex propagator_mehler(const OscillatorParams& params, const SpacetimePoint& pt) {
  params.validate();
  require_point(pt);
  const double alpha = params.alpha();
  const double xb = alpha * pt.x_b;
  const double xa = alpha * pt.x_a;
  // -i omega dtau with dtau = dt - i epsilon / omega.
  const Complex log_z(-params.epsilon, -params.omega * (pt.t_b - pt.t_a));
  const Complex z = std::exp(log_z);
  const Complex log_k = std::log(alpha) - 0.5 * std::log(std::numbers::pi) + 0.5 * log_z -
                        0.5 * (xb * xb + xa * xa) + log_gen_mehler(z, xb, xa);
  return std::exp(log_k);
}

Complex propagator_explicit(const OscillatorParams& params, const SpacetimePoint& pt) {
  params.validate();
  require_point(pt);
  const double phase = params.omega * (pt.t_b - pt.t_a);
  if (caustic_distance(phase) < kCausticGuard) {
    fail(ErrorKind::IllConditioned, "omega (t_b - t_a) is a multiple of pi (caustic)");
  }
  const double alpha = params.alpha();
  const double s = std::sin(phase);
  const double c = std::cos(phase);
  // 1 - exp(-2 i phase), the epsilon -> 0 limit of 1 - z^2; its real part 2 sin^2 > 0.
  const Complex one_minus_z2(2.0 * s * s, std::sin(2.0 * phase));
  const Complex prefactor =
      alpha / std::sqrt(std::numbers::pi) * std::exp(Complex(0.0, -0.5 * phase)) / std::sqrt(one_minus_z2);
  const double xb = pt.x_b;
  const double xa = pt.x_a;
  const Complex exponent(0.0, alpha * alpha / (2.0 * s) * ((xb * xb + xa * xa) * c - 2.0 * xb * xa));
  return prefactor * std::exp(exponent);
}

std::vector<GridRow> propagator_grid(const OscillatorParams& params, double time, double x_a, double x_min,
                                     double x_max, unsigned n_points) {
  params.validate();
  require_finite(time, "time");
  require_finite(x_a, "x_a");
  require_finite(x_min, "x_min");
  require_finite(x_max, "x_max");
  if (n_points == 0) fail(ErrorKind::InvalidParameter, "n_points must be >= 1");
  if (x_max < x_min) fail(ErrorKind::InvalidParameter, "x_max must be >= x_min");

  const bool at_caustic = caustic_distance(params.omega * time) < kCausticGuard;
  std::vector<GridRow> rows;
  rows.reserve(n_points);
  for (unsigned i = 0; i < n_points; ++i) {
    const double x_b = n_points == 1 ? x_min : x_min + (x_max - x_min) * i / (n_points - 1);
    const SpacetimePoint pt{x_b, time, x_a, 0.0};
    rows.push_back({x_b, at_caustic ? propagator_mehler(params, pt) : propagator_explicit(params, pt)});
  }
  return rows;
}

void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows) {
  out << "x_b,re,im,abs\n";
  std::string line;
  for (const auto& row : rows) {
    line.clear();
    append_number(line, row.x_b);
    line += ',';
    append_number(line, row.value.real());
    line += ',';
    append_number(line, row.value.imag());
    line += ',';
    append_number(line, std::abs(row.value));
    line += '\n';
    out << line;
  }
}

}  // namespace opsum
