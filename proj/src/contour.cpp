#include "opsum/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "opsum/generating_functions.hpp"

namespace opsum {

namespace {

constexpr double kResidueTolerance = 1e-8;

struct TrapezoidSums {
  Complex full;       // all nodes
  Complex half;       // even nodes only, i.e. the rule with nodes / 2
  double abs_sum = 0; // sum of |integrand| over all nodes
};

// (1/N) sum_k f(center + s_k) s_k^{-power}, s_k = r e^{2 pi i k / N}, fixed index order.
template <class F>
TrapezoidSums trapezoid(F&& f, Complex center, unsigned power, const ContourSpec& c) {
  TrapezoidSums out;
  Complex even = 0.0;
  Complex total = 0.0;
  const double step = 2.0 * std::numbers::pi / c.nodes;
  const double inv_radius_pow = std::pow(c.radius, -static_cast<double>(power));
  for (unsigned k = 0; k < c.nodes; ++k) {
    const double angle = step * k;
    const Complex s = std::polar(c.radius, angle);
    const Complex weight = std::polar(inv_radius_pow, -angle * power);
    const Complex value = f(center + s) * weight;
    total += value;
    if (k % 2 == 0) even += value;
    out.abs_sum += std::abs(value);
  }
  out.full = total / static_cast<double>(c.nodes);
  out.half = even / static_cast<double>(c.nodes / 2);
  out.abs_sum /= c.nodes;
  return out;
}

void require_inside(Complex t, const ContourSpec& c) {
  if (!(std::abs(t) + c.radius < 1.0)) {
    std::ostringstream msg;
    msg << "translated contour leaves the unit disk: |t| + r = " << std::abs(t) + c.radius;
    fail(ErrorKind::DomainError, msg.str());
  }
}

ContourResult finish(const TrapezoidSums& sums, Complex t_pow) {
  ContourResult out;
  out.value = t_pow * sums.full;
  const double rounding = 8.0 * unit_roundoff<double>() * std::abs(t_pow) * sums.abs_sum;
  out.est_abs_error = rounding + std::abs(t_pow) * std::abs(sums.full - sums.half);
  return out;
}

}  // namespace

void ContourSpec::validate() const {
  if (!(radius > 0.0 && radius < 1.0)) fail(ErrorKind::DomainError, "contour radius must lie in (0, 1)");
  if (nodes < 16) fail(ErrorKind::InvalidParameter, "contour needs at least 16 nodes");
  if (nodes % 2 != 0) fail(ErrorKind::InvalidParameter, "contour node count must be even");
}

ContourSpec ContourSpec::translated(Complex t, unsigned nodes) {
  return ContourSpec{std::min(0.5, 0.5 * (1.0 - std::abs(t))), nodes};
}

Complex coefficient_by_contour(const PolyFamily& family, unsigned n, double arg, const ContourSpec& c) {
  c.validate();
  check_degree(n, kDefaultDegreeCap);
  if (family.kind() == PolyFamily::Kind::ChebyshevT && n == 0) return 1.0;

  const auto gen = [&](Complex s) { return generating_function(family, s, arg); };
  Complex coefficient = trapezoid(gen, 0.0, n, c).full;

  if (family.kind() == PolyFamily::Kind::Hermite) {
    coefficient *= std::exp(std::lgamma(static_cast<double>(n) + 1.0));
  } else if (family.kind() == PolyFamily::Kind::ChebyshevT) {
    coefficient *= 0.5 * n;
  }

  if (std::abs(coefficient.imag()) > kResidueTolerance * std::max(1.0, std::abs(coefficient.real()))) {
    std::ostringstream msg;
    msg << "imaginary residue " << coefficient.imag() << " for a real coefficient";
    fail(ErrorKind::QuadratureDiverged, msg.str());
  }
  return coefficient;
}

ContourResult derivative_series_by_contour_report(const PolyFamily& family, unsigned l, Complex t,
                                                  Complex arg, const ContourSpec& c) {
  c.validate();
  require_finite(t, "t");
  check_degree(l, kDefaultDegreeCap);
  if (family.kind() != PolyFamily::Kind::Hermite) require_inside(t, c);
  const auto gen = [&](Complex s) { return generating_function(family, s, arg); };
  return finish(trapezoid(gen, t, l, c), ipow(t, l));
}

Complex derivative_series_by_contour(const PolyFamily& family, unsigned l, Complex t, Complex arg,
                                     const ContourSpec& c) {
  return derivative_series_by_contour_report(family, l, t, arg, c).value;
}

ContourResult mehler_series_by_contour(unsigned l, const MehlerPoint& p, const ContourSpec& c) {
  c.validate();
  require_finite(p.z, "z");
  check_degree(l, kDefaultDegreeCap);
  require_inside(p.z, c);
  const auto gen = [&](Complex s) { return gen_mehler(s, p.x, p.y); };
  return finish(trapezoid(gen, p.z, l, c), ipow(p.z, l));
}

}  // namespace opsum
