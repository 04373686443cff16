#include "opsum/generating_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace opsum {

namespace {

void require_unit_disk(const Complex& t, const char* name) {
  require_finite(t, name);
  if (!(std::abs(t) < 1.0)) {
    std::ostringstream msg;
    msg << name << " must satisfy |" << name << "| < 1 (got |" << name << "| = " << std::abs(t) << ")";
    fail(ErrorKind::DomainError, msg.str());
  }
}

// Rounding-level excursions past +-1 (e.g. a computed eta) are clamped.
double require_interval(double w) {
  require_finite(w, "w");
  if (std::abs(w) > 1.0 + 8.0 * std::numeric_limits<double>::epsilon()) {
    std::ostringstream msg;
    msg << "w must lie in [-1, 1] (got " << w << ")";
    fail(ErrorKind::DomainError, msg.str());
  }
  return std::clamp(w, -1.0, 1.0);
}

double real_arg(const Complex& arg, const char* name) {
  if (arg.imag() != 0.0) fail(ErrorKind::DomainError, std::string(name) + " must be real");
  return arg.real();
}

}  // namespace

QTransform q_transform(Complex t, double w) {
  require_unit_disk(t, "t");
  w = require_interval(w);

  // e^{i theta} with cos(theta) = w, sin(theta) >= 0.
  const Complex rot(w, std::sqrt((1.0 - w) * (1.0 + w)));
  const Complex a = 1.0 - t * rot;
  const Complex b = 1.0 - t * std::conj(rot);
  if (std::abs(a * b) < kConditionFloor) {
    fail(ErrorKind::IllConditioned, "1 - 2wt + t^2 is too close to zero");
  }

  QTransform out;
  out.q = std::sqrt(a) * std::sqrt(b);
  out.log_q = 0.5 * (log1p(-t * rot) + log1p(-t * std::conj(rot)));
  out.xi_scale = 1.0 / out.q;
  out.eta = (w - t) * out.xi_scale;
  return out;
}

Complex gen_gegenbauer(double lambda, Complex t, double w) {
  const double order = PolyFamily::gegenbauer(lambda).parameter();
  const QTransform qt = q_transform(t, w);
  return std::exp(-2.0 * order * qt.log_q);
}

Complex gen_chebyshev_log(Complex t, double w) { return -2.0 * q_transform(t, w).log_q; }

Complex gen_laguerre(double alpha, Complex t, Complex u) {
  const double order = PolyFamily::laguerre(alpha).parameter();
  require_unit_disk(t, "t");
  require_finite(u, "u");
  return std::exp(-(order + 1.0) * log1p(-t) - u * t / (1.0 - t));
}

Complex gen_hermite(Complex z, Complex x) {
  require_finite(z, "z");
  require_finite(x, "x");
  return std::exp(z * (2.0 * x - z));
}

Complex log_gen_mehler(Complex z, double x, double y) {
  require_unit_disk(z, "z");
  require_finite(x, "x");
  require_finite(y, "y");
  const Complex one_minus_z2 = (1.0 - z) * (1.0 + z);
  if (std::abs(one_minus_z2) < kConditionFloor) {
    fail(ErrorKind::IllConditioned, "1 - z^2 is too close to zero");
  }
  const Complex exponent = (2.0 * x * y * z - (x * x + y * y) * z * z) / one_minus_z2;
  return -0.5 * std::log(one_minus_z2) + exponent;
}

Complex gen_mehler(Complex z, double x, double y) { return std::exp(log_gen_mehler(z, x, y)); }

Complex generating_function(const PolyFamily& family, Complex t, Complex arg) {
  switch (family.kind()) {
    case PolyFamily::Kind::Gegenbauer:
    case PolyFamily::Kind::Legendre:
    case PolyFamily::Kind::ChebyshevU:
      return gen_gegenbauer(family.parameter(), t, real_arg(arg, "w"));
    case PolyFamily::Kind::ChebyshevT: return gen_chebyshev_log(t, real_arg(arg, "w"));
    case PolyFamily::Kind::Laguerre: return gen_laguerre(family.parameter(), t, arg);
    case PolyFamily::Kind::Hermite: return gen_hermite(t, arg);
  }
  return {};
}

}  // namespace opsum
