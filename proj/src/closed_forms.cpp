#include "opsum/closed_forms.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "opsum/generating_functions.hpp"

namespace opsum {

namespace {

void check_order(unsigned l) { check_degree(l, kDefaultDegreeCap); }

void check_mehler(unsigned l, const MehlerPoint& p) {
  if (l > kMehlerOrderCap) {
    fail(ErrorKind::DegreeCapExceeded,
         "Mehler order " + std::to_string(l) + " exceeds cap " + std::to_string(kMehlerOrderCap));
  }
  require_finite(p.z, "z");
  if (!(std::abs(p.z) < 1.0)) fail(ErrorKind::DomainError, "Mehler variable must satisfy |z| < 1");
  if (std::abs((1.0 - p.z) * (1.0 + p.z)) < kConditionFloor) {
    fail(ErrorKind::IllConditioned, "1 - z^2 is too close to zero");
  }
}

std::uint64_t binomial(unsigned n, unsigned k) {
  // Exact for n <= 64: each quotient is a binomial coefficient; the 128-bit
  // product keeps the numerator from wrapping.
  __extension__ using Wide = unsigned __int128;
  Wide out = 1;
  for (unsigned j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return static_cast<std::uint64_t>(out);
}

// 1 / (l! 4^l) without overflow for l up to the Mehler cap.
double inverse_factorial_four_pow(unsigned l) {
  return std::exp(-std::lgamma(static_cast<double>(l) + 1.0) - 2.0 * l * std::log(2.0));
}

}  // namespace

Complex gegenbauer_sum(double lambda, unsigned l, Complex t, double w) {
  if (l == 0) return gen_gegenbauer(lambda, t, w);
  check_order(l);
  const PolyFamily family = PolyFamily::gegenbauer(lambda);
  const QTransform qt = q_transform(t, w);
  const Complex gen = std::exp(-2.0 * lambda * qt.log_q);
  return gen * ipow(t * qt.xi_scale, l) * eval_poly(family, l, qt.eta);
}

Complex legendre_sum(unsigned l, Complex t, double w) { return gegenbauer_sum(0.5, l, t, w); }

Complex chebyshev_T_sum(unsigned l, Complex t, double w) {
  if (l == 0) {
    fail(ErrorKind::InvalidParameter,
         "chebyshev_T_sum needs l >= 1; the l = 0 series is gen_chebyshev_log");
  }
  check_order(l);
  const QTransform qt = q_transform(t, w);
  return ipow(t * qt.xi_scale, l) * (2.0 / l) * eval_poly(PolyFamily::chebyshev_t(), l, qt.eta);
}

Complex chebyshev_U_sum(unsigned l, Complex t, double w) { return gegenbauer_sum(1.0, l, t, w); }

Complex laguerre_sum(double alpha, unsigned l, Complex t, Complex u) {
  if (l == 0) return gen_laguerre(alpha, t, u);
  check_order(l);
  const PolyFamily family = PolyFamily::laguerre(alpha);
  const Complex gen = gen_laguerre(alpha, t, u);
  const Complex scale = 1.0 / (1.0 - t);
  return gen * ipow(t * scale, l) * eval_poly(family, l, u * scale);
}

Complex hermite_sum(unsigned l, Complex z, Complex x) {
  if (l == 0) return gen_hermite(z, x);
  check_order(l);
  return gen_hermite(z, x) * ipow(z, l) * hermite_over_factorial(l, x - z);
}

Complex mehler_sum_leibniz(unsigned l, const MehlerPoint& p) {
  check_mehler(l, p);
  const double u_minus = 0.5 * (p.x - p.y) * (p.x - p.y);
  const double u_plus = 0.5 * (p.x + p.y) * (p.x + p.y);
  Complex sum = 0.0;
  for (unsigned m = 0; m <= l; ++m) {
    sum += laguerre_sum(-0.5, l - m, p.z, u_minus) * laguerre_sum(-0.5, m, -p.z, u_plus);
  }
  return sum;
}

Complex mehler_sum_laguerre_form(unsigned l, const MehlerPoint& p) {
  if (l == 0) return gen_mehler(p.z, p.x, p.y);
  check_mehler(l, p);
  const PolyFamily family = PolyFamily::laguerre(-0.5);
  const Complex arg_minus = (p.x - p.y) * (p.x - p.y) / (2.0 * (1.0 - p.z));
  const Complex arg_plus = (p.x + p.y) * (p.x + p.y) / (2.0 * (1.0 + p.z));
  const auto lag_minus = eval_poly_sequence(family, l, arg_minus);
  const auto lag_plus = eval_poly_sequence(family, l, arg_plus);
  const Complex ratio = -(1.0 - p.z) / (1.0 + p.z);

  Complex sum = 0.0;
  Complex ratio_pow = 1.0;
  for (unsigned m = 0; m <= l; ++m) {
    sum += ratio_pow * lag_minus[l - m] * lag_plus[m];
    ratio_pow *= ratio;
  }
  return ipow(p.z / (1.0 - p.z), l) * gen_mehler(p.z, p.x, p.y) * sum;
}

Complex mehler_sum_hermite_form(unsigned l, const MehlerPoint& p) {
  if (l == 0) return gen_mehler(p.z, p.x, p.y);
  check_mehler(l, p);
  const PolyFamily family = PolyFamily::hermite();
  // Both 2(1 -+ z) have positive real part, so principal roots are the intended branch.
  const Complex arg_minus = (p.x - p.y) / std::sqrt(2.0 * (1.0 - p.z));
  const Complex arg_plus = (p.x + p.y) / std::sqrt(2.0 * (1.0 + p.z));
  const auto her_minus = eval_poly_sequence(family, 2 * l, arg_minus);
  const auto her_plus = eval_poly_sequence(family, 2 * l, arg_plus);
  const Complex ratio = -(1.0 - p.z) / (1.0 + p.z);

  Complex sum = 0.0;
  Complex ratio_pow = 1.0;
  for (unsigned m = 0; m <= l; ++m) {
    sum += static_cast<double>(binomial(l, m)) * ratio_pow * her_minus[2 * (l - m)] * her_plus[2 * m];
    ratio_pow *= ratio;
  }
  const double sign = l % 2 == 0 ? 1.0 : -1.0;
  return sign * inverse_factorial_four_pow(l) * ipow(p.z / (1.0 - p.z), l) * gen_mehler(p.z, p.x, p.y) * sum;
}

Complex binomial_series_sum(const PolyFamily& family, unsigned l, Complex t, Complex arg) {
  const auto real_w = [&arg]() {
    if (arg.imag() != 0.0) fail(ErrorKind::DomainError, "w must be real");
    return arg.real();
  };
  switch (family.kind()) {
    case PolyFamily::Kind::Gegenbauer: return gegenbauer_sum(family.parameter(), l, t, real_w());
    case PolyFamily::Kind::Legendre: return legendre_sum(l, t, real_w());
    case PolyFamily::Kind::ChebyshevU: return chebyshev_U_sum(l, t, real_w());
    case PolyFamily::Kind::ChebyshevT: return chebyshev_T_sum(l, t, real_w());
    case PolyFamily::Kind::Laguerre: return laguerre_sum(family.parameter(), l, t, arg);
    case PolyFamily::Kind::Hermite: return hermite_sum(l, t, arg);
  }
  return {};
}

}  // namespace opsum
