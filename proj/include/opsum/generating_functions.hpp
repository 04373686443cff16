#pragma once

// Generating functions of the classical families and the square-root variable
//   q = (1 - 2wt + t^2)^{1/2},  q(0) = 1.
//
// Every fractional power goes through q's factored form
//   q = sqrt(1 - t e^{i theta}) * sqrt(1 - t e^{-i theta}),  w = cos(theta),
// where both factors have positive real part on |t| < 1, so principal roots
// never cross a branch cut and q stays continuous on the disk.

#include "opsum/numeric.hpp"
#include "opsum/poly_kernels.hpp"

namespace opsum {

/// Below this |1 - 2wt + t^2| (or |1 - z^2| for Mehler) a point is IllConditioned.
inline constexpr double kConditionFloor = 1e-8;

struct QTransform {
  Complex q;         // (1 - 2wt + t^2)^{1/2}
  Complex eta;       // (w - t) / q
  Complex xi_scale;  // 1 / q
  Complex log_q;     // log q on the same branch as q
};

/// Requires |t| < 1 and real |w| <= 1 (DomainError), |q^2| >= kConditionFloor (IllConditioned).
QTransform q_transform(Complex t, double w);

/// (1 - 2wt + t^2)^{-lambda}; lambda > -1/2, lambda != 0.
Complex gen_gegenbauer(double lambda, Complex t, double w);

/// -log(1 - 2wt + t^2) = -2 log q, the generating function of (2/n) T_n(w), n >= 1.
Complex gen_chebyshev_log(Complex t, double w);

/// (1 - t)^{-alpha-1} exp(-u t / (1 - t)); alpha > -1, |t| < 1.
Complex gen_laguerre(double alpha, Complex t, Complex u);

/// exp(2xz - z^2); entire in z.
Complex gen_hermite(Complex z, Complex x);

/// log of Mehler's kernel (1 - z^2)^{-1/2} exp{[2xyz - (x^2 + y^2) z^2] / (1 - z^2)},
/// principal branch of log(1 - z^2); |z| < 1.
Complex log_gen_mehler(Complex z, double x, double y);

Complex gen_mehler(Complex z, double x, double y);

/// Generating function whose Taylor coefficients in t are the family's series
/// coefficients: C_n^lambda(w) for the Gegenbauer-type families, (2/n) T_n(w)
/// (n >= 1, constant term 0) for Chebyshev T, L_n^alpha(u) for Laguerre and
/// H_n(x)/n! for Hermite.
Complex generating_function(const PolyFamily& family, Complex t, Complex arg);

}  // namespace opsum
