#pragma once

// Closed-form sums of the binomial-weighted series
//
//   G_l(t) = sum_{n >= l} binom(n, l) t^n c_n = (t^l / l!) d^l/dt^l G_0(t)
//
// for the Gegenbauer, Legendre, Chebyshev, Laguerre and Hermite families, and
// the generalization of Mehler's formula to the l-th derivative of its kernel.
// Each sum is the generating function times the l-th power of a transformed
// variable times the degree-l polynomial at a transformed argument; the
// Chebyshev-T case is the exception and carries no generating-function factor.

#include "opsum/numeric.hpp"
#include "opsum/poly_kernels.hpp"

namespace opsum {

/// Largest l accepted by the Mehler forms, which use exact 64-bit binomials.
inline constexpr unsigned kMehlerOrderCap = 64;

struct MehlerPoint {
  Complex z;  // |z| < 1
  double x = 0;
  double y = 0;
};

/// q^{-2 lambda} (t/q)^l C_l^lambda((w - t)/q); l = 0 is gen_gegenbauer itself.
Complex gegenbauer_sum(double lambda, unsigned l, Complex t, double w);

/// gegenbauer_sum at lambda = 1/2.
Complex legendre_sum(unsigned l, Complex t, double w);

/// (t/q)^l (2/l) T_l((w - t)/q), the sum of binom(n, l) t^n (2/n) T_n(w); l >= 1.
Complex chebyshev_T_sum(unsigned l, Complex t, double w);

/// gegenbauer_sum at lambda = 1.
Complex chebyshev_U_sum(unsigned l, Complex t, double w);

/// (1-t)^{-alpha-1} exp(-ut/(1-t)) (t/(1-t))^l L_l^alpha(u/(1-t)).
Complex laguerre_sum(double alpha, unsigned l, Complex t, Complex u);

/// exp(2xz - z^2) (z^l / l!) H_l(x - z), the sum of binom(n, l) z^n H_n(x) / n!.
Complex hermite_sum(unsigned l, Complex z, Complex x);

/// Sum of binom(n, l) z^n H_n(x) H_n(y) / (n! 2^n) as the Leibniz expansion
///   sum_{m=0}^{l} S_{l-m}^{(-1/2)}(z, (x-y)^2/2) S_m^{(-1/2)}(-z, (x+y)^2/2).
Complex mehler_sum_leibniz(unsigned l, const MehlerPoint& p);

/// Same sum as a finite sum of products of Laguerre polynomials of order -1/2.
Complex mehler_sum_laguerre_form(unsigned l, const MehlerPoint& p);

/// Same sum as a finite sum of products of even-degree Hermite polynomials.
Complex mehler_sum_hermite_form(unsigned l, const MehlerPoint& p);

/// Dispatches to the family's closed form.  For ChebyshevT this is the
/// (2/n)-weighted series, so l = 0 is rejected with InvalidParameter; the plain
/// binom(n, l) t^n T_n(w) series has no closed form here.
Complex binomial_series_sum(const PolyFamily& family, unsigned l, Complex t, Complex arg);

}  // namespace opsum
