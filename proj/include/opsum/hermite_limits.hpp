#pragma once

// The Hermite sum W_l(z, x) as a large-parameter limit of the Gegenbauer and
// Laguerre sums:
//
//   W_l(z, x) = lim_{lambda -> inf} G_l^(lambda)(z / sqrt(lambda), x / sqrt(lambda))
//   W_l(z, x) = lim_{alpha  -> inf} S_l^(alpha)(sqrt(2/alpha) z, alpha (1 - sqrt(2/alpha) x))
//
// Only the finite-parameter side is evaluated; no extrapolation is attempted.

#include "opsum/numeric.hpp"

namespace opsum {

/// gegenbauer_sum(lambda, l, z / sqrt(lambda), x / sqrt(lambda)); needs |z| < sqrt(lambda)
/// and |x| <= sqrt(lambda).
Complex hermite_from_gegenbauer(double lambda, unsigned l, Complex z, double x);

/// laguerre_sum(alpha, l, sqrt(2/alpha) z, alpha (1 - sqrt(2/alpha) x)); needs sqrt(2/alpha) |z| < 1.
Complex hermite_from_laguerre(double alpha, unsigned l, Complex z, double x);

}  // namespace opsum
