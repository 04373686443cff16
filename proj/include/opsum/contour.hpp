#pragma once

// Cauchy-integral evaluation of Taylor coefficients and of the binomial series
//
//   p_n      = (1 / 2 pi i) \oint G_0(s) s^{-n-1} ds
//   G_l(t)   = (t^l / 2 pi i) \oint G_0(s + t) s^{-l-1} ds
//
// by the trapezoid rule on a circle |s| = r.  The integrand is analytic and
// periodic in the angle, so the rule converges geometrically in the node count.

#include <cstddef>

#include "opsum/closed_forms.hpp"
#include "opsum/numeric.hpp"
#include "opsum/poly_kernels.hpp"

namespace opsum {

struct ContourSpec {
  double radius = 0.5;
  unsigned nodes = 256;

  /// Radius in (0, 1), at least 16 nodes.
  void validate() const;

  /// r = min(0.5, (1 - |t|) / 2), the default for a contour translated to t.
  static ContourSpec translated(Complex t, unsigned nodes = 256);
};

struct ContourResult {
  Complex value;
  /// Rounding allowance plus the change from halving the node count.
  double est_abs_error = 0.0;
};

/// p_n(arg) from the Taylor coefficient of the family's generating function
/// (scaled by n! for Hermite and n/2 for Chebyshev T).  The imaginary part is
/// kept as a diagnostic; above 1e-8 * max(1, |Re|) it raises QuadratureDiverged.
Complex coefficient_by_contour(const PolyFamily& family, unsigned n, double arg, const ContourSpec& c);

/// The binomial series sum_{n >= l} binom(n, l) t^n c_n of `family` at (t, arg),
/// with c_n the coefficients of generating_function().  Needs |t| + r < 1
/// except for Hermite, whose generating function is entire.
Complex derivative_series_by_contour(const PolyFamily& family, unsigned l, Complex t, Complex arg,
                                     const ContourSpec& c);

ContourResult derivative_series_by_contour_report(const PolyFamily& family, unsigned l, Complex t,
                                                  Complex arg, const ContourSpec& c);

/// Mehler's binomial series from the l-th derivative of gen_mehler; |z| + r < 1.
ContourResult mehler_series_by_contour(unsigned l, const MehlerPoint& p, const ContourSpec& c);

}  // namespace opsum
