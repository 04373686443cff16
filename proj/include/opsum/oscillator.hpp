#pragma once

// Propagator K(x_b, t_b; x_a, t_a) of the linear harmonic oscillator by three
// routes: the truncated eigenfunction expansion, Mehler's kernel, and the
// explicit closed form.
//
// Real times put Mehler's variable z = exp(-i omega dt) on the unit circle, where
// its series does not converge.  The expansion and the Mehler route therefore
// use the regularized time dt - i epsilon / omega, so |z| = exp(-epsilon) < 1.

#include <iosfwd>
#include <vector>

#include "opsum/numeric.hpp"
#include "opsum/series_oracle.hpp"

namespace opsum {

struct OscillatorParams {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double epsilon = 1e-6;

  /// All four strictly positive and finite (InvalidParameter otherwise).
  void validate() const;

  /// sqrt(m omega / hbar), the inverse length scale.
  double alpha() const;
};

struct SpacetimePoint {
  double x_b = 0;
  double t_b = 0;
  double x_a = 0;
  double t_a = 0;
};

/// Normalized eigenfunction u_n(x), built from the normalized Hermite recurrence
/// with the Gaussian and overflow scaling carried in log space.
double eigenfunction(const OscillatorParams& params, unsigned n, double x);

/// u_0(x) .. u_{n_max}(x) in one pass.
std::vector<double> eigenfunction_sequence(const OscillatorParams& params, unsigned n_max, double x);

/// sum_{n=0}^{n_max} exp(-i E_n dtau / hbar) u_n(x_b) u_n(x_a) with the regularized dtau.
/// est_abs_error is a rigorous tail bound from |u_n| <= 1.086435 pi^{-1/4} sqrt(alpha);
/// converged means that bound is within rel_tol * |value|.
EvalReport propagator_expansion(const OscillatorParams& params, const SpacetimePoint& pt, unsigned n_max,
                                double rel_tol = 1e-10);

/// (alpha / sqrt(pi)) exp[-i omega dtau / 2 - alpha^2 (x_b^2 + x_a^2) / 2] M_0(exp(-i omega dtau), alpha x_b, alpha x_a).
Complex propagator_mehler(const OscillatorParams& params, const SpacetimePoint& pt);

/// Unregularized closed form.  The square root follows the epsilon -> 0+ limit of the
/// Mehler route, which is the principal root of -i m omega / (2 pi hbar sin(omega dt))
/// for 0 < omega dt < pi and picks up the Maslov phase on later half-periods.
/// IllConditioned within 1e-8 of a caustic omega dt = k pi.
Complex propagator_explicit(const OscillatorParams& params, const SpacetimePoint& pt);

struct GridRow {
  double x_b = 0;
  Complex value;
};

/// K(x_b, time; x_a, 0) on n_points equally spaced x_b in [x_min, x_max] (x_min alone
/// when n_points == 1).  Uses the explicit form, or the regularized Mehler form at a caustic.
std::vector<GridRow> propagator_grid(const OscillatorParams& params, double time, double x_a, double x_min,
                                     double x_max, unsigned n_points);

/// Header "x_b,re,im,abs", then one row per point with 17 significant digits.
void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows);

}  // namespace opsum
