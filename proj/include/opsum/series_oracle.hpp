#pragma once

// Brute-force truncated summation of the binomial-weighted series
//
//   sum_{n >= l} binom(n, l) t^n c_n
//
// with c_n = C_n^lambda(w), P_n(w), T_n(w), U_n(w), L_n^alpha(u), H_n(x)/n!,
// (2/n) T_n(w), or H_n(x) H_n(y) / (n! 2^n) for Mehler's kernel.  This is the
// ground truth the closed forms are checked against, so it shares nothing with
// them beyond the polynomial recurrences.

#include "opsum/numeric.hpp"
#include "opsum/poly_kernels.hpp"

namespace opsum {

enum class PrecisionMode {
  Standard,  // IEEE double
  Extended,  // 100 significant decimal digits
};

struct PrecisionCtx {
  double rel_tol = 1e-14;
  unsigned max_terms = 100'000;
  unsigned tail_window = 10;
  PrecisionMode mode = PrecisionMode::Standard;

  void validate() const;
};

struct EvalReport {
  Complex value;
  unsigned terms_used = 0;
  /// Geometric tail estimate plus rounding; +inf when no geometric decay was observed.
  /// Standard mode measures its rounding against a 64-bit-mantissa shadow sum.
  double est_abs_error = 0.0;
  bool converged = false;
};

enum class SeriesKind {
  Polynomial,          // coefficient p_n of a PolyFamily (H_n/n! for Hermite)
  ChebyshevTWeighted,  // coefficient (2/n) T_n(w), l >= 1
  Mehler,              // coefficient H_n(x) H_n(y) / (n! 2^n)
};

enum class SeriesForm {
  Binomial,  // sum_{n >= l} binom(n, l) t^n c_n
  Shifted,   // sum_{m >= 0} binom(l + m, l) t^m c_{l+m}, i.e. the binomial form over t^l
};

struct SeriesSpec {
  SeriesKind kind = SeriesKind::Polynomial;
  PolyFamily family = PolyFamily::legendre();
  unsigned l = 0;
  Complex t;        // t, or z for Hermite and Mehler
  double arg = 0;   // w, u or x
  double arg2 = 0;  // y (Mehler only)
  SeriesForm form = SeriesForm::Binomial;

  static SeriesSpec polynomial(const PolyFamily& family, unsigned l, Complex t, double arg);
  static SeriesSpec chebyshev_t_weighted(unsigned l, Complex t, double w);
  static SeriesSpec mehler(unsigned l, Complex z, double x, double y);

  SeriesSpec shifted() const {
    SeriesSpec out = *this;
    out.form = SeriesForm::Shifted;
    return out;
  }
};

/// Sums until the last tail_window terms are all below rel_tol * |partial sum|,
/// at least l + 20 terms are in, and the tail estimate plus the rounding estimate
/// fits under rel_tol * |partial|.  The tail is geometric from the larger of the
/// last two windows, with per-term ratio no smaller than |t| (n + 1) / (n + 1 - l).
/// Hitting max_terms, or rounding that more terms cannot shrink, yields
/// converged = false.
EvalReport sum_series(const SeriesSpec& spec, const PrecisionCtx& ctx = {});

/// sum_{n >= l} binom(n, l) t^n (2/n) T_n(w); l >= 1.
EvalReport sum_chebyshev_T_series(unsigned l, Complex t, double w, const PrecisionCtx& ctx = {});

}  // namespace opsum
