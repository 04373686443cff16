#include "opsum/series_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <type_traits>
#include <vector>

namespace opsum {

namespace {

constexpr double kAbsoluteFloor = 1e-300;
constexpr unsigned kMinTermsPastOrder = 20;
// Allowance per unit of sum |term_n| for the final rounding of each term, and
// the factor applied to the measured double-versus-shadow difference.
constexpr double kTermRounding = 4.0;
constexpr double kShadowSafety = 2.0;

// Standard mode reruns the sum in a 64-bit-mantissa shadow; the difference
// measures the double result's rounding error to about three digits.  Where
// long double is no wider than double the 100-digit types stand in.
constexpr bool kHardwareShadow = std::numeric_limits<long double>::digits >= 64;
using ShadowReal = std::conditional_t<kHardwareShadow, long double, ExtReal>;
using ShadowComplex = std::conditional_t<kHardwareShadow, std::complex<long double>, ExtComplex>;

template <class T>
struct shadow_of {
  using type = T;  // extended mode carries no shadow
};
template <>
struct shadow_of<double> {
  using type = ShadowReal;
};
template <>
struct shadow_of<Complex> {
  using type = ShadowComplex;
};

// Produces c_0, c_1, ... for one series in real arithmetic R.
template <class R>
class CoefficientStream {
 public:
  explicit CoefficientStream(const SeriesSpec& spec)
      : kind_(spec.kind),
        hermite_(spec.kind == SeriesKind::Polynomial && spec.family.kind() == PolyFamily::Kind::Hermite),
        poly_(spec.kind == SeriesKind::ChebyshevTWeighted ? PolyFamily::chebyshev_t() : spec.family, R(spec.arg)),
        mehler_x_(R(spec.arg)),
        mehler_y_(R(spec.arg2)),
        hermite_x_(spec.arg) {}

  R value() const {
    switch (kind_) {
      case SeriesKind::Polynomial:
        return hermite_ ? hermite_cur_ : poly_.value();
      case SeriesKind::ChebyshevTWeighted:
        return degree_ == 0 ? R(0) : R(2) * poly_.value() / R(degree_);
      case SeriesKind::Mehler:
        return mehler_x_.value() * mehler_y_.value();
    }
    return R(0);
  }

  void advance() {
    if (kind_ == SeriesKind::Mehler) {
      mehler_x_.advance();
      mehler_y_.advance();
    } else if (hermite_) {
      // H_n(x)/n!
      R next = degree_ == 0 ? R(2) * hermite_x_
                            : (R(2) * hermite_x_ * hermite_cur_ - R(2) * hermite_prev_) / R(degree_ + 1);
      hermite_prev_ = hermite_cur_;
      hermite_cur_ = next;
    } else {
      poly_.advance();
    }
    ++degree_;
  }

 private:
  SeriesKind kind_;
  bool hermite_;
  unsigned degree_ = 0;
  PolyRecurrence<R> poly_;
  NormalizedHermite<R> mehler_x_;
  NormalizedHermite<R> mehler_y_;
  R hermite_x_;
  R hermite_prev_{0};
  R hermite_cur_{1};
};

// Running partial sum sum_{n >= l} binom(n, l) t^n c_n in scalar type T.
template <class T>
class PartialSum {
 public:
  using Real = real_t<T>;

  PartialSum(const SeriesSpec& spec, const T& t)
      : t_(t), coef_(spec), power_(ipow(t, spec.form == SeriesForm::Binomial ? spec.l : 0)), l_(spec.l) {
    for (unsigned k = 0; k < spec.l; ++k) coef_.advance();
  }

  /// Adds term k and returns it.
  T add() {
    const T term = power_ * (binom_ * coef_.value());
    sum_ += term;
    return term;
  }

  void next() {
    const unsigned n = l_ + k_;
    power_ *= t_;
    binom_ = binom_ * Real(n + 1) / Real(n + 1 - l_);
    coef_.advance();
    ++k_;
  }

  const T& value() const { return sum_; }

 private:
  T t_;
  CoefficientStream<Real> coef_;
  T power_;
  Real binom_{1};
  T sum_{0};
  unsigned l_;
  unsigned k_ = 0;
};

template <class T>
T lift_point(const Complex& t) {
  if constexpr (scalar_traits<T>::is_complex) {
    return lift<T>(t);
  } else {
    return real_t<T>(t.real());
  }
}

// Per-term decay ratio of the tail: the observed window ratio spread over the
// window, but never faster than |t| (n + 1) / (n + 1 - l), the rate the power
// and the binomial weight alone impose, for the series whose coefficients grow
// at most polynomially.
double tail_ratio(const SeriesSpec& spec, unsigned n, double max_last, double max_prev, unsigned window) {
  const double observed = std::pow(max_last / max_prev, 1.0 / window);
  const bool factorial_decay = spec.kind == SeriesKind::Polynomial && spec.family.kind() == PolyFamily::Kind::Hermite;
  if (factorial_decay) return observed;
  const double weight_rate = std::abs(spec.t) * (n + 1.0) / (n + 1.0 - spec.l);
  return std::max(observed, weight_rate);
}

template <class T>
EvalReport run(const SeriesSpec& spec, const PrecisionCtx& ctx) {
  using S = typename shadow_of<T>::type;
  constexpr bool shadowed = !std::is_same_v<S, T>;
  const unsigned window = ctx.tail_window;
  const double u = unit_roundoff<T>();

  PartialSum<T> main(spec, lift_point<T>(spec.t));
  std::optional<PartialSum<S>> shadow;
  if constexpr (shadowed) shadow.emplace(spec, lift_point<S>(spec.t));

  double abs_sum = 0.0;
  std::vector<double> recent(2 * std::size_t{window}, 0.0);

  EvalReport report;
  report.est_abs_error = std::numeric_limits<double>::infinity();

  for (unsigned k = 0; k < ctx.max_terms; ++k) {
    const double mag = magnitude(main.add());
    if constexpr (shadowed) shadow->add();
    abs_sum += mag;
    recent[k % recent.size()] = mag;
    report.terms_used = k + 1;

    if (k + 1 >= recent.size() && k >= kMinTermsPastOrder) {
      double max_last = 0.0;
      double max_prev = 0.0;
      for (unsigned j = 0; j < window; ++j) {
        max_last = std::max(max_last, recent[(k - j) % recent.size()]);
        max_prev = std::max(max_prev, recent[(k - window - j) % recent.size()]);
      }
      const double scale = magnitude(main.value());
      const double threshold = ctx.rel_tol * scale + kAbsoluteFloor;
      if (max_last <= threshold && (max_last == 0.0 || max_last < max_prev)) {
        // The tail starts from the larger window, so a last window that sits in a
        // beat of slowly oscillating coefficients does not shrink the estimate.
        const double ratio = max_last == 0.0 ? 0.0 : tail_ratio(spec, spec.l + k, max_last, max_prev, window);
        const double tail = ratio < 1.0 ? max_prev * ratio / (1.0 - ratio) : std::numeric_limits<double>::infinity();
        double rounding = kTermRounding * u * abs_sum;
        if constexpr (shadowed) {
          rounding += kShadowSafety * std::abs(main.value() - to_complex(shadow->value()));
        }
        const double est = tail + rounding;
        report.est_abs_error = est;
        report.value = to_complex(main.value());
        if (est <= threshold) {
          report.converged = true;
          return report;
        }
        if (rounding > threshold) {
          // More terms only add rounding; the requested tolerance is out of reach.
          report.converged = false;
          return report;
        }
      }
    }

    main.next();
    if constexpr (shadowed) shadow->next();
  }

  report.value = to_complex(main.value());
  report.converged = false;
  return report;
}

void validate_spec(const SeriesSpec& spec) {
  require_finite(spec.t, "t");
  require_finite(spec.arg, "arg");
  require_finite(spec.arg2, "arg2");
  const bool entire = spec.kind == SeriesKind::Polynomial && spec.family.kind() == PolyFamily::Kind::Hermite;
  if (!entire && !(std::abs(spec.t) < 1.0)) {
    std::ostringstream msg;
    msg << "series variable must satisfy |t| < 1 (got " << std::abs(spec.t) << ")";
    fail(ErrorKind::DomainError, msg.str());
  }
  const bool on_interval = spec.kind == SeriesKind::ChebyshevTWeighted ||
                           (spec.kind == SeriesKind::Polynomial && spec.family.on_interval());
  if (on_interval && std::abs(spec.arg) > 1.0) {
    std::ostringstream msg;
    msg << "w must lie in [-1, 1] (got " << spec.arg << ")";
    fail(ErrorKind::DomainError, msg.str());
  }
  if (spec.kind == SeriesKind::ChebyshevTWeighted && spec.l == 0) {
    fail(ErrorKind::InvalidParameter, "the (2/n) T_n series is defined for l >= 1");
  }
}

}  // namespace

void PrecisionCtx::validate() const {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) fail(ErrorKind::InvalidParameter, "rel_tol must be > 0");
  if (tail_window < 2) fail(ErrorKind::InvalidParameter, "tail_window must be >= 2");
  if (max_terms == 0) fail(ErrorKind::InvalidParameter, "max_terms must be >= 1");
}

SeriesSpec SeriesSpec::polynomial(const PolyFamily& family, unsigned l, Complex t, double arg) {
  SeriesSpec spec;
  spec.kind = SeriesKind::Polynomial;
  spec.family = family;
  spec.l = l;
  spec.t = t;
  spec.arg = arg;
  return spec;
}

SeriesSpec SeriesSpec::chebyshev_t_weighted(unsigned l, Complex t, double w) {
  SeriesSpec spec = polynomial(PolyFamily::chebyshev_t(), l, t, w);
  spec.kind = SeriesKind::ChebyshevTWeighted;
  return spec;
}

SeriesSpec SeriesSpec::mehler(unsigned l, Complex z, double x, double y) {
  SeriesSpec spec;
  spec.kind = SeriesKind::Mehler;
  spec.family = PolyFamily::hermite();
  spec.l = l;
  spec.t = z;
  spec.arg = x;
  spec.arg2 = y;
  return spec;
}

EvalReport sum_series(const SeriesSpec& spec, const PrecisionCtx& ctx) {
  ctx.validate();
  validate_spec(spec);
  const bool real_point = spec.t.imag() == 0.0;
  if (ctx.mode == PrecisionMode::Extended) {
    return real_point ? run<ExtReal>(spec, ctx) : run<ExtComplex>(spec, ctx);
  }
  return real_point ? run<double>(spec, ctx) : run<Complex>(spec, ctx);
}

EvalReport sum_chebyshev_T_series(unsigned l, Complex t, double w, const PrecisionCtx& ctx) {
  return sum_series(SeriesSpec::chebyshev_t_weighted(l, t, w), ctx);
}

}  // namespace opsum
