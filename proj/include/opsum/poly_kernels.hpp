#pragma once

// Classical orthogonal polynomials evaluated by forward three-term recurrence.
//
// Forward recurrence is stable for |arg| of order one, which covers every point
// the closed-form sums produce for |t| < 1; large-|arg| accuracy is not claimed.
// All evaluators are templates over the scalar so the series oracle can run the
// same recurrences in 100-digit arithmetic.

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "opsum/numeric.hpp"

namespace opsum {

inline constexpr unsigned kDefaultDegreeCap = 10'000;

class PolyFamily {
 public:
  enum class Kind { Gegenbauer, Legendre, ChebyshevT, ChebyshevU, Laguerre, Hermite };

  /// C_n^lambda; lambda > -1/2 and lambda != 0 (lambda = 0 is served by chebyshev_t).
  static PolyFamily gegenbauer(double lambda);
  static PolyFamily legendre() { return PolyFamily(Kind::Legendre, 0.5); }
  static PolyFamily chebyshev_t() { return PolyFamily(Kind::ChebyshevT, 0.0); }
  static PolyFamily chebyshev_u() { return PolyFamily(Kind::ChebyshevU, 1.0); }
  /// L_n^alpha; alpha > -1.
  static PolyFamily laguerre(double alpha);
  static PolyFamily hermite() { return PolyFamily(Kind::Hermite, 0.0); }

  Kind kind() const noexcept { return kind_; }

  /// lambda for the Gegenbauer-type families (1/2 for Legendre, 1 for U, 0 for T),
  /// alpha for Laguerre, 0 for Hermite.
  double parameter() const noexcept { return parameter_; }

  /// True for the families whose natural variable is w = cos(theta) in [-1, 1].
  bool on_interval() const noexcept { return kind_ != Kind::Laguerre && kind_ != Kind::Hermite; }

  std::string name() const;

  friend bool operator==(const PolyFamily&, const PolyFamily&) = default;

 private:
  PolyFamily(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_;
  double parameter_;
};

void check_degree(unsigned n, unsigned cap);

/// Stepper over p_0, p_1, ... of one family at one argument.
template <class T>
class PolyRecurrence {
 public:
  using Real = real_t<T>;

  PolyRecurrence(const PolyFamily& family, const T& arg)
      : family_(family), arg_(arg), prev_(T(0)), cur_(T(1)) {}

  unsigned degree() const noexcept { return degree_; }
  const T& value() const noexcept { return cur_; }

  void advance() {
    T next = degree_ == 0 ? first() : step();
    prev_ = cur_;
    cur_ = next;
    ++degree_;
  }

 private:
  T first() const {
    const Real p(family_.parameter());
    switch (family_.kind()) {
      case PolyFamily::Kind::Gegenbauer: return Real(2) * p * arg_;
      case PolyFamily::Kind::Legendre:
      case PolyFamily::Kind::ChebyshevT: return arg_;
      case PolyFamily::Kind::ChebyshevU:
      case PolyFamily::Kind::Hermite: return Real(2) * arg_;
      case PolyFamily::Kind::Laguerre: return (Real(1) + p) - arg_;
    }
    return T(0);
  }

  T step() const {
    const Real n(degree_);
    const Real p(family_.parameter());
    switch (family_.kind()) {
      case PolyFamily::Kind::Gegenbauer:
        return (Real(2) * (n + p) * arg_ * cur_ - (n + Real(2) * p - Real(1)) * prev_) / (n + Real(1));
      case PolyFamily::Kind::Legendre:
        return ((Real(2) * n + Real(1)) * arg_ * cur_ - n * prev_) / (n + Real(1));
      case PolyFamily::Kind::ChebyshevT:
      case PolyFamily::Kind::ChebyshevU:
        return Real(2) * arg_ * cur_ - prev_;
      case PolyFamily::Kind::Laguerre:
        return (((Real(2) * n + Real(1)) + p - arg_) * cur_ - (n + p) * prev_) / (n + Real(1));
      case PolyFamily::Kind::Hermite:
        return Real(2) * arg_ * cur_ - Real(2) * n * prev_;
    }
    return T(0);
  }

  PolyFamily family_;
  T arg_;
  T prev_;
  T cur_;
  unsigned degree_ = 0;
};

/// p_n(arg) for the given family.
template <class T>
T eval_poly(const PolyFamily& family, unsigned n, const T& arg, unsigned cap = kDefaultDegreeCap) {
  check_degree(n, cap);
  PolyRecurrence<T> rec(family, arg);
  while (rec.degree() < n) rec.advance();
  return rec.value();
}

/// p_0(arg) .. p_{n_max}(arg) from a single recurrence pass; element k is
/// bit-identical to eval_poly(family, k, arg).
template <class T>
std::vector<T> eval_poly_sequence(const PolyFamily& family, unsigned n_max, const T& arg,
                                  unsigned cap = kDefaultDegreeCap) {
  check_degree(n_max, cap);
  std::vector<T> out;
  out.reserve(std::size_t{n_max} + 1);
  PolyRecurrence<T> rec(family, arg);
  out.push_back(rec.value());
  while (rec.degree() < n_max) {
    rec.advance();
    out.push_back(rec.value());
  }
  return out;
}

/// H_n(x) / n!, which stays bounded where H_n itself overflows.
template <class T>
T hermite_over_factorial(unsigned n, const T& x, unsigned cap = kDefaultDegreeCap) {
  using Real = real_t<T>;
  check_degree(n, cap);
  T prev(0);
  T cur(1);
  for (unsigned k = 0; k < n; ++k) {
    T next = k == 0 ? Real(2) * x : (Real(2) * x * cur - Real(2) * prev) / Real(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Stepper over h_n(x) = H_n(x) / sqrt(2^n n!); h_{n+1} = sqrt(2/(n+1)) x h_n - sqrt(n/(n+1)) h_{n-1}.
template <class T>
class NormalizedHermite {
 public:
  using Real = real_t<T>;

  explicit NormalizedHermite(const T& x) : x_(x), prev_(T(0)), cur_(T(1)) {}

  unsigned degree() const noexcept { return degree_; }
  const T& value() const noexcept { return cur_; }

  void advance() {
    using std::sqrt;
    const Real n(degree_);
    const Real a = sqrt(Real(2) / (n + Real(1)));
    const Real b = sqrt(n / (n + Real(1)));
    T next = a * x_ * cur_ - b * prev_;
    prev_ = cur_;
    cur_ = next;
    ++degree_;
  }

  /// Divides the carried pair by `factor`; used by callers that track a log scale.
  void rescale(const Real& factor) {
    prev_ /= factor;
    cur_ /= factor;
  }

 private:
  T x_;
  T prev_;
  T cur_;
  unsigned degree_ = 0;
};

}  // namespace opsum
