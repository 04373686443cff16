#pragma once

// Test-only oracles: explicit-sum polynomials in 50-digit arithmetic, stencil
// derivatives, a seeded random source and relative-error helpers.  Nothing
// here calls into the recurrences the library uses.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "opsum/numeric.hpp"

namespace opsum::test {

using Big = boost::multiprecision::cpp_bin_float_50;

/// Kind of the opsum::Error thrown by fn, or nullopt when it returns normally.
template <class F>
std::optional<ErrorKind> thrown_kind(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline double rel_err(Complex got, Complex want) {
  const double scale = std::abs(want);
  return scale == 0.0 ? std::abs(got - want) : std::abs(got - want) / scale;
}

inline double rel_err(double got, double want) { return rel_err(Complex(got), Complex(want)); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  unsigned integer(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(gen_); }

  /// Uniform on the closed disk |c| <= radius.
  Complex disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
  }

  /// lambda in (-0.4, 5], never 0.
  double lambda() {
    double v = 0.0;
    while (v == 0.0) v = uniform(-0.4, 5.0);
    return v;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// C_n^lambda(x) = sum_k (-1)^k Gamma(n - k + lambda) / (Gamma(lambda) k! (n - 2k)!) (2x)^{n-2k}.
inline Big gegenbauer_explicit(Big lambda, unsigned n, Big x) {
  using boost::math::tgamma;
  Big sum = 0;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    Big term = tgamma(Big(n - k) + lambda) / (tgamma(lambda) * boost::math::factorial<Big>(k) *
                                              boost::math::factorial<Big>(n - 2 * k));
    term *= pow(2 * x, n - 2 * k);
    sum += k % 2 == 0 ? term : -term;
  }
  return sum;
}

/// L_n^alpha(x) = sum_i (-1)^i Gamma(n + alpha + 1) / (Gamma(n - i + 1) Gamma(alpha + i + 1)) x^i / i!.
inline Big laguerre_explicit(Big alpha, unsigned n, Big x) {
  using boost::math::tgamma;
  Big sum = 0;
  for (unsigned i = 0; i <= n; ++i) {
    Big term = tgamma(Big(n) + alpha + 1) /
               (boost::math::factorial<Big>(n - i) * tgamma(alpha + Big(i) + 1) * boost::math::factorial<Big>(i));
    term *= pow(x, i);
    sum += i % 2 == 0 ? term : -term;
  }
  return sum;
}

/// H_n(x) = n! sum_m (-1)^m (2x)^{n-2m} / (m! (n - 2m)!), over any field.
template <class T>
T hermite_explicit(unsigned n, T x) {
  T sum = T(0);
  double nfact = std::tgamma(n + 1.0);
  for (unsigned m = 0; 2 * m <= n; ++m) {
    const double c = nfact / (std::tgamma(m + 1.0) * std::tgamma(n - 2.0 * m + 1.0));
    T term = c * std::pow(T(2) * x, static_cast<int>(n - 2 * m));
    sum += m % 2 == 0 ? term : -term;
  }
  return sum;
}

/// Fornberg's weights for the m-th derivative at 0 on the given offsets.
template <class R = double>
std::vector<R> fornberg_weights(unsigned m, const std::vector<R>& x) {
  const std::size_t n = x.size();
  std::vector<std::vector<R>> c(n, std::vector<R>(m + 1, R(0)));
  R c1 = 1;
  R c4 = x[0];
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min<std::size_t>(i, m);
    R c2 = 1;
    const R c5 = c4;
    c4 = x[i];
    for (std::size_t j = 0; j < i; ++j) {
      const R c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<R> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = c[i][m];
  return out;
}

/// m-th derivative of f at t by an 11-point central stencil of spacing h.
inline Complex stencil_derivative(const std::function<Complex(double)>& f, double t, unsigned m, double h) {
  std::vector<double> offsets;
  for (int k = -5; k <= 5; ++k) offsets.push_back(k);
  const auto wts = fornberg_weights<double>(m, offsets);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < offsets.size(); ++i) sum += wts[i] * f(t + offsets[i] * h);
  return sum / std::pow(h, m);
}

/// The same stencil carried out in 50 digits, for real f.
inline Big stencil_derivative_big(const std::function<Big(Big)>& f, Big t, unsigned m, Big h) {
  std::vector<Big> offsets;
  for (int k = -5; k <= 5; ++k) offsets.push_back(k);
  const auto wts = fornberg_weights<Big>(m, offsets);
  Big sum = 0;
  for (std::size_t i = 0; i < offsets.size(); ++i) sum += wts[i] * f(t + offsets[i] * h);
  return sum / pow(h, m);
}

/// f'(t) = Im f(t + ih) / h for f real on the real axis; exact to rounding for tiny h.
inline double complex_step(const std::function<Complex(Complex)>& f, double t, double h = 1e-30) {
  return f(Complex(t, h)).imag() / h;
}

/// Composite trapezoid rule on n equal panels of [a, b].
template <class F>
auto trapezoid(F&& f, double a, double b, unsigned n) {
  const double h = (b - a) / n;
  auto sum = 0.5 * (f(a) + f(b));
  for (unsigned i = 1; i < n; ++i) sum += f(a + h * i);
  return sum * h;
}

}  // namespace opsum::test
