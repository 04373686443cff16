#pragma once

// Scalar types shared by every module: the double-precision complex value used
// on the public surface, the fixed 100-digit extended types used by the series
// oracle when it needs to survive heavy cancellation, and long double, which
// the oracle runs alongside double to measure its rounding error.

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "opsum/error.hpp"

namespace opsum {

using Complex = std::complex<double>;

using ExtReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                              boost::multiprecision::et_off>;
using ExtComplex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<100>>,
    boost::multiprecision::et_off>;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  using real = double;
  static constexpr bool is_complex = false;
};

template <>
struct scalar_traits<Complex> {
  using real = double;
  static constexpr bool is_complex = true;
};

template <>
struct scalar_traits<long double> {
  using real = long double;
  static constexpr bool is_complex = false;
};

template <>
struct scalar_traits<std::complex<long double>> {
  using real = long double;
  static constexpr bool is_complex = true;
};

template <>
struct scalar_traits<ExtReal> {
  using real = ExtReal;
  static constexpr bool is_complex = false;
};

template <>
struct scalar_traits<ExtComplex> {
  using real = ExtReal;
  static constexpr bool is_complex = true;
};

template <class T>
using real_t = typename scalar_traits<T>::real;

/// Unit roundoff of the real type underlying T.
template <class T>
double unit_roundoff() {
  using R = real_t<T>;
  if constexpr (std::is_same_v<R, double>) {
    return std::numeric_limits<double>::epsilon() / 2;
  } else {
    return static_cast<double>(std::numeric_limits<R>::epsilon()) / 2;
  }
}

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const Complex& v) { return std::abs(v); }
inline double magnitude(long double v) { return static_cast<double>(std::abs(v)); }
inline double magnitude(const std::complex<long double>& v) { return static_cast<double>(std::abs(v)); }
inline double magnitude(const ExtReal& v) { return static_cast<double>(abs(v)); }
inline double magnitude(const ExtComplex& v) { return static_cast<double>(abs(v)); }

inline Complex to_complex(double v) { return {v, 0.0}; }
inline Complex to_complex(const Complex& v) { return v; }
inline Complex to_complex(long double v) { return {static_cast<double>(v), 0.0}; }
inline Complex to_complex(const std::complex<long double>& v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}
inline Complex to_complex(const ExtReal& v) { return {static_cast<double>(v), 0.0}; }
inline Complex to_complex(const ExtComplex& v) {
  return {static_cast<double>(real(v)), static_cast<double>(imag(v))};
}

template <class T>
T lift(const Complex& v) {
  using R = real_t<T>;
  return T(R(v.real()), R(v.imag()));
}

/// Integer power by repeated squaring; ipow(0, 0) == 1.
template <class T>
T ipow(T base, unsigned n) {
  T result(1);
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

/// log(1 + z) without the cancellation of forming 1 + z for small |z|.
inline Complex log1p(const Complex& z) {
  const double x = z.real();
  const double y = z.imag();
  const double re = 0.5 * std::log1p(x * (2.0 + x) + y * y);
  return {re, std::atan2(y, 1.0 + x)};
}

/// exp(z) - 1 accurate for small |z|.
inline Complex expm1(const Complex& z) {
  const double a = z.real();
  const double b = z.imag();
  const double half_sin = std::sin(0.5 * b);
  const double re = std::expm1(a) * std::cos(b) - 2.0 * half_sin * half_sin;
  return {re, std::exp(a) * std::sin(b)};
}

inline bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) fail(ErrorKind::DomainError, std::string(name) + " must be finite");
}

inline void require_finite(const Complex& z, const char* name) {
  if (!is_finite(z)) fail(ErrorKind::DomainError, std::string(name) + " must be finite");
}

}  // namespace opsum
