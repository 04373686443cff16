#include "doctest.h"

#include <cmath>

#include "opsum/generating_functions.hpp"
#include "opsum/series_oracle.hpp"
#include "support.hpp"

using namespace opsum;
using test::rel_err;
using test::thrown_kind;

TEST_CASE("q_transform examples") {
  const QTransform origin = q_transform(0.0, 0.3);
  CHECK(origin.q == Complex(1.0));
  CHECK(origin.eta == Complex(0.3));
  CHECK(origin.xi_scale == Complex(1.0));

  const QTransform edge = q_transform(0.5, 1.0);
  CHECK(rel_err(edge.q, 0.5) < 1e-15);
  CHECK(rel_err(edge.eta, 1.0) < 1e-15);

  const Complex t(0.0, 0.3);
  const QTransform imag = q_transform(t, 0.5);
  CHECK(rel_err(imag.q * imag.q, 1.0 - 2.0 * 0.5 * t + t * t) < 1e-14);
  CHECK(rel_err(std::exp(imag.log_q), imag.q) < 1e-15);
}

TEST_CASE("q squares back and is continuous from q(0) = 1") {
  test::Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const Complex t = rng.disk(0.95);
    const double w = rng.uniform(-1, 1);
    const QTransform qt = q_transform(t, w);
    CHECK(rel_err(qt.q * qt.q, 1.0 - 2.0 * w * t + t * t) < 1e-14);
    // Following the ray s t, s in [0, 1], q never jumps.
    Complex prev = 1.0;
    for (double s = 0.05; s <= 1.0; s += 0.05) {
      const Complex cur = q_transform(s * t, w).q;
      CHECK(std::abs(cur - prev) < 0.25);
      prev = cur;
    }
  }
}

TEST_CASE("eta stays in [-1, 1] for real t") {
  test::Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    const QTransform qt = q_transform(rng.uniform(-0.99, 0.99), rng.uniform(-1, 1));
    CHECK(std::abs(qt.eta.imag()) < 1e-15);
    CHECK(std::norm(qt.eta) <= 1.0 + 1e-14);
  }
}

TEST_CASE("q_transform errors") {
  CHECK(thrown_kind([] { q_transform(1.0, 0.2); }) == ErrorKind::DomainError);
  CHECK(thrown_kind([] { q_transform(Complex(0.8, 0.7), 0.2); }) == ErrorKind::DomainError);
  CHECK(thrown_kind([] { q_transform(0.2, 1.01); }) == ErrorKind::DomainError);
  CHECK(thrown_kind([] { q_transform(Complex(NAN, 0.0), 0.2); }) == ErrorKind::DomainError);
  // t next to the singular point e^{i theta}.
  const double theta = 1.1;
  const Complex near = std::polar(1.0 - 1e-10, theta);
  CHECK(thrown_kind([&] { q_transform(near, std::cos(theta)); }) == ErrorKind::IllConditioned);
  // w one rounding step outside [-1, 1] is accepted and clamped.
  CHECK_NOTHROW(q_transform(0.3, std::nextafter(1.0, 2.0)));
}

TEST_CASE("Gegenbauer generating function") {
  CHECK(gen_gegenbauer(0.5, 0.0, 0.77) == Complex(1.0));
  CHECK(rel_err(gen_gegenbauer(1.0, 0.5, 1.0), 4.0) < 1e-15);
  const EvalReport series = sum_series(SeriesSpec::polynomial(PolyFamily::legendre(), 0, 0.4, 0.6));
  CHECK(series.converged);
  CHECK(rel_err(gen_gegenbauer(0.5, 0.4, 0.6), series.value) < 1e-12);
  CHECK(thrown_kind([] { gen_gegenbauer(0.0, 0.1, 0.2); }) == ErrorKind::InvalidParameter);
  CHECK(thrown_kind([] { gen_gegenbauer(-0.6, 0.1, 0.2); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("Chebyshev log generating function") {
  CHECK(gen_chebyshev_log(0.0, 0.4) == Complex(0.0));
  CHECK(rel_err(gen_chebyshev_log(0.5, 1.0), -2.0 * std::log(0.5)) < 1e-15);
  const EvalReport series = sum_chebyshev_T_series(1, 0.3, 0.2);
  // The l = 1 series is t d/dt of the log generating function; its l = 0 counterpart
  // is summed directly here from (2/n) T_n.
  Complex direct = 0.0;
  for (unsigned n = 1; n < 200; ++n) {
    direct += std::pow(0.3, n) * 2.0 / n * eval_poly(PolyFamily::chebyshev_t(), n, 0.2);
  }
  CHECK(rel_err(gen_chebyshev_log(0.3, 0.2), direct) < 1e-12);
  CHECK(series.converged);
}

TEST_CASE("log and root share one branch") {
  test::Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    const Complex t = rng.disk(0.95);
    const double w = rng.uniform(-1, 1);
    const Complex q = q_transform(t, w).q;
    CHECK(std::abs(std::exp(gen_chebyshev_log(t, w)) * q * q - 1.0) < 1e-13);
  }
}

TEST_CASE("Laguerre generating function") {
  CHECK(gen_laguerre(0.0, 0.0, 5.0) == Complex(1.0));
  CHECK(rel_err(gen_laguerre(0.0, 0.5, 0.0), 2.0) < 1e-15);
  const EvalReport series = sum_series(SeriesSpec::polynomial(PolyFamily::laguerre(-0.5), 0, 0.3, 1.7));
  CHECK(rel_err(gen_laguerre(-0.5, 0.3, 1.7), series.value) < 1e-12);
  CHECK(thrown_kind([] { gen_laguerre(-1.0, 0.3, 1.0); }) == ErrorKind::InvalidParameter);
  CHECK(thrown_kind([] { gen_laguerre(0.0, 1.0, 1.0); }) == ErrorKind::DomainError);
}

TEST_CASE("Hermite generating function") {
  CHECK(gen_hermite(0.0, 2.3) == Complex(1.0));
  for (double x : {-2.0, 0.3, 1.7}) CHECK(rel_err(gen_hermite(x, x), std::exp(x * x)) < 1e-15);
  const EvalReport series = sum_series(SeriesSpec::polynomial(PolyFamily::hermite(), 0, 0.7, 1.1));
  CHECK(rel_err(gen_hermite(0.7, 1.1), series.value) < 1e-12);
  // Entire: large z is fine.
  CHECK(rel_err(gen_hermite(4.0, 0.5), std::exp(4.0 - 16.0)) < 1e-14);
}

TEST_CASE("Mehler kernel") {
  CHECK(gen_mehler(0.0, 1.3, -0.4) == Complex(1.0));
  CHECK(rel_err(gen_mehler(0.5, 0.0, 0.0), 1.0 / std::sqrt(0.75)) < 1e-15);
  const EvalReport series = sum_series(SeriesSpec::mehler(0, 0.4, 1.0, -0.5));
  CHECK(rel_err(gen_mehler(0.4, 1.0, -0.5), series.value) < 1e-11);
  CHECK(thrown_kind([] { gen_mehler(1.0, 0.0, 0.0); }) == ErrorKind::DomainError);
  CHECK(thrown_kind([] { gen_mehler(Complex(0.0, -1.2), 0.0, 0.0); }) == ErrorKind::DomainError);
  CHECK(thrown_kind([] { gen_mehler(1.0 - 1e-9, 0.0, 0.0); }) == ErrorKind::IllConditioned);
}

TEST_CASE("Mehler kernel factors into two Laguerre generating functions") {
  test::Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const Complex z = rng.disk(0.9);
    const double x = rng.uniform(-3, 3);
    const double y = rng.uniform(-3, 3);
    const Complex lhs = gen_mehler(z, x, y);
    const Complex rhs = gen_laguerre(-0.5, z, 0.5 * (x - y) * (x - y)) * gen_laguerre(-0.5, -z, 0.5 * (x + y) * (x + y));
    CHECK(rel_err(lhs, rhs) < 1e-13);
  }
}

TEST_CASE("functional equations") {
  test::Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    // Gegenbauer, real s and t with |s| + |t| < 0.9.
    const double lambda = rng.lambda();
    const double t = rng.uniform(-0.45, 0.45);
    const double s = rng.uniform(-0.45, 0.45);
    const double w = rng.uniform(-1, 1);
    const QTransform qt = q_transform(t, w);
    const Complex s_scaled = s * qt.xi_scale;
    const double eta = qt.eta.real();
    CHECK(rel_err(gen_gegenbauer(lambda, s + t, w),
                  gen_gegenbauer(lambda, t, w) * gen_gegenbauer(lambda, s_scaled, eta)) < 1e-12);

    const double alpha = rng.uniform(-0.9, 5);
    const double u = rng.uniform(0, 10);
    CHECK(rel_err(gen_laguerre(alpha, s + t, u),
                  gen_laguerre(alpha, t, u) * gen_laguerre(alpha, s / (1 - t), u / (1 - t))) < 1e-12);

    const Complex z = rng.disk(2.0);
    const Complex v = rng.disk(2.0);
    const double x = rng.uniform(-3, 3);
    CHECK(rel_err(gen_hermite(v + z, x), gen_hermite(z, x) * gen_hermite(v, x - z)) < 1e-13);
  }
}

TEST_CASE("generating functions equal the oracle partial sums within the reported bound") {
  // Unconverged reports (rounding above 1e-14) still carry an honest bound.  The
  // closed side is exp(L) and gets 16 ulps times its condition number 1 + |L|.
  test::Rng rng(12);
  const auto slack = [](Complex closed) {
    return 16 * unit_roundoff<double>() * (1.0 + std::abs(std::log(std::abs(closed)))) * std::abs(closed);
  };
  for (int i = 0; i < 200; ++i) {
    const double t = rng.uniform(-0.9, 0.9);
    const double w = rng.uniform(-1, 1);
    const double lambda = rng.lambda();
    const EvalReport geg = sum_series(SeriesSpec::polynomial(PolyFamily::gegenbauer(lambda), 0, t, w));
    REQUIRE(std::isfinite(geg.est_abs_error));
    const Complex geg_closed = gen_gegenbauer(lambda, t, w);
    CHECK(std::abs(geg.value - geg_closed) <= geg.est_abs_error + slack(geg_closed));

    const double alpha = rng.uniform(-0.9, 5);
    const double u = rng.uniform(0, 10);
    const EvalReport lag = sum_series(SeriesSpec::polynomial(PolyFamily::laguerre(alpha), 0, t, u));
    REQUIRE(std::isfinite(lag.est_abs_error));
    const Complex lag_closed = gen_laguerre(alpha, t, u);
    CHECK(std::abs(lag.value - lag_closed) <= lag.est_abs_error + slack(lag_closed));

    const double z = rng.uniform(-2, 2);
    const double x = rng.uniform(-3, 3);
    const EvalReport her = sum_series(SeriesSpec::polynomial(PolyFamily::hermite(), 0, z, x));
    REQUIRE(std::isfinite(her.est_abs_error));
    const Complex her_closed = gen_hermite(z, x);
    CHECK(std::abs(her.value - her_closed) <= her.est_abs_error + slack(her_closed));

    const double y = rng.uniform(-3, 3);
    const EvalReport meh = sum_series(SeriesSpec::mehler(0, t, x, y));
    REQUIRE(std::isfinite(meh.est_abs_error));
    const Complex meh_closed = gen_mehler(t, x, y);
    CHECK(std::abs(meh.value - meh_closed) <= meh.est_abs_error + slack(meh_closed));
  }
}

TEST_CASE("generating_function dispatch") {
  CHECK(generating_function(PolyFamily::legendre(), 0.3, 0.2) == gen_gegenbauer(0.5, 0.3, 0.2));
  CHECK(generating_function(PolyFamily::chebyshev_u(), 0.3, 0.2) == gen_gegenbauer(1.0, 0.3, 0.2));
  CHECK(generating_function(PolyFamily::chebyshev_t(), 0.3, 0.2) == gen_chebyshev_log(0.3, 0.2));
  CHECK(generating_function(PolyFamily::laguerre(0.5), 0.3, 2.0) == gen_laguerre(0.5, 0.3, 2.0));
  CHECK(generating_function(PolyFamily::hermite(), 0.3, 2.0) == gen_hermite(0.3, 2.0));
  CHECK(thrown_kind([] { generating_function(PolyFamily::legendre(), 0.3, Complex(0.2, 0.1)); }) ==
        ErrorKind::DomainError);
}
