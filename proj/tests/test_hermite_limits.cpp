#include "doctest.h"

#include <cmath>

#include "opsum/closed_forms.hpp"
#include "opsum/generating_functions.hpp"
#include "opsum/hermite_limits.hpp"
#include "support.hpp"

using namespace opsum;
using test::rel_err;
using test::thrown_kind;

namespace {

// Distance to W_l with a unit floor, so zeros of H_l(x - z) do not dominate.
double limit_error(Complex got, unsigned l, Complex z, double x) {
  const Complex want = hermite_sum(l, z, x);
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("Gegenbauer limit examples") {
  CHECK(rel_err(hermite_from_gegenbauer(1e6, 0, 0.5, 0.3), gen_hermite(0.5, 0.3)) < 1e-3);
  CHECK(hermite_from_gegenbauer(1e4, 0, 0.0, 0.37) == 1.0);

  double previous = INFINITY;
  for (double lambda : {1e2, 1e3, 1e4}) {
    const double err = limit_error(hermite_from_gegenbauer(lambda, 2, 0.4, 1.0), 2, 0.4, 1.0);
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("Laguerre limit examples") {
  CHECK(rel_err(hermite_from_laguerre(1e6, 0, 0.5, 0.3), gen_hermite(0.5, 0.3)) < 1e-3);
  CHECK(hermite_from_laguerre(1e4, 3, 0.0, 1.0) == 0.0);

  double previous = INFINITY;
  for (double alpha : {1e2, 1e3, 1e4, 1e5}) {
    const double err = limit_error(hermite_from_laguerre(alpha, 1, 0.3, -0.7), 1, 0.3, -0.7);
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("both limits approach W_l as the parameter grows") {
  // One non-decrease per sweep is tolerated for rounding.
  test::Rng rng(51);
  for (unsigned l = 0; l <= 3; ++l) {
    int geg_violations = 0;
    int lag_violations = 0;
    for (int i = 0; i < 20; ++i) {
      const Complex z = i % 2 == 0 ? Complex(rng.uniform(-1, 1)) : rng.disk(1.0);
      const double x = rng.uniform(-2, 2);
      double geg_prev = INFINITY;
      double lag_prev = INFINITY;
      for (double p : {1e2, 1e3, 1e4}) {
        const double geg = limit_error(hermite_from_gegenbauer(p, l, z, x), l, z, x);
        const double lag = limit_error(hermite_from_laguerre(p, l, z, x), l, z, x);
        if (!(geg < geg_prev)) ++geg_violations;
        if (!(lag < lag_prev)) ++lag_violations;
        geg_prev = geg;
        lag_prev = lag;
      }
    }
    CAPTURE(l);
    CHECK(geg_violations <= 1);
    CHECK(lag_violations <= 1);
  }
}

TEST_CASE("limit errors") {
  CHECK(thrown_kind([] { hermite_from_gegenbauer(0.25, 0, 0.6, 0.1); }) == ErrorKind::DomainError);
  CHECK(thrown_kind([] { hermite_from_gegenbauer(4.0, 0, 0.5, 2.5); }) == ErrorKind::DomainError);
  CHECK(thrown_kind([] { hermite_from_gegenbauer(-1.0, 0, 0.5, 0.1); }) == ErrorKind::InvalidParameter);
  CHECK(thrown_kind([] { hermite_from_gegenbauer(INFINITY, 0, 0.5, 0.1); }) == ErrorKind::InvalidParameter);
  CHECK(thrown_kind([] { hermite_from_laguerre(2.0, 1, 1.0, 0.1); }) == ErrorKind::DomainError);
  CHECK(thrown_kind([] { hermite_from_laguerre(0.0, 1, 0.1, 0.1); }) == ErrorKind::InvalidParameter);
  CHECK(thrown_kind([] { hermite_from_laguerre(10.0, 1, NAN, 0.1); }) == ErrorKind::DomainError);
}
