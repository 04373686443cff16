#include "opsum/hermite_limits.hpp"

#include <cmath>
#include <sstream>

#include "opsum/closed_forms.hpp"

namespace opsum {

Complex hermite_from_gegenbauer(double lambda, unsigned l, Complex z, double x) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    fail(ErrorKind::InvalidParameter, "the Gegenbauer limit needs a positive, finite lambda");
  }
  require_finite(z, "z");
  require_finite(x, "x");
  const double scale = 1.0 / std::sqrt(lambda);
  const Complex t = z * scale;
  const double w = x * scale;
  if (!(std::abs(t) < 1.0) || std::abs(w) > 1.0) {
    std::ostringstream msg;
    msg << "lambda = " << lambda << " too small: scaled |t| = " << std::abs(t) << ", |w| = " << std::abs(w);
    fail(ErrorKind::DomainError, msg.str());
  }
  return gegenbauer_sum(lambda, l, t, w);
}

Complex hermite_from_laguerre(double alpha, unsigned l, Complex z, double x) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    fail(ErrorKind::InvalidParameter, "the Laguerre limit needs a positive, finite alpha");
  }
  require_finite(z, "z");
  require_finite(x, "x");
  const double scale = std::sqrt(2.0 / alpha);
  const Complex t = z * scale;
  if (!(std::abs(t) < 1.0)) {
    std::ostringstream msg;
    msg << "alpha = " << alpha << " too small: scaled |t| = " << std::abs(t);
    fail(ErrorKind::DomainError, msg.str());
  }
  return laguerre_sum(alpha, l, t, alpha * (1.0 - scale * x));
}

}  // namespace opsum
