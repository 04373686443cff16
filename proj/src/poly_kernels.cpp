#include "opsum/poly_kernels.hpp"

#include <cmath>
#include <sstream>

namespace opsum {

PolyFamily PolyFamily::gegenbauer(double lambda) {
  if (!std::isfinite(lambda) || !(lambda > -0.5) || lambda == 0.0) {
    std::ostringstream msg;
    msg << "Gegenbauer order must satisfy lambda > -1/2 and lambda != 0 (got " << lambda
        << "); use chebyshev_t for the lambda -> 0 limit";
    fail(ErrorKind::InvalidParameter, msg.str());
  }
  return PolyFamily(Kind::Gegenbauer, lambda);
}

PolyFamily PolyFamily::laguerre(double alpha) {
  if (!std::isfinite(alpha) || !(alpha > -1.0)) {
    std::ostringstream msg;
    msg << "Laguerre order must satisfy alpha > -1 (got " << alpha << ")";
    fail(ErrorKind::InvalidParameter, msg.str());
  }
  return PolyFamily(Kind::Laguerre, alpha);
}

std::string PolyFamily::name() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Gegenbauer: out << "gegenbauer(" << parameter_ << ")"; break;
    case Kind::Legendre: out << "legendre"; break;
    case Kind::ChebyshevT: out << "chebyshev-t"; break;
    case Kind::ChebyshevU: out << "chebyshev-u"; break;
    case Kind::Laguerre: out << "laguerre(" << parameter_ << ")"; break;
    case Kind::Hermite: out << "hermite"; break;
  }
  return out.str();
}

void check_degree(unsigned n, unsigned cap) {
  if (n > cap) {
    fail(ErrorKind::DegreeCapExceeded,
         "degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace opsum
