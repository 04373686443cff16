#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opsum {

enum class ErrorKind {
  InvalidParameter,    // family parameter (lambda, alpha) or order out of range
  DegreeCapExceeded,   // requested degree above the configured cap
  DomainError,         // evaluation point outside the admissible region
  IllConditioned,      // formula degenerates at this point (q^2 ~ 0, caustic, ...)
  NotConverged,        // truncation control could not certify the result
  QuadratureDiverged,  // contour quadrature failed its residue check
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace opsum
