#include "opsum/error.hpp"

namespace opsum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::QuadratureDiverged: return "QuadratureDiverged";
  }
  return "Unknown";
}

}  // namespace opsum
