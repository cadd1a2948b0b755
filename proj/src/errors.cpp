#include "unitfrac/errors.hpp"

namespace unitfrac {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::PoleAtNonPositiveInteger: return "PoleAtNonPositiveInteger";
    case ErrorKind::PoleEncountered: return "PoleEncountered";
    case ErrorKind::SchemeDomainViolation: return "SchemeDomainViolation";
    case ErrorKind::DegenerateRoot: return "DegenerateRoot";
    case ErrorKind::DivergentRegion: return "DivergentRegion";
    case ErrorKind::DegenerateQuadratic: return "DegenerateQuadratic";
  }
  return "Unknown";
}

}  // namespace unitfrac
