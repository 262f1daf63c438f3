#include "monometric/error.hpp"

namespace monometric {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAState: return "NotAState";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace monometric
