#include "hypchroma/errors.hpp"

namespace hypchroma {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::GeometryInfeasible: return "geometry-infeasible";
    case ErrorKind::Combinatorial: return "combinatorial";
    case ErrorKind::ConstructionRule: return "construction-rule";
    case ErrorKind::Connectivity: return "connectivity";
    case ErrorKind::Orientability: return "orientability";
    case ErrorKind::Blueprint: return "blueprint";
    case ErrorKind::Pairing: return "pairing";
    case ErrorKind::SizeExceeded: return "size-exceeded";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::ParameterRegime: return "parameter-regime";
    case ErrorKind::InternalConsistency: return "internal-consistency";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace hypchroma
