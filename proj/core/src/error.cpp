#include "gut/error.hpp"

namespace gut {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Construction: return "construction";
    case ErrorKind::DivisionDomain: return "division-domain";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::AxiomViolation: return "axiom-violation";
    case ErrorKind::Conditioning: return "conditioning";
    case ErrorKind::NotDegenerate: return "not-degenerate";
    case ErrorKind::Configuration: return "configuration";
    case ErrorKind::Lookup: return "lookup";
    case ErrorKind::Nesting: return "nesting";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::AttitudeRequired: return "attitude-required";
  }
  return "unknown";
}

}  // namespace gut
