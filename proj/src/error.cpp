#include "charseq/error.hpp"

namespace charseq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::NotAcmConsistent: return "not ACM-consistent";
    case ErrorKind::InconsistentPair: return "inconsistent pair";
    case ErrorKind::InvalidLiaisonDegree: return "invalid liaison degree";
    case ErrorKind::NonIntegralBound: return "non-integral bound";
    case ErrorKind::NonStabilizing: return "non-stabilizing";
    case ErrorKind::InsufficientPoints: return "insufficient rational points";
    case ErrorKind::NonTransverse: return "non-transverse or irrational intersection";
    case ErrorKind::ImproperIntersection: return "improper intersection";
    case ErrorKind::SingularCollision: return "singular-point collision";
    case ErrorKind::HypothesisFails: return "hypothesis fails";
    case ErrorKind::NotMaximal: return "not maximal";
    case ErrorKind::InadmissibleAddition: return "inadmissible addition";
    case ErrorKind::InadmissibleTarget: return "inadmissible target";
    case ErrorKind::ScanInfeasible: return "rational scan infeasible";
    case ErrorKind::SearchExhausted: return "realization search exhausted";
    case ErrorKind::Parse: return "parse error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace charseq
