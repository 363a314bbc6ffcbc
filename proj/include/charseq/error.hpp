#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charseq {

enum class ErrorKind {
  Domain,
  NotAcmConsistent,
  InconsistentPair,
  InvalidLiaisonDegree,
  NonIntegralBound,
  NonStabilizing,
  InsufficientPoints,
  NonTransverse,
  ImproperIntersection,
  SingularCollision,
  HypothesisFails,
  NotMaximal,
  InadmissibleAddition,
  InadmissibleTarget,
  ScanInfeasible,
  SearchExhausted,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure of the library. The message is meant to be shown
/// to a user verbatim; kind() lets callers branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace charseq
