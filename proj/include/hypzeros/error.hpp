#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypzeros {

enum class ErrorKind {
  Parse,
  ZeroPolynomial,
  DivisorZero,
  DegreeOrder,
  InvalidParams,
  PartnerInvalid,
  DegreeTooSmall,
  IndeterminateTrace,
  DenominatorVanishes,
  SeedUndefined,
  IndexOutOfRange,
  TraceDegenerate,
  WrongDegree,
  WitnessUndefined,
  HypothesisBoundary,
  PreconditionC,
  CaseBoundary,
  ConversionOverflow,
  NoConvergence,
  BoundaryAmbiguity,
  NotAllReal,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type; callers that
// care about the reason switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hypzeros
