#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hklattice {

/// Base of all library errors. `code()` is a stable machine-readable tag
/// (the CLI echoes it in error JSON on stderr).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Malformed input (bad JSON shape, unreadable file). CLI exit code 2.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

/// A violated operation precondition. CLI exit code 3.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

#define HKLATTICE_DEFINE_ERROR(NAME)                                   \
  class NAME : public PreconditionError {                              \
   public:                                                             \
    explicit NAME(const std::string& msg) : PreconditionError(#NAME, msg) {} \
  }

HKLATTICE_DEFINE_ERROR(DimensionMismatch);
HKLATTICE_DEFINE_ERROR(NotSymmetric);
HKLATTICE_DEFINE_ERROR(SquareNotTwo);
HKLATTICE_DEFINE_ERROR(NotIsometry);
HKLATTICE_DEFINE_ERROR(NotNegativeDefinite);
HKLATTICE_DEFINE_ERROR(EnumerationLimit);
HKLATTICE_DEFINE_ERROR(OddSquare);
HKLATTICE_DEFINE_ERROR(NegativeDim);
HKLATTICE_DEFINE_ERROR(AmpleNotPositive);
HKLATTICE_DEFINE_ERROR(WrongSignature);
HKLATTICE_DEFINE_ERROR(BetaNotInLambda);
HKLATTICE_DEFINE_ERROR(NoSolution);
HKLATTICE_DEFINE_ERROR(NotUnique);
HKLATTICE_DEFINE_ERROR(NotSymmetricVector);
HKLATTICE_DEFINE_ERROR(NotInWPerp);
HKLATTICE_DEFINE_ERROR(NotHyperbolic);
HKLATTICE_DEFINE_ERROR(NotIndependent);
HKLATTICE_DEFINE_ERROR(ZeroVector);
HKLATTICE_DEFINE_ERROR(BadArgument);

#undef HKLATTICE_DEFINE_ERROR

}  // namespace hklattice
