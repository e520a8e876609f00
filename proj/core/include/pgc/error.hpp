#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgc {

enum class Errc {
  kInvalidArgument,
  kNotPrime,
  kDivisionByZero,
  kAntisymmetryViolation,
  kJacobiViolation,
  kNotNilpotent,
  kNotAdapted,
  kNotSkew,
  kDimensionMismatch,
  kBudgetExceeded,
  kClassTooLarge,
  kInexactDivision,
  kDuplicateNode,
  kNonIntegralCoefficient,
  kExceptionalCase,
  kUnknownFixture,
  kDenominatorNotInvertible,
  kNonSquareOrbit,
  kZeroAlpha,
  kHypothesesFailed,
  kSyntaxError,
  kDuplicateBracket,
  kBadCoefficient,
  kUnsupportedRing,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pgc
