#include "pgc/error.hpp"

namespace pgc {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kNotPrime: return "NotPrime";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kAntisymmetryViolation: return "AntisymmetryViolation";
    case Errc::kJacobiViolation: return "JacobiViolation";
    case Errc::kNotNilpotent: return "NotNilpotent";
    case Errc::kNotAdapted: return "NotAdapted";
    case Errc::kNotSkew: return "NotSkew";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kClassTooLarge: return "ClassTooLarge";
    case Errc::kInexactDivision: return "InexactDivision";
    case Errc::kDuplicateNode: return "DuplicateNode";
    case Errc::kNonIntegralCoefficient: return "NonIntegralCoefficient";
    case Errc::kExceptionalCase: return "ExceptionalCase";
    case Errc::kUnknownFixture: return "UnknownFixture";
    case Errc::kDenominatorNotInvertible: return "DenominatorNotInvertible";
    case Errc::kNonSquareOrbit: return "NonSquareOrbit";
    case Errc::kZeroAlpha: return "ZeroAlpha";
    case Errc::kHypothesesFailed: return "HypothesesFailed";
    case Errc::kSyntaxError: return "SyntaxError";
    case Errc::kDuplicateBracket: return "DuplicateBracket";
    case Errc::kBadCoefficient: return "BadCoefficient";
    case Errc::kUnsupportedRing: return "UnsupportedRing";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace pgc
