#include "flab/error.hpp"

namespace flab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::BadCount: return "BadCount";
    case Errc::BadSubstitution: return "BadSubstitution";
    case Errc::Syntax: return "Syntax";
    case Errc::DuplicateGenerator: return "DuplicateGenerator";
    case Errc::NoCharacters: return "NoCharacters";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ZeroIdeal: return "ZeroIdeal";
    case Errc::Unsupported: return "Unsupported";
    case Errc::BadBasis: return "BadBasis";
    case Errc::NoFreePart: return "NoFreePart";
    case Errc::NotSimpleForm: return "NotSimpleForm";
    case Errc::NotStandardForm: return "NotStandardForm";
    case Errc::NotACharacter: return "NotACharacter";
    case Errc::BadRelator: return "BadRelator";
    case Errc::NotRank2: return "NotRank2";
    case Errc::Overflow: return "Overflow";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::Incomplete: return "Incomplete";
    case Errc::NoPattern: return "NoPattern";
    case Errc::NoInclusion: return "NoInclusion";
    case Errc::BadSlope: return "BadSlope";
    case Errc::NoCusp: return "NoCusp";
  }
  return "Unknown";
}

}  // namespace flab
