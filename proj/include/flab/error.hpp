#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flab {

enum class Errc {
  UnknownGenerator,
  BadCount,
  BadSubstitution,
  Syntax,
  DuplicateGenerator,
  NoCharacters,
  ZeroPolynomial,
  RingMismatch,
  ZeroIdeal,
  Unsupported,
  BadBasis,
  NoFreePart,
  NotSimpleForm,
  NotStandardForm,
  NotACharacter,
  BadRelator,
  NotRank2,
  Overflow,
  NotPrimitive,
  Incomplete,
  NoPattern,
  NoInclusion,
  BadSlope,
  NoCusp,
};

std::string_view errc_name(Errc code) noexcept;

// Single exception type for the library; the code distinguishes failure
// classes so callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace flab
