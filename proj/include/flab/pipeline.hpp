#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flab/abelian.hpp"
#include "flab/covers.hpp"
#include "flab/folding.hpp"
#include "flab/presentation.hpp"

namespace flab {

// Appends m^p l^q for the cusp's meridian m and longitude l and drops the
// cusp. Throws BadSlope unless gcd(p, q) = 1 and q >= 0, NoCusp for a bad
// index.
[[nodiscard]] Presentation dehn_fill(const Presentation& pres, std::size_t cusp_index, long p,
                                     long q);

enum class FibredStatus { Fibred, NotFibred, Unknown };

[[nodiscard]] const char* status_name(FibredStatus s) noexcept;

struct StageEvidence {
  std::string stage;
  std::string result;
  // Text artifacts: "delta", "walk", "cones", "subwords", ...
  std::map<std::string, std::string> artifacts;
};

// What a Fibred verdict rests on, enough to re-check it from scratch.
struct FibredCertificate {
  enum class Kind { BrownRank1, BrownRank2, BrownQuotient, AscendingCover };
  Kind kind = Kind::BrownRank1;
  // Brown kinds: a relator of the input and a character of the input.
  Word relator;
  Character chi;
  // AscendingCover: the simplified cover, its stable letter and the fibre
  // subwords read on `side`.
  std::size_t degree = 0;
  Presentation cover;
  int stable_letter = -1;
  FiberSide side = FiberSide::TtoInverse;
  std::vector<Word> subwords;
  std::vector<Word> inclusion;  // cover generators in the input's generators
};

struct FibredVerdict {
  FibredStatus status = FibredStatus::Unknown;
  std::size_t betti = 0;
  std::vector<StageEvidence> evidence;
  std::vector<std::string> caveats;
  std::optional<FibredCertificate> certificate;
};

struct DecideOptions {
  std::size_t max_cover = 6;
};

// Brown for one-relator two-generator input, then Alexander obstructions,
// then the one-relator quotient argument, then cyclic covers with an
// ascending HNN certificate. Never throws for well-formed input; stages that
// cannot run are recorded in the evidence.
[[nodiscard]] FibredVerdict decide_fibred(const Presentation& pres, const DecideOptions& opts = {});

// Re-checks a Fibred certificate against the input presentation without
// trusting any stored verdict.
[[nodiscard]] bool verify_certificate(const Presentation& pres, const FibredCertificate& cert);

struct CorankReport {
  long lower = 0;
  long upper = 0;
  std::vector<std::string> evidence;
};

struct CorankOptions {
  std::size_t max_index = 5;
  bool use_fibred = true;  // run decide_fibred for the fibred obstruction
  DecideOptions decide;
};

// Per-index counts of conjugacy classes of subgroups of F2, index 2..6.
inline constexpr std::size_t kFreeRank2Counts[] = {0, 1, 3, 7, 26, 97, 624};

[[nodiscard]] CorankReport corank_bounds(const Presentation& pres, const CorankOptions& opts = {});

struct BatchOptions {
  std::size_t jobs = 1;
  bool corank = false;
  bool timings = false;  // wall-clock times make the report nondeterministic
  DecideOptions decide;
  CorankOptions corank_opts;
};

struct BatchSummary {
  std::size_t entries = 0;
  std::size_t fibred = 0;
  std::size_t not_fibred = 0;
  std::size_t unknown = 0;
  std::size_t errors = 0;
};

// One JSON object per input block, in input order, then a summary line.
// Blocks that fail to parse or to run become error records.
BatchSummary run_batch(const std::string& input_text, std::ostream& out,
                       const BatchOptions& opts = {});

// SVG for one relator: the lattice path and hull when both exponent sums
// vanish, otherwise the height walk of the presentation's character.
// Unsupported unless there are two generators, the relator is nontrivial and
// a character is available.
[[nodiscard]] std::string plot_svg(const Presentation& pres, std::size_t relator_index = 0);

// Writes plot_svg to path.
void emit_plot(const Presentation& pres, const std::string& path, std::size_t relator_index = 0);

}  // namespace flab
