#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flab/word.hpp"

namespace flab {

// Generator names. Single lowercase letters use case for inversion and allow
// the compact "a4B2" notation; longer names (g0, g1, ... for covers) are
// written as space-separated tokens "g0 G1^2" where an uppercase first
// character denotes the inverse.
using Alphabet = std::vector<std::string>;

// Synthesized names g0, g1, ... for presentations with many generators.
[[nodiscard]] Alphabet synthesized_alphabet(std::size_t n);
// a, b, c, ... when n <= 26, otherwise synthesized.
[[nodiscard]] Alphabet default_alphabet(std::size_t n);

[[nodiscard]] Word parse_word(std::string_view text, const Alphabet& alphabet);
[[nodiscard]] std::string format_word(const Word& word,
                                      const Alphabet& alphabet,
                                      bool compact = true);

struct Cusp {
  Word meridian;
  Word longitude;
};

struct ManifoldFlags {
  bool is_3manifold = false;
  bool is_closed = false;
  bool is_hyperbolic = false;
  bool is_knot_exterior = false;
};

struct Presentation {
  std::string name;
  Alphabet generators;
  std::vector<Word> relators;
  std::vector<Cusp> cusps;
  ManifoldFlags flags;

  [[nodiscard]] std::size_t num_generators() const noexcept {
    return generators.size();
  }
  // -1 when absent.
  [[nodiscard]] int generator_index(std::string_view gen_name) const;
  [[nodiscard]] Word word(std::string_view text) const {
    return parse_word(text, generators);
  }
  [[nodiscard]] std::string format(const Word& w) const {
    return format_word(w, generators);
  }
  // Throws UnknownGenerator if any word uses an undeclared generator.
  void validate() const;
};

// Builds a presentation from relator strings over single-letter generators.
[[nodiscard]] Presentation make_presentation(
    std::string name, std::string_view gens,
    std::initializer_list<std::string_view> relators);

// Normalized text block in the presentation file format.
[[nodiscard]] std::string format_presentation(const Presentation& pres);

// Copy with every relator freely and cyclically reduced and empty relators
// dropped (cusp words are freely reduced only).
[[nodiscard]] Presentation reduced_relators(const Presentation& pres);

// ---------------------------------------------------------------------------
// Tietze moves. Generator indices in each move refer to the presentation the
// move is applied to.

struct SubstituteMove {
  int target;        // generator being replaced; the fresh generator takes
                     // over its slot
  std::string fresh_name;
  Word replacement;  // over the post-move generators; contains the fresh
                     // generator exactly once
};
struct EliminateMove {
  int gen;            // removed; later generators shift down by one
  Word expression;    // over the pre-move generators, not containing gen
  int relator_index;  // relator solved for gen, removed
};
struct AddRelatorMove {
  Word relator;
};
struct RemoveRelatorMove {
  int relator_index;
};
struct ReplaceRelatorMove {
  int relator_index;
  Word relator;  // equal to the old relator up to free/cyclic reduction or
                 // conjugation
};
struct PermuteGeneratorsMove {
  std::vector<int> order;  // new generator i is old generator order[i]
};

using TietzeMove =
    std::variant<SubstituteMove, EliminateMove, AddRelatorMove,
                 RemoveRelatorMove, ReplaceRelatorMove, PermuteGeneratorsMove>;

struct TietzeLog {
  std::vector<TietzeMove> moves;

  void append(const TietzeLog& other) {
    moves.insert(moves.end(), other.moves.begin(), other.moves.end());
  }
};

[[nodiscard]] Presentation apply_move(const Presentation& pres,
                                      const TietzeMove& move);
[[nodiscard]] Presentation replay(const Presentation& pres,
                                  const TietzeLog& log);

// For each generator of the source presentation, a word in the target
// presentation's generators representing its image under the isomorphism
// induced by the log.
[[nodiscard]] std::vector<Word> induced_images(const Presentation& source,
                                               const TietzeLog& log);

struct TietzeResult {
  Presentation presentation;
  TietzeLog log;
};

// Replace target by `replacement`, a word over the new generators in which
// the fresh generator (occupying the target's slot) occurs exactly once.
[[nodiscard]] TietzeResult substitute(const Presentation& pres, int target,
                                      const Word& replacement,
                                      std::string fresh_name);
// Text convenience: replacement parsed over (generators with target renamed
// to fresh_name).
[[nodiscard]] TietzeResult substitute(const Presentation& pres,
                                      std::string_view target,
                                      std::string_view replacement,
                                      std::string fresh_name);

}  // namespace flab
