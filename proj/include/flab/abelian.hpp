#pragma once

#include <string>
#include <vector>

#include "flab/int_matrix.hpp"
#include "flab/presentation.hpp"

namespace flab {

// U * A * V == D with U, V unimodular and D diagonal, d1 | d2 | ..., all >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  [[nodiscard]] std::vector<Integer> diagonal() const;
  [[nodiscard]] std::size_t rank() const;
};

// Pivot rule: smallest nonzero absolute value in the active block, ties in
// row-major order.
[[nodiscard]] SmithDecomposition smith_normal_form(const IntMatrix& a);

// Throws std::logic_error describing the first violated invariant.
void check_smith_invariants(const IntMatrix& a, const SmithDecomposition& snf);

// Relator-by-generator exponent sum matrix.
[[nodiscard]] IntMatrix exponent_matrix(const Presentation& pres);

// A homomorphism to the integers, stored by its value on each presentation
// generator.
struct Character {
  std::vector<long> values;

  [[nodiscard]] long operator()(const Word& w) const;
  [[nodiscard]] long gcd() const;
  [[nodiscard]] bool is_surjective() const { return gcd() == 1; }
  [[nodiscard]] bool is_zero() const { return gcd() == 0; }
  [[nodiscard]] Character operator-() const;
  friend bool operator==(const Character&, const Character&) = default;
};

// True iff chi vanishes on every relator.
[[nodiscard]] bool is_character(const Presentation& pres, const Character& chi);

struct AbelianStructure {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next
  // Per generator: betti free coordinates followed by one coordinate per
  // torsion factor (reduced into [0, d)).
  std::vector<std::vector<Integer>> gen_images;
  // Generator coordinate change from the Smith decomposition (columns are the
  // new coordinates).
  IntMatrix basis_change;

  [[nodiscard]] std::vector<long> free_image(std::size_t gen) const;
  [[nodiscard]] std::vector<long> free_image(const Word& w) const;
  // i-th coordinate character of the free part.
  [[nodiscard]] Character free_character(std::size_t i) const;
  [[nodiscard]] Integer torsion_order() const;
  // "Z_3 + Z + Z" style.
  [[nodiscard]] std::string describe() const;
};

[[nodiscard]] AbelianStructure abelianization(const Presentation& pres);

// Matrix M with M * (free image of g in src) = (free image of images[g] in
// dst) for every source generator g: the map on free abelianizations induced
// by a homomorphism, as an exponent map for change_variables.
[[nodiscard]] IntMatrix induced_free_map(const AbelianStructure& src,
                                         const AbelianStructure& dst,
                                         const std::vector<Word>& images);

// All surjective characters. For betti 1 the single generator (up to sign);
// for higher betti the lattice basis, surjective members being the primitive
// integer combinations.
struct CharacterLattice {
  std::vector<Character> basis;

  [[nodiscard]] std::size_t rank() const { return basis.size(); }
  [[nodiscard]] Character combine(const std::vector<long>& coeffs) const;
  // The (primitive) coordinate vector of a character in this basis, or empty
  // when the character is not in the lattice.
  [[nodiscard]] std::vector<long> coordinates(const Character& chi) const;
};

[[nodiscard]] CharacterLattice primitive_characters(const AbelianStructure& ab);

// Unimodular generator substitutions g := g * h^k until the first betti
// generators have zero exponent sum in every relator.
[[nodiscard]] TietzeResult to_standard_form(const Presentation& pres);

// Every listed generator has zero exponent sum in every relator.
[[nodiscard]] bool is_standard_form(const Presentation& pres,
                                    const std::vector<int>& gens);

// Every relator (cyclically reduced) contains gen exactly once and gen^-1
// exactly once.
[[nodiscard]] bool is_simple_form(const Presentation& pres, int gen);
[[nodiscard]] bool is_simple_form(const Presentation& pres, std::string_view gen);

}  // namespace flab
