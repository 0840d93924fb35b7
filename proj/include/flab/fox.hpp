#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flab/abelian.hpp"
#include "flab/laurent.hpp"
#include "flab/presentation.hpp"

namespace flab {

// Element of Z[F_n]: integer combination of freely reduced words.
class GroupRingElem {
 public:
  GroupRingElem() = default;

  void add(const Integer& coeff, const Word& w);
  [[nodiscard]] GroupRingElem operator+(const GroupRingElem& rhs) const;
  [[nodiscard]] GroupRingElem operator-(const GroupRingElem& rhs) const;
  // Left multiplication by a group element.
  [[nodiscard]] GroupRingElem left_mul(const Word& w) const;

  [[nodiscard]] const std::map<Word, Integer>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::string to_string(const Alphabet& alphabet) const;

  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

 private:
  std::map<Word, Integer> terms_;
};

[[nodiscard]] GroupRingElem fox_derivative(const Word& word, int gen);

// Words map to monomials of their free abelian image; torsion is forgotten.
[[nodiscard]] LaurentPoly abelian_eval(const GroupRingElem& elem, const AbelianStructure& ab);

enum class DeltaStatus { Ok, ZeroIdeal };

struct AlexanderData {
  std::vector<std::vector<LaurentPoly>> matrix;  // relators x generators
  std::vector<LaurentPoly> minors;
  LaurentPoly delta;  // zero when status is ZeroIdeal
  DeltaStatus status = DeltaStatus::Ok;
  AbelianStructure basis;
  std::vector<std::string> variables;
};

// Variable names for the free coordinates: a generator's name when that
// generator maps to the i-th basis vector, otherwise t (one variable) or
// t1, t2, ...
[[nodiscard]] std::vector<std::string> variable_names(const Presentation& pres,
                                                      const AbelianStructure& ab);

[[nodiscard]] AlexanderData alexander_matrix(const Presentation& pres);
[[nodiscard]] AlexanderData alexander_polynomial(const Presentation& pres);

// Fraction-free determinant over the Laurent ring.
[[nodiscard]] LaurentPoly laurent_determinant(std::vector<std::vector<LaurentPoly>> m);

struct SimpleFormData {
  IntMatrix K;  // exponent sums of the u_i (relators x other generators)
  IntMatrix L;  // exponent sums of the v_i
  std::optional<Integer> lead;   // det K when square
  std::optional<Integer> trail;  // det L when square
  // det(tI + L) when every u_i is a single distinct generator.
  std::optional<LaurentPoly> monodromy_charpoly;
  std::vector<int> other_generators;
};

// Each relator rotated to x u X v. K and L are defined for any simple form;
// lead and trail are the extreme coefficients of Delta only when betti is 1
// and gen generates the free part.
[[nodiscard]] SimpleFormData simple_form_data(const Presentation& pres, int gen);

struct ObstructionReport {
  bool nonmonic_beta1 = false;
  bool newton_no_units = false;
  bool degree_too_small = false;
  bool closed_hyperbolic_shape = false;
  // Diagnostic only: |Delta(1,...,1)| equals the torsion order.
  std::optional<bool> torsion_consistent;
  std::vector<std::string> notes;

  [[nodiscard]] bool not_fibred() const {
    return nonmonic_beta1 || newton_no_units || degree_too_small || closed_hyperbolic_shape;
  }
};

[[nodiscard]] ObstructionReport fibred_obstructions(const LaurentPoly& delta,
                                                    const AbelianStructure& ab,
                                                    const ManifoldFlags& flags);

}  // namespace flab
