#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flab/int_matrix.hpp"

namespace flab {

using Exponents = std::vector<long>;

// Element of Z[t1^+-1, ..., tb^+-1]. Terms with zero coefficient are never
// stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Integer& c);
  static LaurentPoly monomial(Exponents exps, const Integer& c = 1);
  static LaurentPoly variable(std::size_t nvars, std::size_t i, long power = 1);

  [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t num_terms() const noexcept { return terms_.size(); }
  [[nodiscard]] const std::map<Exponents, Integer>& terms() const noexcept {
    return terms_;
  }
  [[nodiscard]] Integer coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  [[nodiscard]] LaurentPoly operator+(const LaurentPoly& rhs) const;
  [[nodiscard]] LaurentPoly operator-(const LaurentPoly& rhs) const;
  [[nodiscard]] LaurentPoly operator*(const LaurentPoly& rhs) const;
  [[nodiscard]] LaurentPoly operator-() const;
  [[nodiscard]] LaurentPoly scaled(const Integer& k) const;
  // Multiply by the monomial t^shift.
  [[nodiscard]] LaurentPoly shifted(const Exponents& shift) const;

  // Per-variable minimum / maximum exponent (zero polynomial: empty).
  [[nodiscard]] Exponents min_exponents() const;
  [[nodiscard]] Exponents max_exponents() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void check_ring(const LaurentPoly& rhs) const;

  std::size_t nvars_;
  std::map<Exponents, Integer> terms_;
};

// Spelled-out ring operations (RingMismatch on differing nvars).
[[nodiscard]] LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
[[nodiscard]] LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
[[nodiscard]] LaurentPoly neg(const LaurentPoly& p);
[[nodiscard]] LaurentPoly scalar_mul(const Integer& n, const LaurentPoly& p);

// Graded-lex comparison: total degree first, then lexicographic.
[[nodiscard]] bool graded_lex_less(const Exponents& a, const Exponents& b);

// Canonical representative of p's class modulo units +-t^k: minimum exponent
// 0 in every variable and positive graded-lex leading coefficient.
[[nodiscard]] LaurentPoly normalize_units(const LaurentPoly& p);

// Exact quotient p / q, or nullopt if q does not divide p.
[[nodiscard]] std::optional<LaurentPoly> exact_divide(const LaurentPoly& p,
                                                      const LaurentPoly& q);

// Normalized gcd of the nonzero entries (at most three variables).
[[nodiscard]] LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& polys);

struct NewtonVertex {
  Exponents exponents;
  Integer coefficient;
};
// Extreme points of the Newton polytope, sorted by exponent vector.
[[nodiscard]] std::vector<NewtonVertex> newton_vertices(const LaurentPoly& p);

struct LaurentPredicates {
  bool is_monic_univariate = false;
  Exponents degree_span;
  bool is_symmetric_under_inversion = false;
  Integer value_at_all_ones;
};
[[nodiscard]] LaurentPredicates laurent_predicates(const LaurentPoly& p);

// Substitute t_i -> t_i^-1 for every variable.
[[nodiscard]] LaurentPoly invert_variables(const LaurentPoly& p);

// Exponent vectors e -> K e for a unimodular K (BadBasis otherwise).
[[nodiscard]] LaurentPoly change_variables(const LaurentPoly& p,
                                           const IntMatrix& k);

// Signed monomial sum, e.g. "3bc + 2b + 2c + 3". Default names: t for one
// variable, t1..tb otherwise.
[[nodiscard]] std::string to_string(const LaurentPoly& p,
                                    const std::vector<std::string>& names = {});
// Bracket form for univariate polynomials symmetric up to units:
// "[a_k, ..., a_0]" for even span and "(a_k, ..., a_1)" for odd span.
// Falls back to to_string otherwise.
[[nodiscard]] std::string to_bracket_string(const LaurentPoly& p);

// Parse a signed monomial sum such as "2t^4 - 3t^2 + 2" or "3bc+2b+2c+3"
// over the given single-letter variable names; negative powers use t^-2.
[[nodiscard]] LaurentPoly parse_laurent(std::string_view text,
                                        const std::vector<std::string>& names);

}  // namespace flab
