#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "flab/abelian.hpp"
#include "flab/presentation.hpp"

namespace flab {

// Column of a coset table: 2*gen for gen, 2*gen+1 for its inverse.
[[nodiscard]] constexpr int letter_column(Letter l) noexcept {
  return 2 * l.gen + (l.sign > 0 ? 0 : 1);
}

inline constexpr int kUndefined = -1;

// Coset 0 is the subgroup itself.
struct CosetTable {
  std::size_t num_gens = 0;
  // rows[coset][column], kUndefined for a missing entry.
  std::vector<std::vector<int>> rows;
  std::vector<Word> subgroup_gens;

  [[nodiscard]] std::size_t index() const noexcept { return rows.size(); }
  [[nodiscard]] int image(int coset, Letter l) const {
    return rows[coset][letter_column(l)];
  }
  // kUndefined if the walk leaves the defined part.
  [[nodiscard]] int act(int coset, const Word& w) const;
  [[nodiscard]] bool is_complete() const;
  // Complete, mutually inverse columns, every relator closes from every coset
  // and every subgroup generator fixes coset 0.
  [[nodiscard]] bool is_valid_for(const Presentation& pres) const;
  friend bool operator==(const CosetTable&, const CosetTable&) = default;
};

// Default bound, overridden by the FLAB_MAX_COSETS environment variable.
[[nodiscard]] std::size_t default_max_cosets();

// HLT enumeration with a lookahead pass before giving up. Throws Overflow
// when more than max_cosets cosets would be live at once. The result is
// renumbered in first-appearance order.
[[nodiscard]] CosetTable todd_coxeter(const Presentation& pres,
                                      const std::vector<Word>& subgroup_gens,
                                      std::size_t max_cosets = 0);

struct LowIndexResult {
  std::vector<CosetTable> tables;  // one per conjugacy class, by index then table
  std::map<std::size_t, std::size_t> counts;  // index -> number of classes
};

inline constexpr std::size_t kMaxLowIndex = 6;

// Conjugacy classes of subgroups of index 2..max_index.
[[nodiscard]] LowIndexResult low_index_subgroups(const Presentation& pres,
                                                 std::size_t max_index);

// Renumbers cosets in order of first appearance scanning rows in order.
[[nodiscard]] CosetTable standardized(const CosetTable& table);

// Generators of the subgroup read off a breadth-first Schreier transversal.
[[nodiscard]] std::vector<Word> schreier_generators(const CosetTable& table);

// The kernel of G -> Z -> Z/n. Coset k is the residue k.
[[nodiscard]] CosetTable cyclic_cover(const Presentation& pres,
                                      const Character& chi, std::size_t n);

// A word x with chi(x) = 1 for surjective chi.
[[nodiscard]] Word unit_word(const Character& chi);

struct SubgroupPresentation {
  Presentation presentation;
  // Image of each subgroup generator in the ambient group.
  std::vector<Word> inclusion;
  Presentation ambient;
};

// Schreier generators are the non-tree edges (coset, generator) in row-major
// order. Relators are rewrites of every ambient relator from every coset.
[[nodiscard]] SubgroupPresentation reidemeister_schreier(
    const Presentation& pres, const CosetTable& table);

// Drops empty and repeated relators and eliminates generators that occur
// exactly once in some relator, shortest relator first and highest
// generator id first, until nothing
// changes. Generators in cusp words are kept.
[[nodiscard]] TietzeResult simplify_presentation(const Presentation& pres);

// Simplifies and carries the inclusion images along.
[[nodiscard]] SubgroupPresentation simplify_subgroup(const SubgroupPresentation& sub);

[[nodiscard]] AbelianStructure subgroup_homology(const Presentation& pres,
                                                 const CosetTable& table);
[[nodiscard]] AbelianStructure subgroup_homology(
    const Presentation& pres, const std::vector<Word>& subgroup_gens,
    std::size_t max_cosets = 0);

}  // namespace flab
