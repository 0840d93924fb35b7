#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flab/abelian.hpp"
#include "flab/covers.hpp"
#include "flab/presentation.hpp"

namespace flab {

// Folded, core graph of a subgroup of the free group on rank generators.
// Vertex 0 is the base; vertices are numbered breadth-first from it over
// columns in order, so equal subgroups give equal graphs.
struct FoldedGraph {
  std::size_t rank = 0;
  // out[v][col] with col = letter_column(letter); kUndefined when absent.
  std::vector<std::vector<int>> out;

  [[nodiscard]] std::size_t num_vertices() const noexcept { return out.size(); }
  [[nodiscard]] std::size_t num_edges() const;
  // Rank of the subgroup: edges - vertices + 1.
  [[nodiscard]] std::size_t subgroup_rank() const;
  friend bool operator==(const FoldedGraph&, const FoldedGraph&) = default;
};

[[nodiscard]] FoldedGraph build_folded_graph(const std::vector<Word>& words, std::size_t rank);

[[nodiscard]] bool graph_membership(const FoldedGraph& graph, const Word& word);

// The rose: one vertex with a loop for every generator.
[[nodiscard]] bool generates_whole(const FoldedGraph& graph);

// Generates the free group and has exactly rank members (Hopf property).
[[nodiscard]] bool is_basis(const std::vector<Word>& words, std::size_t rank);

[[nodiscard]] std::string to_dot(const FoldedGraph& graph, const Alphabet& alphabet);

enum class FiberSide { TtoInverse, InverseToT };  // t..T or T..t

// Alphabet with generator t removed.
[[nodiscard]] Alphabet fiber_alphabet(const Presentation& pres, int t);

// Per relator, the cyclic subword strictly between the t letter and the T
// letter (or the reverse), freely reduced and re-indexed over the other
// generators. Throws NotSimpleForm.
[[nodiscard]] std::vector<Word> extract_fiber_subwords(const Presentation& pres, int t,
                                                       FiberSide side);

// Finds two relators with t-letters, at least one with two t and two T,
// whose conjugates multiply to a relator in simple form with respect to t.
// The relator with more t-letters is replaced by that product; the group is
// unchanged since each of the pair follows from the other and the product.
// Repeats while matches exist. Throws NoPattern when nothing matches.
[[nodiscard]] TietzeResult concat_double_relators(const Presentation& pres, int t);

enum class HnnVerdict { Fibred, Inconclusive };

struct AscendingResult {
  HnnVerdict verdict = HnnVerdict::Inconclusive;
  std::size_t fiber_rank = 0;
  FiberSide side = FiberSide::TtoInverse;
  std::vector<Word> subwords;  // over fiber_alphabet
  bool forward_generates = false;
  std::optional<bool> backward_generates;  // checked only when needed
  std::vector<std::string> notes;
};

// Decision from already extracted subwords (both sides when available).
[[nodiscard]] AscendingResult ascending_from_subwords(const std::vector<Word>& forward,
                                                      const std::optional<std::vector<Word>>& backward,
                                                      std::size_t fiber_rank,
                                                      bool three_manifold);

// Standard and simple form with respect to t are required (NotStandardForm,
// NotSimpleForm). One generating side suffices for 3-manifold input.
[[nodiscard]] AscendingResult ascending_hnn_check(const Presentation& pres, int t);

// True iff each fiber generator (a word over the cover's generators) maps
// through the inclusion to zero in the free part of the base homology.
[[nodiscard]] bool descent_check(const SubgroupPresentation& cover,
                                 const AbelianStructure& base_ab,
                                 const std::vector<Word>& fiber_gens);

}  // namespace flab
