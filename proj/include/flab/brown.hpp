#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flab/abelian.hpp"
#include "flab/presentation.hpp"

namespace flab {

// Prefix heights h_0..h_L of a cyclically reduced relator under chi.
struct HeightWalk {
  Word relator;
  Character chi;
  std::vector<long> heights;
};

// Brown's criterion on a closed cyclic height sequence (the last entry equal
// to the first is dropped): the maximum is attained at a single index, or at
// two cyclically adjacent indices joined by one height-preserving letter.
[[nodiscard]] bool brown_top_condition(const std::vector<long>& cyclic_heights);

struct Rank1Result {
  bool fg_kernel = false;
  bool sigma_pos = false;  // chi in Sigma
  bool sigma_neg = false;  // -chi in Sigma
  HeightWalk walk;
  std::string note;
};

// Kernel finite generation for <generators | relator> and chi. The relator is
// reduced first; more than two generators gives an empty Sigma.
[[nodiscard]] Rank1Result brown_rank1(const Word& relator, const Character& chi);

using Point2 = std::array<long, 2>;

struct LatticePath {
  Word relator;
  std::vector<Point2> points;  // P_0..P_{L-1}; P_L = P_0 is not repeated
};

// A closed angular sector of directions (counterclockwise from `from` to
// `to`) whose kernels are not finitely generated.
struct ExceptionalCone {
  Point2 from;
  Point2 to;
};

struct ConeReport {
  LatticePath path;
  std::vector<Point2> hull;        // counterclockwise, no collinear points
  std::vector<long> hull_visits;   // visits of each hull vertex by the path
  // One representative per +-pair: isolated exceptional directions and
  // maximal exceptional sectors.
  std::vector<Point2> exceptional_rays;
  std::vector<ExceptionalCone> exceptional_cones;
  bool all_exceptional = false;

  // Recomputed from the path for chi(a) = m, chi(b) = n (made primitive).
  [[nodiscard]] bool query(long m, long n) const;
  [[nodiscard]] bool in_sigma(long m, long n) const;
  [[nodiscard]] bool hull_centrally_symmetric() const;
};

[[nodiscard]] LatticePath lattice_path(const Word& relator);
[[nodiscard]] ConeReport brown_rank2(const Word& relator);

// Decide whether chi's kernel in <a, b | relator_index-th relator> is finitely
// generated. nullopt when chi is zero.
[[nodiscard]] std::optional<bool> brown_quotient(const Presentation& pres,
                                                 std::size_t relator_index,
                                                 const Character& chi);

// Two generators, one relator, in standard form with respect to one of them:
// true iff betti is 1 and the walk lies on three levels with Brown's unique
// maximum and minimum.
[[nodiscard]] bool punctured_torus_bundle_test(const Presentation& pres);

// 20 px per lattice unit.
[[nodiscard]] std::string height_walk_svg(const HeightWalk& walk);
[[nodiscard]] std::string lattice_path_svg(const ConeReport& report);

}  // namespace flab
