#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

#include "flab/covers.hpp"
#include "flab/error.hpp"
#include "test_util.hpp"

using namespace flab;

namespace {

Presentation v3396() { return make_presentation("v3396", "abc", {"aBca2bC", "a2cba2CAB"}); }
Presentation v3036() { return make_presentation("v3036", "ab", {"a3b3AbAb3a3b3AbAb4AbAb3"}); }
Presentation free2() { return make_presentation("F2", "ab", {}); }

template <class F>
void expect_errc(Errc code, F&& f) {
  try {
    f();
    FAIL() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Homology of the subgroup from the abelianized covering graph: one variable
// per edge (coset, generator), spanning-tree edges killed, one row per
// relator lift. Shares nothing with the rewriting code.
AbelianStructure covering_graph_homology(const Presentation& pres, const CosetTable& t) {
  const std::size_t n = t.index(), k = pres.num_generators();
  auto var = [&](std::size_t c, std::size_t g) { return c * k + g; };
  std::vector<std::vector<long>> rows;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t c = stack.back();
    stack.pop_back();
    for (std::size_t g = 0; g < k; ++g) {
      for (int s : {1, -1}) {
        const int d = t.image(static_cast<int>(c), {static_cast<int>(g), s});
        if (seen[d]) continue;
        seen[d] = true;
        stack.push_back(d);
        std::vector<long> row(n * k, 0);
        row[s > 0 ? var(c, g) : var(d, g)] = 1;
        rows.push_back(row);
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (const Word& r : pres.relators) {
      std::vector<long> row(n * k, 0);
      int cur = static_cast<int>(c);
      for (Letter l : r) {
        if (l.sign > 0) {
          row[var(cur, l.gen)] += 1;
          cur = t.image(cur, l);
        } else {
          cur = t.image(cur, l);
          row[var(cur, l.gen)] -= 1;
        }
      }
      rows.push_back(row);
    }
  }
  IntMatrix m(rows.size(), n * k);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n * k; ++j) m(i, j) = rows[i][j];
  }
  const SmithDecomposition snf = smith_normal_form(m);
  AbelianStructure out;
  out.betti = n * k - snf.rank();
  for (const Integer& d : snf.diagonal()) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

// Conjugacy classes of transitive actions on {0..n-1} found by brute force
// over all permutation tuples.
std::size_t brute_force_classes(const Presentation& pres, std::size_t n) {
  const std::size_t k = pres.num_generators();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(id);
  } while (std::next_permutation(id.begin(), id.end()));
  std::set<std::vector<std::vector<int>>> classes;
  std::vector<std::size_t> choice(k, 0);
  for (;;) {
    CosetTable t;
    t.num_gens = k;
    t.rows.assign(n, std::vector<int>(2 * k));
    for (std::size_t g = 0; g < k; ++g) {
      for (std::size_t c = 0; c < n; ++c) {
        const int d = perms[choice[g]][c];
        t.rows[c][2 * g] = d;
        t.rows[d][2 * g + 1] = static_cast<int>(c);
      }
    }
    if (t.is_valid_for(pres)) {
      std::vector<std::vector<int>> best;
      bool transitive = true;
      for (std::size_t base = 0; base < n; ++base) {
        CosetTable rebased = t;
        for (auto& row : rebased.rows) {
          for (int& v : row) v = v == 0 ? static_cast<int>(base) : v == static_cast<int>(base) ? 0 : v;
        }
        std::swap(rebased.rows[0], rebased.rows[base]);
        CosetTable s = standardized(rebased);
        if (s.index() != n) {
          transitive = false;
          break;
        }
        if (best.empty() || s.rows < best) best = s.rows;
      }
      if (transitive) classes.insert(best);
    }
    std::size_t g = 0;
    while (g < k && ++choice[g] == perms.size()) choice[g++] = 0;
    if (g == k) break;
  }
  return classes.size();
}

}  // namespace

TEST(ToddCoxeter, ReferenceSubgroupIndex) {
  Presentation p = v3396();
  CosetTable t = todd_coxeter(p, {p.word("a"), p.word("cB"), p.word("b2")});
  EXPECT_EQ(t.index(), 2u);
  EXPECT_TRUE(t.is_valid_for(p));
}

TEST(ToddCoxeter, WholeGroupAndFiniteGroups) {
  Presentation p = v3396();
  EXPECT_EQ(todd_coxeter(p, {p.word("a"), p.word("b"), p.word("c")}).index(), 1u);
  Presentation s3 = make_presentation("S3", "ab", {"a2", "b3", "abab"});
  EXPECT_EQ(todd_coxeter(s3, {}).index(), 6u);
  EXPECT_EQ(todd_coxeter(s3, {s3.word("a")}).index(), 3u);
  Presentation a5 = make_presentation("A5", "ab", {"a2", "b3", "ababababab"});
  EXPECT_EQ(todd_coxeter(a5, {}).index(), 60u);
}

TEST(ToddCoxeter, OverflowOnInfiniteIndex) {
  Presentation f = free2();
  expect_errc(Errc::Overflow, [&] { (void)todd_coxeter(f, {f.word("a")}, 1000); });
}

TEST(ToddCoxeter, EnvironmentBound) {
  ::setenv("FLAB_MAX_COSETS", "7", 1);
  EXPECT_EQ(default_max_cosets(), 7u);
  Presentation a5 = make_presentation("A5", "ab", {"a2", "b3", "ababababab"});
  expect_errc(Errc::Overflow, [&] { (void)todd_coxeter(a5, {}); });
  ::unsetenv("FLAB_MAX_COSETS");
  EXPECT_EQ(default_max_cosets(), 100000u);
}

TEST(ToddCoxeter, TightBoundUsesLookahead) {
  Presentation s3 = make_presentation("S3", "ab", {"a2", "b3", "abab"});
  EXPECT_EQ(todd_coxeter(s3, {}, 6).index(), 6u);
}

TEST(LowIndex, FreeGroupCounts) {
  LowIndexResult r = low_index_subgroups(free2(), 5);
  EXPECT_EQ(r.counts, (std::map<std::size_t, std::size_t>{{2, 3}, {3, 7}, {4, 26}, {5, 97}}));
}

TEST(LowIndex, V3396Counts) {
  LowIndexResult r = low_index_subgroups(v3396(), 5);
  EXPECT_EQ(r.counts, (std::map<std::size_t, std::size_t>{{2, 3}, {3, 15}, {4, 32}, {5, 64}}));
  for (const CosetTable& t : r.tables) EXPECT_TRUE(t.is_valid_for(v3396()));
}

TEST(LowIndex, SmallCases) {
  Presentation z2 = make_presentation("Z2", "a", {"a2"});
  LowIndexResult r = low_index_subgroups(z2, 2);
  ASSERT_EQ(r.tables.size(), 1u);
  EXPECT_TRUE(r.tables[0].subgroup_gens.empty() ||
              free_reduce(r.tables[0].subgroup_gens[0]).size() == 2);
  expect_errc(Errc::Unsupported, [&] { (void)low_index_subgroups(z2, 7); });
}

TEST(LowIndex, MatchesBruteForceOracle) {
  for (const Presentation& p :
       {free2(), v3396(), make_presentation("T", "ab", {"abAB"}), v3036()}) {
    const std::size_t top = 4;
    LowIndexResult r = low_index_subgroups(p, top);
    for (std::size_t n = 2; n <= top; ++n) {
      EXPECT_EQ(r.counts[n], brute_force_classes(p, n)) << p.name << " index " << n;
    }
  }
}

TEST(LowIndex, GeneratorsReproduceTables) {
  Presentation p = v3396();
  for (const CosetTable& t : low_index_subgroups(p, 4).tables) {
    CosetTable again = todd_coxeter(p, t.subgroup_gens);
    EXPECT_EQ(again.rows, t.rows);
  }
}

TEST(CyclicCover, ResidueActionMatchesEnumeration) {
  Presentation p = v3036();
  Character chi{{1, 0}};
  ASSERT_TRUE(is_character(p, chi));
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    CosetTable t = cyclic_cover(p, chi, n);
    EXPECT_EQ(t.index(), n);
    EXPECT_TRUE(t.is_valid_for(p));
    CosetTable tc = todd_coxeter(p, t.subgroup_gens);
    EXPECT_EQ(standardized(t).rows, tc.rows);
  }
  Presentation q = v3396();
  for (const Character& c : {Character{{0, 1, 0}}, Character{{0, 1, 1}}}) {
    if (!is_character(q, c)) continue;
    CosetTable t = cyclic_cover(q, c, 3);
    EXPECT_EQ(standardized(t).rows, todd_coxeter(q, t.subgroup_gens).rows);
  }
}

TEST(CyclicCover, Errors) {
  Presentation p = v3036();
  expect_errc(Errc::NotPrimitive, [&] { (void)cyclic_cover(p, Character{{2, 0}}, 2); });
  expect_errc(Errc::NotACharacter, [&] { (void)cyclic_cover(p, Character{{0, 1}}, 2); });
}

TEST(UnitWord, HitsOne) {
  for (const Character& c : {Character{{3, 5}}, Character{{0, -1, 0}}, Character{{6, 10, 15}}}) {
    EXPECT_EQ(c(unit_word(c)), 1);
  }
}

TEST(ReidemeisterSchreier, IndexOneIsTheGroup) {
  Presentation p = v3396();
  CosetTable t = todd_coxeter(p, {p.word("a"), p.word("b"), p.word("c")});
  SubgroupPresentation s = reidemeister_schreier(p, t);
  EXPECT_EQ(s.presentation.num_generators(), 3u);
  EXPECT_EQ(abelianization(s.presentation).describe(), abelianization(p).describe());
}

TEST(ReidemeisterSchreier, SchreierCounts) {
  Presentation p = v3036();
  for (std::size_t n : {2u, 3u, 4u}) {
    SubgroupPresentation s = reidemeister_schreier(p, cyclic_cover(p, Character{{1, 0}}, n));
    EXPECT_EQ(s.presentation.num_generators(), n + 1);
    EXPECT_EQ(s.presentation.relators.size(), n);
  }
}

TEST(ReidemeisterSchreier, ReferenceSubgroupHomology) {
  Presentation p = v3396();
  AbelianStructure h = subgroup_homology(p, {p.word("a"), p.word("cB"), p.word("b2")});
  EXPECT_EQ(h.betti, 2u);
  EXPECT_EQ(h.torsion, std::vector<Integer>{24});
}

TEST(ReidemeisterSchreier, InclusionGeneratesSubgroup) {
  Presentation p = v3396();
  for (const CosetTable& t : low_index_subgroups(p, 3).tables) {
    SubgroupPresentation s = reidemeister_schreier(p, t);
    EXPECT_EQ(todd_coxeter(p, s.inclusion).rows, t.rows);
    // Lifted relators act trivially on the cosets of a finite quotient.
    for (const Word& r : s.presentation.relators) {
      EXPECT_EQ(t.act(0, map_word(r, s.inclusion)), 0);
    }
  }
}

TEST(ReidemeisterSchreier, Incomplete) {
  Presentation p = v3036();
  CosetTable t = cyclic_cover(p, Character{{1, 0}}, 2);
  t.rows[1][0] = kUndefined;
  expect_errc(Errc::Incomplete, [&] { (void)reidemeister_schreier(p, t); });
}

TEST(SubgroupHomology, MatchesCoveringGraphOracle) {
  for (const Presentation& p :
       {v3036(), v3396(), make_presentation("v1539", "ab", {"a4B2Ab3AB2Ab3AB2"})}) {
    for (const CosetTable& t : low_index_subgroups(p, 4).tables) {
      AbelianStructure fast = subgroup_homology(p, t);
      AbelianStructure oracle = covering_graph_homology(p, t);
      EXPECT_EQ(fast.betti, oracle.betti) << p.name;
      EXPECT_EQ(fast.torsion, oracle.torsion) << p.name;
    }
  }
}

TEST(Simplify, EliminatesSingletons) {
  TietzeResult r = simplify_presentation(make_presentation("x", "ab", {"ab"}));
  EXPECT_EQ(r.presentation.num_generators(), 1u);
  EXPECT_TRUE(r.presentation.relators.empty());
  EXPECT_EQ(r.presentation.generators, (Alphabet{"a"}));
  EXPECT_EQ(format_presentation(replay(make_presentation("x", "ab", {"ab"}), r.log)),
            format_presentation(r.presentation));
}

TEST(Simplify, KeepsCuspGenerators) {
  Presentation p = make_presentation("x", "ab", {"ab"});
  p.cusps.push_back({p.word("b"), p.word("a")});
  p.cusps[0].longitude = Word();
  TietzeResult r = simplify_presentation(p);
  EXPECT_EQ(r.presentation.generators, (Alphabet{"b"}));
}

TEST(Simplify, IdempotentAndPreservesHomology) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    Presentation p;
    p.name = "rand";
    p.generators = default_alphabet(3 + trial % 2);
    const int nrel = 1 + trial % 3;
    for (int i = 0; i < nrel; ++i) {
      p.relators.push_back(flab::testing::random_word(rng, static_cast<int>(p.num_generators()), 8));
    }
    TietzeResult once = simplify_presentation(p);
    TietzeResult twice = simplify_presentation(once.presentation);
    EXPECT_TRUE(twice.log.moves.empty());
    EXPECT_EQ(abelianization(once.presentation).describe(), abelianization(p).describe());
  }
}

TEST(Simplify, CoverPresentationShrinks) {
  Presentation p = v3396();
  CosetTable t = todd_coxeter(p, {p.word("a"), p.word("cB"), p.word("b2")});
  SubgroupPresentation raw = reidemeister_schreier(p, t);
  SubgroupPresentation s = simplify_subgroup(raw);
  EXPECT_LT(s.presentation.num_generators(), raw.presentation.num_generators());
  EXPECT_EQ(s.inclusion.size(), s.presentation.num_generators());
  EXPECT_EQ(todd_coxeter(p, s.inclusion).rows, t.rows);
}
