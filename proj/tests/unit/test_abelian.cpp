#include <gtest/gtest.h>

#include <random>

#include "flab/abelian.hpp"
#include "flab/error.hpp"
#include "snf_oracle.hpp"
#include "test_util.hpp"

using namespace flab;

namespace {

std::vector<Integer> nonzero_diagonal(const SmithDecomposition& s) {
  std::vector<Integer> out;
  for (const auto& d : s.diagonal()) {
    if (d != 0) out.push_back(d);
  }
  return out;
}

Presentation v3396() { return make_presentation("v3396", "abc", {"aBca2bC", "a2cba2CAB"}); }
Presentation v3036() { return make_presentation("v3036", "ab", {"a3b3AbAb3a3b3AbAb4AbAb3"}); }
Presentation v3384() { return make_presentation("v3384", "abc", {"ab2ab2aCb2ab2abcb", "aCAc"}); }

}  // namespace

TEST(Smith, Examples) {
  auto s = smith_normal_form(IntMatrix{{3, 0, 0}, {3, 0, 0}});
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{3, 0}));
  EXPECT_EQ(s.rank(), 1u);
  auto z = smith_normal_form(IntMatrix(2, 3));
  EXPECT_TRUE(z.D.is_zero());
  IntMatrix a{{2, 4}, {6, 8}};
  auto t = smith_normal_form(a);
  EXPECT_EQ(t.diagonal(), (std::vector<Integer>{2, 4}));
  EXPECT_NO_THROW(check_smith_invariants(a, t));
}

TEST(Smith, RandomMatricesAgainstMinorOracle) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int trial = 0; trial < 500; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    const bool sparse = trial % 3 == 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = sparse && rng() % 2 ? 0 : val(rng);
    }
    auto s = smith_normal_form(a);
    ASSERT_NO_THROW(check_smith_invariants(a, s)) << to_string(a);
    EXPECT_EQ(nonzero_diagonal(s), oracle::invariant_factors_by_minors(a)) << to_string(a);
    EXPECT_EQ(abs(determinant(s.U)), 1);
    EXPECT_EQ(abs(determinant(s.V)), 1);
  }
}

TEST(Abelianization, Examples) {
  auto a = abelianization(v3396());
  EXPECT_EQ(a.betti, 2u);
  EXPECT_EQ(a.torsion, (std::vector<Integer>{3}));
  EXPECT_EQ(a.describe(), "Z_3 + Z + Z");
  auto b = abelianization(v3036());
  EXPECT_EQ(b.betti, 1u);
  EXPECT_EQ(b.torsion, (std::vector<Integer>{19}));
  Presentation f2;
  f2.generators = {"a", "b"};
  auto c = abelianization(f2);
  EXPECT_EQ(c.betti, 2u);
  EXPECT_TRUE(c.torsion.empty());
  EXPECT_EQ(abelianization(v3384()).describe(), "Z_5 + Z + Z");
}

TEST(Abelianization, RelatorImagesVanish) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    Presentation p;
    p.generators = {"a", "b", "c"};
    const int nrel = static_cast<int>(rng() % 4);
    for (int r = 0; r < nrel; ++r) p.relators.push_back(flab::testing::random_word(rng, 3, 12));
    auto ab = abelianization(p);
    for (const Word& r : p.relators) {
      const std::size_t dim = ab.betti + ab.torsion.size();
      std::vector<Integer> img(dim);
      for (const Letter& l : r) {
        for (std::size_t i = 0; i < dim; ++i) img[i] += l.sign * ab.gen_images[l.gen][i];
      }
      for (std::size_t i = 0; i < ab.betti; ++i) EXPECT_EQ(img[i], 0);
      for (std::size_t i = 0; i < ab.torsion.size(); ++i) {
        EXPECT_TRUE(mpz_divisible_p(img[ab.betti + i].get_mpz_t(), ab.torsion[i].get_mpz_t()));
      }
    }
    for (std::size_t i = 0; i + 1 < ab.torsion.size(); ++i) {
      EXPECT_TRUE(mpz_divisible_p(ab.torsion[i + 1].get_mpz_t(), ab.torsion[i].get_mpz_t()));
    }
    // Adding a consequence relator changes nothing.
    if (!p.relators.empty()) {
      Presentation q = p;
      q.relators.push_back(p.relators[0] * p.relators.back().inverse());
      auto ab2 = abelianization(q);
      EXPECT_EQ(ab2.betti, ab.betti);
      EXPECT_EQ(ab2.torsion, ab.torsion);
    }
  }
}

TEST(Characters, V3036IsStandardWithRespectToA) {
  auto lat = primitive_characters(abelianization(v3036()));
  ASSERT_EQ(lat.rank(), 1u);
  Character chi = lat.basis[0];
  EXPECT_EQ(std::abs(chi.values[0]), 1);
  EXPECT_EQ(chi.values[1], 0);
  EXPECT_TRUE(is_character(v3036(), chi));
}

TEST(Characters, V1539LatticeIsAllOfZ2) {
  Presentation p = make_presentation("v1539", "ab", {"a4B2Ab3AB2Ab3AB2"});
  auto lat = primitive_characters(abelianization(p));
  ASSERT_EQ(lat.rank(), 2u);
  Character chi{{3, -7}};
  EXPECT_TRUE(is_character(p, chi));
  auto coords = lat.coordinates(chi);
  ASSERT_EQ(coords.size(), 2u);
  EXPECT_EQ(lat.combine(coords), chi);
}

TEST(Characters, NoCharactersForFiniteAbelianization) {
  Presentation p = make_presentation("z2", "a", {"a2"});
  try {
    (void)primitive_characters(abelianization(p));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoCharacters);
  }
}

TEST(Characters, LatticeRejectsNonCharacters) {
  auto lat = primitive_characters(abelianization(v3396()));
  EXPECT_TRUE(lat.coordinates(Character{{1, 0, 0}}).empty());
  for (const auto& chi : lat.basis) EXPECT_TRUE(is_character(v3396(), chi));
}

TEST(StandardForm, V3384) {
  auto [q, log] = to_standard_form(v3384());
  auto ab = abelianization(q);
  EXPECT_EQ(ab.betti, 2u);
  EXPECT_TRUE(is_standard_form(q, {0, 1}));
  for (std::size_t g = ab.betti; g < q.num_generators(); ++g) {
    for (long v : ab.free_image(g)) EXPECT_EQ(v, 0);
  }
  EXPECT_EQ(replay(v3384(), log).relators, q.relators);
}

TEST(StandardForm, AlreadyStandardIsUnchanged) {
  auto [q, log] = to_standard_form(v3036());
  EXPECT_EQ(q.generators, v3036().generators);
  EXPECT_EQ(q.relators, reduced_relators(v3036()).relators);
}

TEST(StandardForm, RandomPresentationsReachStandardForm) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    Presentation p;
    p.generators = {"a", "b", "c"};
    const int nrel = 1 + static_cast<int>(rng() % 2);
    for (int r = 0; r < nrel; ++r) p.relators.push_back(flab::testing::random_reduced_word(rng, 3, 10));
    auto before = abelianization(p);
    auto [q, log] = to_standard_form(p);
    auto after = abelianization(q);
    EXPECT_EQ(after.betti, before.betti);
    EXPECT_EQ(after.torsion, before.torsion);
    std::vector<int> first;
    for (std::size_t i = 0; i < before.betti; ++i) first.push_back(static_cast<int>(i));
    EXPECT_TRUE(is_standard_form(q, first));
  }
}

TEST(StandardForm, OneRelatorAB) {
  auto [q, log] = to_standard_form(make_presentation("t", "ab", {"ab"}));
  EXPECT_EQ(abelianization(q).betti, 1u);
  EXPECT_TRUE(is_standard_form(q, {0}));
}

TEST(SimpleForm, Examples) {
  Presentation s594 = make_presentation("s594c", "pqrt", {"RQRtpqpT", "PQPTqPtP", "QPTRtRqP"});
  EXPECT_TRUE(is_simple_form(s594, "t"));
  EXPECT_FALSE(is_simple_form(v3036(), "a"));
  EXPECT_FALSE(is_simple_form(make_presentation("t", "ab", {"b3"}), "a"));
  try {
    (void)is_simple_form(v3036(), "z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownGenerator);
  }
}
