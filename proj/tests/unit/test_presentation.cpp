#include <gtest/gtest.h>

#include <random>

#include "flab/abelian.hpp"
#include "flab/error.hpp"
#include "flab/parse.hpp"
#include "flab/presentation.hpp"
#include "test_util.hpp"

using namespace flab;

namespace {

const char* kV3396 =
    "name: v3396\n"
    "gens: a b c\n"
    "rel: aBca2bC\n"
    "rel: a2cba2CAB\n"
    "flags: 3manifold hyperbolic\n";

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::Syntax;
}

}  // namespace

TEST(ParsePresentation, V3396) {
  Presentation p = parse_presentation(kV3396);
  EXPECT_EQ(p.name, "v3396");
  EXPECT_EQ(p.num_generators(), 3u);
  ASSERT_EQ(p.relators.size(), 2u);
  EXPECT_EQ(p.format(p.relators[1]), "a2cba2CAB");
  EXPECT_TRUE(p.flags.is_3manifold);
  EXPECT_TRUE(p.flags.is_hyperbolic);
  EXPECT_FALSE(p.flags.is_closed);
}

TEST(ParsePresentation, FreeGroupAndCusp) {
  Presentation f = parse_presentation("name: F2\ngens: a b\n");
  EXPECT_TRUE(f.relators.empty());
  Presentation v = parse_presentation(
      "name: v1539\ngens: a b\nrel: a4B2Ab3AB2Ab3AB2\ncusp: Ab | B3a5B2  # peripheral\n");
  ASSERT_EQ(v.cusps.size(), 1u);
  EXPECT_EQ(v.format(v.cusps[0].meridian), "Ab");
  EXPECT_EQ(v.format(v.cusps[0].longitude), "B3a5B2");
}

TEST(ParsePresentation, ErrorsCarryLineAndColumn) {
  try {
    (void)parse_presentation("name: x\ngens: a b\nrel: abz\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownGenerator);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { (void)parse_presentation("gens: a a\n"); }), Errc::DuplicateGenerator);
  EXPECT_EQ(code_of([] { (void)parse_presentation("gens: a b\ncusp: Ac | b\n"); }),
            Errc::UnknownGenerator);
  EXPECT_EQ(code_of([] { (void)parse_presentation("gens: a b\nbogus line\n"); }), Errc::Syntax);
}

TEST(ParsePresentation, BlocksIsolateErrors) {
  std::string text = std::string(kV3396) + "\nname: bad\ngens: a\nrel: q\n\n" +
                     "# comment\nname: F1\ngens: a\n";
  auto blocks = parse_presentation_blocks(text);
  ASSERT_EQ(blocks.size(), 3u);
  EXPECT_TRUE(blocks[0].ok);
  EXPECT_FALSE(blocks[1].ok);
  EXPECT_TRUE(blocks[2].ok);
  EXPECT_EQ(blocks[2].presentation.name, "F1");
}

TEST(ParsePresentation, FormatRoundTrip) {
  Presentation p = parse_presentation(kV3396);
  Presentation q = parse_presentation(format_presentation(p));
  EXPECT_EQ(q.relators, p.relators);
  EXPECT_EQ(q.generators, p.generators);
}

TEST(Substitute, V3384Witness) {
  Presentation p = make_presentation("v3384", "abc", {"ab2ab2aCb2ab2abcb", "aCAc"});
  auto [q, log] = substitute(p, "a", "yB2", "y");
  EXPECT_EQ(q.format(q.relators[0]), "y3B2Cb2y2Bcb");
  EXPECT_EQ(q.format(q.relators[1]), "yB2Cb2Yc");
  ASSERT_EQ(log.moves.size(), 1u);
  EXPECT_EQ(replay(p, log).relators, q.relators);
}

TEST(Substitute, PureRenameAndErrors) {
  Presentation p = make_presentation("t", "ab", {"ab"});
  auto [q, log] = substitute(p, "a", "x", "x");
  EXPECT_EQ(q.generators, (Alphabet{"x", "b"}));
  EXPECT_EQ(q.format(q.relators[0]), "xb");
  EXPECT_EQ(code_of([&] { (void)substitute(p, "a", "b", "x"); }), Errc::BadSubstitution);
  EXPECT_EQ(code_of([&] { (void)substitute(p, "a", "xbx", "x"); }), Errc::BadSubstitution);
  EXPECT_EQ(code_of([&] { (void)substitute(p, "z", "x", "x"); }), Errc::UnknownGenerator);
}

TEST(Substitute, V1539StandardFormWithRespectToB) {
  // a := bx makes the filling relator (Ab)^p (B3a5B2)^q free of x exponent.
  Presentation p = make_presentation("v1539", "ab", {"a4B2Ab3AB2Ab3AB2"});
  Word m = p.word("Ab"), l = p.word("B3a5B2");
  p.relators.push_back(free_reduce(m.pow(5) * l));
  auto [q, log] = substitute(p, "a", "bx", "x");
  for (const Word& r : q.relators) EXPECT_EQ(exponent_vector(r, 2)[1], 0);
}

TEST(Substitute, PreservesAbelianizationUnderRandomMoves) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Presentation p;
    p.generators = {"a", "b", "c"};
    for (int r = 0; r < 2; ++r) p.relators.push_back(flab::testing::random_reduced_word(rng, 3, 10));
    std::uniform_int_distribution<int> g3(0, 2);
    const int target = g3(rng);
    int other = g3(rng);
    if (other == target) other = (other + 1) % 3;
    std::uniform_int_distribution<int> kd(-3, 3);
    Word repl = Word::generator(target) * Word::generator(other).pow(kd(rng));
    if (rng() % 2) repl = Word::generator(other, -1) * repl;
    auto [q, log] = substitute(p, target, repl, p.generators[target]);
    AbelianStructure a = abelianization(p), b = abelianization(q);
    EXPECT_EQ(a.betti, b.betti);
    EXPECT_EQ(a.torsion, b.torsion);
  }
}

TEST(Tietze, InducedImagesMapRelatorsToConsequences) {
  // Eliminating b via relator ab: b = A. Images of a, b in the target.
  Presentation p = make_presentation("t", "ab", {"ab", "a3"});
  TietzeLog log;
  log.moves.emplace_back(EliminateMove{1, p.word("A"), 0});
  Presentation q = replay(p, log);
  EXPECT_EQ(q.num_generators(), 1u);
  ASSERT_EQ(q.relators.size(), 1u);
  EXPECT_EQ(q.format(q.relators[0]), "a3");
  auto images = induced_images(p, log);
  EXPECT_EQ(q.format(images[1]), "A");
}

TEST(Tietze, PermuteGenerators) {
  Presentation p = make_presentation("t", "abc", {"abC"});
  Presentation q = apply_move(p, PermuteGeneratorsMove{{2, 0, 1}});
  EXPECT_EQ(q.generators, (Alphabet{"c", "a", "b"}));
  EXPECT_EQ(q.format(q.relators[0]), "abC");
  EXPECT_EQ(q.relators[0], (Word{{1, 1}, {2, 1}, {0, -1}}));
}
