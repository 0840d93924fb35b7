#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "flab/error.hpp"
#include "flab/fox.hpp"
#include "flab/laurent.hpp"
#include "flab/parse.hpp"
#include "flab/pipeline.hpp"
#include "flab/serialize.hpp"
#include "reference_data.hpp"
#include "test_util.hpp"

using namespace flab;

namespace {

template <class F>
void expect_errc(Errc code, F&& f) {
  try {
    f();
    FAIL() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<Presentation> suite() {
  return {data::v3036(), data::v1539(), data::v2943(),      data::v3379(),
          data::v3384(), data::v3396(), data::s594_cover(), data::v3093_cover()};
}

const StageEvidence* find_stage(const FibredVerdict& v, const std::string& stage) {
  for (const StageEvidence& e : v.evidence) {
    if (e.stage == stage) return &e;
  }
  return nullptr;
}

// Mapping torus of a -> ab, b -> bab, then a := at so that no generator is
// in standard form.
Presentation twisted_cat() { return make_presentation("cat", "tab", {"taBTA", "tbTBTAB"}); }

}  // namespace

TEST(DehnFill, V1539FiveOne) {
  const Presentation p = dehn_fill(data::v1539(), 0, 5, 1);
  EXPECT_EQ(p.name, "v1539(5,1)");
  EXPECT_EQ(p.num_generators(), 2u);
  EXPECT_EQ(p.relators.size(), 2u);
  EXPECT_TRUE(p.cusps.empty());
  EXPECT_TRUE(p.flags.is_closed);
  EXPECT_EQ(abelianization(p).betti, 2u);
  EXPECT_EQ(p.relators[1], free_reduce(p.word("AbAbAbAbAbB3a5B2")));
}

TEST(DehnFill, MeridianFilling) {
  const Presentation p = dehn_fill(data::v1539(), 0, 1, 0);
  EXPECT_EQ(p.relators.back(), p.word("Ab"));
  EXPECT_EQ(abelianization(p).betti, 1u);
}

TEST(DehnFill, Errors) {
  expect_errc(Errc::BadSlope, [] { (void)dehn_fill(data::v1539(), 0, 2, 4); });
  expect_errc(Errc::BadSlope, [] { (void)dehn_fill(data::v1539(), 0, 1, -1); });
  expect_errc(Errc::BadSlope, [] { (void)dehn_fill(data::v1539(), 0, 0, 0); });
  expect_errc(Errc::NoCusp, [] { (void)dehn_fill(data::v1539(), 1, 1, 0); });
  expect_errc(Errc::NoCusp, [] { (void)dehn_fill(data::v3036(), 0, 1, 0); });
}

// Appending one relator raises the rank of the exponent matrix by at most one.
TEST(DehnFill, BettiDropsByAtMostOne) {
  const Presentation v = data::v1539();
  const long b = static_cast<long>(abelianization(v).betti);
  for (long p = -9; p <= 9; ++p) {
    for (long q = 0; q <= 5; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const long f = static_cast<long>(abelianization(dehn_fill(v, 0, p, q)).betti);
      EXPECT_TRUE(f == b || f == b - 1) << p << "," << q;
    }
  }
  std::mt19937 rng(5);
  for (Presentation s : suite()) {
    const long sb = static_cast<long>(abelianization(s).betti);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = static_cast<int>(s.num_generators());
      s.cusps = {{flab::testing::random_reduced_word(rng, n, 5), flab::testing::random_reduced_word(rng, n, 5)}};
      const long f = static_cast<long>(abelianization(dehn_fill(s, 0, 1, 1)).betti);
      EXPECT_TRUE(f == sb || f == sb - 1) << s.name;
    }
  }
}

TEST(DehnFill, V1539AlexanderFamily) {
  for (long q = 2; q <= 4; ++q) {
    for (long p = -7; p <= 9; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const AlexanderData d = alexander_polynomial(dehn_fill(data::v1539(), 0, p, q));
      ASSERT_EQ(d.delta.nvars(), 1u) << p << "," << q;
      LaurentPoly expected(1);
      for (long e : {0, 1, 3, 4}) expected.add_term({e}, q);
      expected.add_term({2}, q - p);
      EXPECT_EQ(to_string(normalize_units(d.delta)), to_string(normalize_units(expected)))
          << p << "," << q;
    }
  }
}

TEST(Decide, V3036NotFibredByBrownAndAlexander) {
  const FibredVerdict v = decide_fibred(data::v3036());
  EXPECT_EQ(v.status, FibredStatus::NotFibred);
  ASSERT_NE(find_stage(v, "brown_rank1"), nullptr);
  EXPECT_EQ(find_stage(v, "brown_rank1")->result, "kernel not finitely generated");
  ASSERT_NE(find_stage(v, "alexander"), nullptr);
  EXPECT_EQ(find_stage(v, "alexander")->result, "obstruction");
  EXPECT_EQ(find_stage(v, "alexander")->artifacts.at("bracket"), "[3,4,5]");
  EXPECT_FALSE(v.certificate.has_value());
}

TEST(Decide, V1539FiveTwoNotFibredByAlexander) {
  const FibredVerdict v = decide_fibred(dehn_fill(data::v1539(), 0, 5, 2));
  EXPECT_EQ(v.status, FibredStatus::NotFibred);
  EXPECT_EQ(v.evidence.back().stage, "alexander");
  EXPECT_EQ(v.evidence.back().artifacts.at("delta"), "2t^4 + 2t^3 - 3t^2 + 2t + 2");
}

TEST(Decide, V1539FillingsFibredViaQuotient) {
  for (long p : {2, 3}) {
    const Presentation filled = dehn_fill(data::v1539(), 0, p, 1);
    const FibredVerdict v = decide_fibred(filled);
    EXPECT_EQ(v.status, FibredStatus::Fibred) << p;
    ASSERT_TRUE(v.certificate.has_value());
    EXPECT_EQ(v.certificate->kind, FibredCertificate::Kind::BrownQuotient);
    EXPECT_EQ(v.certificate->relator, filled.relators[1]);
    const auto& chi = v.certificate->chi.values;
    EXPECT_TRUE(chi == (std::vector<long>{1, 1}) || chi == (std::vector<long>{-1, -1}));
    ASSERT_EQ(v.caveats.size(), 1u);
    EXPECT_NE(v.caveats[0].find("fibred-via-quotient"), std::string::npos);
    EXPECT_TRUE(verify_certificate(filled, *v.certificate));
  }
}

TEST(Decide, FiniteHomologyIsNotFibred) {
  const FibredVerdict v = decide_fibred(make_presentation("z6", "ab", {"a2", "b3", "abAB"}));
  EXPECT_EQ(v.status, FibredStatus::NotFibred);
  EXPECT_EQ(v.betti, 0u);
  EXPECT_EQ(v.evidence.size(), 1u);
}

TEST(Decide, ReferenceSuiteVerdicts) {
  const std::map<std::string, FibredStatus> expected{
      {"v3036", FibredStatus::NotFibred},       {"v1539", FibredStatus::Fibred},
      {"v2943", FibredStatus::NotFibred},       {"v3379", FibredStatus::NotFibred},
      {"v3384", FibredStatus::NotFibred},       {"v3396", FibredStatus::NotFibred},
      {"s594.cover2", FibredStatus::Fibred},    {"v3093.cover5", FibredStatus::Fibred}};
  for (const Presentation& p : suite()) {
    EXPECT_EQ(decide_fibred(p).status, expected.at(p.name)) << p.name;
  }
}

TEST(Decide, CoverRoute) {
  const Presentation p = twisted_cat();
  const FibredVerdict v = decide_fibred(p);
  ASSERT_EQ(v.status, FibredStatus::Fibred);
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_EQ(v.certificate->kind, FibredCertificate::Kind::AscendingCover);
  EXPECT_GE(v.certificate->degree, 2u);
  EXPECT_EQ(v.certificate->subwords.size(), 2u);
  EXPECT_TRUE(verify_certificate(p, *v.certificate));
}

TEST(Decide, GivenCoversCertifiedDirectly) {
  for (const Presentation& p : {data::s594_cover(), data::v3093_cover()}) {
    const FibredVerdict v = decide_fibred(p);
    ASSERT_TRUE(v.certificate.has_value()) << p.name;
    EXPECT_EQ(v.certificate->degree, 1u);
    EXPECT_EQ(v.certificate->subwords.size(), p.num_generators() - 1);
    EXPECT_TRUE(verify_certificate(p, *v.certificate));
  }
}

// Stages 1-2 decide; 3 only adds NotFibred; 4-5 only add Fibred.
TEST(Decide, KnotFlagIsOnlyAnAnnotation) {
  for (const Presentation& base : {data::v3036(), data::v1539()}) {
    Presentation knot = base;
    knot.flags.is_knot_exterior = true;
    const FibredVerdict plain = decide_fibred(base);
    const FibredVerdict marked = decide_fibred(knot);
    EXPECT_EQ(marked.status, plain.status) << base.name;
    ASSERT_EQ(marked.evidence.size(), plain.evidence.size() + 1);
    EXPECT_EQ(marked.evidence.back().stage, "knot");
  }
}

TEST(Decide, StagesNeverContradict) {
  std::vector<Presentation> inputs = suite();
  for (long p : {-3, 1, 2, 5, 7}) inputs.push_back(dehn_fill(data::v1539(), 0, p, 1));
  inputs.push_back(twisted_cat());
  for (const Presentation& p : inputs) {
    const FibredVerdict v = decide_fibred(p);
    for (const std::string& c : v.caveats) EXPECT_EQ(c.find("inconsistent"), std::string::npos);
    for (const char* stage : {"brown_rank1", "brown_rank2"}) {
      if (const StageEvidence* e = find_stage(v, stage)) {
        const bool fg = e->result.find("not finitely") == std::string::npos &&
                        e->result.find("no character") == std::string::npos;
        EXPECT_EQ(v.status, fg ? FibredStatus::Fibred : FibredStatus::NotFibred) << p.name;
      }
    }
    if (v.status == FibredStatus::Fibred) {
      ASSERT_TRUE(v.certificate.has_value()) << p.name;
      EXPECT_TRUE(verify_certificate(p, *v.certificate)) << p.name;
      const StageEvidence* alex = find_stage(v, "alexander");
      if (alex) EXPECT_EQ(alex->result, "no obstruction") << p.name;
    }
    if (v.status == FibredStatus::NotFibred) EXPECT_FALSE(v.certificate.has_value());
  }
}

TEST(Certificate, TamperingIsDetected) {
  const Presentation p = twisted_cat();
  const FibredCertificate good = *decide_fibred(p).certificate;
  FibredCertificate bad = good;
  bad.subwords.pop_back();
  EXPECT_FALSE(verify_certificate(p, bad));
  bad = good;
  bad.chi.values = {0, 1, 0};
  EXPECT_FALSE(verify_certificate(p, bad));
  bad = good;
  bad.stable_letter = 7;
  EXPECT_FALSE(verify_certificate(p, bad));

  const Presentation filled = dehn_fill(data::v1539(), 0, 2, 1);
  FibredCertificate brown = *decide_fibred(filled).certificate;
  EXPECT_TRUE(verify_certificate(filled, brown));
  brown.relator = filled.relators[0];  // the original relator gives no certificate
  EXPECT_FALSE(verify_certificate(filled, brown));
  brown.relator = filled.word("ab");
  EXPECT_FALSE(verify_certificate(filled, brown));
}

TEST(Corank, ReferenceExamples) {
  const CorankReport v3396 = corank_bounds(data::v3396());
  EXPECT_EQ(v3396.lower, 1);
  EXPECT_EQ(v3396.upper, 1);
  bool homology = false, counts = false;
  for (const std::string& e : v3396.evidence) {
    homology = homology || e.find("Z_24 + Z + Z") != std::string::npos;
    counts = counts || e.find("index 5: 64") != std::string::npos;
  }
  EXPECT_TRUE(homology);
  EXPECT_TRUE(counts);

  const CorankReport v2943 = corank_bounds(data::v2943());
  EXPECT_EQ(v2943.lower, 1);
  EXPECT_EQ(v2943.upper, 1);
  EXPECT_NE(v2943.evidence[1].find("two generators"), std::string::npos);

  const CorankReport v3384 = corank_bounds(data::v3384());
  EXPECT_EQ(v3384.upper, 1);
  EXPECT_NE(v3384.evidence.back().find("commuting relator"), std::string::npos);
}

TEST(Corank, SubstitutionPatternRelator) {
  // aCb2AcB2 is conjugate to a commutator after a = cx, c = b2Y; the first
  // relator has exponent 3 in b in the new basis.
  const Presentation p = make_presentation("pat", "abc", {"a2bAcb", "aCb2AcB2"});
  CorankOptions opts;
  opts.use_fibred = false;
  opts.max_index = 0;
  const CorankReport rep = corank_bounds(p, opts);
  ASSERT_EQ(abelianization(p).betti, 2u);
  EXPECT_EQ(rep.upper, 1);
  EXPECT_NE(rep.evidence.back().find("commuting relator"), std::string::npos);
}

TEST(Corank, FreeAndKnownGroups) {
  const CorankReport f2 = corank_bounds(make_presentation("F2", "ab", {}));
  EXPECT_EQ(f2.lower, 2);
  EXPECT_EQ(f2.upper, 2);
  const CorankReport f3 = corank_bounds(make_presentation("F3", "abc", {}));
  EXPECT_EQ(f3.lower, 3);
  EXPECT_EQ(f3.upper, 3);
  const CorankReport finite = corank_bounds(make_presentation("z2", "a", {"a2"}));
  EXPECT_EQ(finite.lower, 0);
  EXPECT_EQ(finite.upper, 0);
  const CorankReport z2 = corank_bounds(make_presentation("Z2", "ab", {"abAB"}));
  EXPECT_EQ(z2.upper, 1);
  // F2 x Z maps onto F2: the upper bound must not drop below 2.
  const CorankReport f2z = corank_bounds(make_presentation("F2xZ", "abc", {"acAC", "bcBC"}));
  EXPECT_LE(f2z.lower, 2);
  EXPECT_GE(f2z.upper, 2);
}

TEST(Corank, BoundsAreOrdered) {
  for (const Presentation& p : suite()) {
    const CorankReport r = corank_bounds(p);
    EXPECT_LE(0, r.lower);
    EXPECT_LE(r.lower, r.upper);
    EXPECT_LE(r.upper, static_cast<long>(abelianization(p).betti));
  }
}

TEST(Corank, FreeGroupCounts) {
  const LowIndexResult low = low_index_subgroups(make_presentation("F2", "ab", {}), 5);
  for (std::size_t n = 2; n <= 5; ++n) EXPECT_EQ(low.counts.at(n), kFreeRank2Counts[n]) << n;
}

TEST(Batch, EmptyInput) {
  std::ostringstream out;
  const BatchSummary s = run_batch("", out);
  EXPECT_EQ(s.entries, 0u);
  EXPECT_TRUE(out.str().empty());
}

TEST(Batch, ErrorIsolation) {
  const std::string text =
      "name: one\ngens: a b\nrel: abAB2\n\n"
      "name: broken\ngens: a b\nrel: a?b\n\n"
      "name: three\ngens: a b\nrel: BabAbaBAbA\n";
  std::ostringstream out;
  const BatchSummary s = run_batch(text, out);
  EXPECT_EQ(s.entries, 3u);
  EXPECT_EQ(s.errors, 1u);
  std::istringstream in(out.str());
  std::vector<Json> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(Json::parse(line));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0]["name"], "one");
  EXPECT_TRUE(lines[1].contains("error"));
  EXPECT_EQ(lines[2]["name"], "three");
  EXPECT_EQ(lines[2]["verdict"]["status"], "Fibred");
  EXPECT_EQ(lines[3]["summary"]["errors"], 1);
}

TEST(Batch, ParallelMatchesSerial) {
  const std::string text = read_file(FLAB_DATA_DIR "/reference_presentations.txt");
  std::ostringstream serial, parallel;
  BatchOptions opts;
  opts.corank = true;
  const BatchSummary s = run_batch(text, serial, opts);
  opts.jobs = 4;
  (void)run_batch(text, parallel, opts);
  EXPECT_EQ(serial.str(), parallel.str());
  EXPECT_EQ(s.fibred, 3u);
  EXPECT_EQ(s.not_fibred, 5u);
  EXPECT_EQ(serial.str().find("timings_ms"), std::string::npos);
}

TEST(Plot, LatticePathAndWalk) {
  const std::string path = plot_svg(data::v1539());
  EXPECT_EQ(path.rfind("<svg", 0), 0u);
  EXPECT_NE(path.find("polygon"), std::string::npos);
  const Presentation walk = make_presentation("fig2", "ab", {"AbAbB3a5B2"});
  const std::string svg = plot_svg(walk);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(svg, plot_svg(walk));
}

TEST(Plot, Unsupported) {
  expect_errc(Errc::Unsupported, [] { (void)plot_svg(make_presentation("e", "ab", {"aA"})); });
  expect_errc(Errc::Unsupported, [] { (void)plot_svg(data::v3396()); });
  expect_errc(Errc::BadRelator, [] { (void)plot_svg(data::v3036(), 3); });
}

TEST(Serialize, CosetTableShape) {
  const Presentation p = make_presentation("s3", "ab", {"a2", "b3", "abab"});
  const CosetTable t = todd_coxeter(p, {p.word("a")});
  const Json j = to_json(t, p.generators);
  EXPECT_EQ(j["index"], 3);
  ASSERT_TRUE(j["action"].contains("a"));
  EXPECT_EQ(j["action"]["b"].size(), 3u);
  EXPECT_EQ(j["subgroup_gens"][0], "a");
}

TEST(Serialize, VerdictCarriesCertificate) {
  const Presentation p = twisted_cat();
  const Json j = to_json(decide_fibred(p), p);
  EXPECT_EQ(j["status"], "Fibred");
  EXPECT_EQ(j["certificate"]["kind"], "ascending_cover");
  EXPECT_EQ(j["certificate"]["subwords"].size(), 2u);
}
