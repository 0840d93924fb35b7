#include "flab/pipeline.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "flab/brown.hpp"
#include "flab/error.hpp"
#include "flab/fox.hpp"
#include "flab/laurent.hpp"
#include "flab/parse.hpp"
#include "flab/serialize.hpp"

namespace flab {

namespace {

constexpr const char* kQuotientCaveat =
    "fibred-via-quotient: requires irreducibility or longitude-slope filling";

std::string join(const std::vector<long>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string char_text(const Character& chi) { return "(" + join(chi.values) + ")"; }

std::string words_text(const std::vector<Word>& words, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += format_word(words[i], alphabet);
  }
  return out;
}

std::string cones_text(const ConeReport& rep) {
  std::string out;
  for (const Point2& r : rep.exceptional_rays) {
    out += "+-(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + ") ";
  }
  for (const ExceptionalCone& c : rep.exceptional_cones) {
    out += "+-[(" + std::to_string(c.from[0]) + "," + std::to_string(c.from[1]) + ")..(" +
           std::to_string(c.to[0]) + "," + std::to_string(c.to[1]) + ")] ";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

// A primitive direction with finitely generated kernel, searching outward.
std::optional<Point2> fg_direction(const ConeReport& rep) {
  for (long r = 1; r <= 24; ++r) {
    for (long m = -r; m <= r; ++m) {
      for (long n : {r - std::abs(m), -(r - std::abs(m))}) {
        if (std::gcd(m, n) != 1) continue;
        if (rep.query(m, n)) return Point2{m, n};
      }
    }
  }
  return std::nullopt;
}

// Inclusion images carried through a Tietze log applied to `pres`.
std::vector<Word> transport_inclusion(Presentation pres, std::vector<Word> incl,
                                      const TietzeLog& log) {
  for (const TietzeMove& move : log.moves) {
    if (const auto* s = std::get_if<SubstituteMove>(&move)) {
      // old target = u f^e v with u, v over unchanged generators.
      const Word& r = s->replacement;
      std::size_t pos = 0;
      while (r[pos].gen != s->target) ++pos;
      const Word u = r.slice(0, pos);
      const Word v = r.slice(pos + 1, r.size() - pos - 1);
      Word f = map_word(u, incl).inverse() * incl[s->target] * map_word(v, incl).inverse();
      if (r[pos].sign < 0) f = f.inverse();
      incl[s->target] = free_reduce(f);
    } else if (const auto* e = std::get_if<EliminateMove>(&move)) {
      incl.erase(incl.begin() + e->gen);
    } else if (const auto* p = std::get_if<PermuteGeneratorsMove>(&move)) {
      std::vector<Word> next;
      for (int old : p->order) next.push_back(incl[old]);
      incl = std::move(next);
    }
    pres = apply_move(pres, move);
  }
  return incl;
}

// Unimodular substitutions until exactly one generator has nonzero value
// under chi; returns that generator, or -1 when chi is zero.
int isolate_stable_letter(SubgroupPresentation& sub, std::vector<long>& values) {
  for (;;) {
    int pivot = -1;
    for (std::size_t g = 0; g < values.size(); ++g) {
      if (values[g] != 0 && (pivot < 0 || std::abs(values[g]) < std::abs(values[pivot]))) {
        pivot = static_cast<int>(g);
      }
    }
    if (pivot < 0) return -1;
    bool done = true;
    for (std::size_t g = 0; g < values.size(); ++g) {
      if (static_cast<int>(g) == pivot || values[g] == 0) continue;
      done = false;
      const long k = values[g] / values[pivot];
      // old g = g' * pivot^k, so g' = g * pivot^-k.
      const Word replacement =
          Word::generator(static_cast<int>(g)) * Word::generator(pivot).pow(k);
      TietzeResult res = substitute(sub.presentation, static_cast<int>(g), replacement,
                                    sub.presentation.generators[g]);
      sub.inclusion = transport_inclusion(sub.presentation, sub.inclusion, res.log);
      sub.presentation = std::move(res.presentation);
      values[g] -= k * values[pivot];
    }
    if (done) return pivot;
  }
}

struct CoverAttempt {
  std::string summary;
  std::optional<FibredCertificate> certificate;
};

// Brings `cover` into simple form with respect to t if needed and runs the
// ascending HNN check. `descent` decides whether the fibre generators must
// vanish in the base's free homology.
CoverAttempt ascending_attempt(Presentation cover, int t, const std::vector<Word>& inclusion,
                               const Presentation& base, const AbelianStructure& base_ab,
                               const Character& chi, std::size_t n, bool descent) {
  std::string prefix = std::to_string(cover.num_generators()) + " generators, " +
                       std::to_string(cover.relators.size()) + " relators";
  if (!is_simple_form(cover, t)) {
    try {
      cover = reduced_relators(concat_double_relators(cover, t).presentation);
      prefix += ", relators concatenated";
    } catch (const Error& e) {
      if (e.code() != Errc::NoPattern) throw;
      return {prefix + "; not in simple form", std::nullopt};
    }
    if (!is_simple_form(cover, t)) return {prefix + "; not in simple form", std::nullopt};
  }
  const AscendingResult asc = ascending_hnn_check(cover, t);
  if (asc.verdict != HnnVerdict::Fibred) {
    return {prefix + "; fibre subwords do not generate", std::nullopt};
  }
  if (descent) {
    std::vector<Word> fiber_gens;
    for (std::size_t g = 0; g < cover.num_generators(); ++g) {
      if (static_cast<int>(g) != t) fiber_gens.push_back(Word::generator(static_cast<int>(g)));
    }
    if (!descent_check(SubgroupPresentation{cover, inclusion, base}, base_ab, fiber_gens)) {
      return {prefix + "; ascending, but fibre generators have infinite order in the base",
              std::nullopt};
    }
  }
  FibredCertificate cert;
  cert.kind = FibredCertificate::Kind::AscendingCover;
  cert.chi = chi;
  cert.degree = n;
  cert.cover = cover;
  cert.stable_letter = t;
  cert.side = asc.side;
  cert.subwords = asc.subwords;
  cert.inclusion = inclusion;
  return {prefix + "; ascending with fibre rank " + std::to_string(asc.fiber_rank), cert};
}

CoverAttempt try_cover(const Presentation& pres, const AbelianStructure& ab, const Character& chi,
                       std::size_t n) {
  const CosetTable table = cyclic_cover(pres, chi, n);
  SubgroupPresentation sub = simplify_subgroup(reidemeister_schreier(pres, table));
  std::vector<long> values;
  for (const Word& w : sub.inclusion) values.push_back(chi(w) / static_cast<long>(n));
  const int t = isolate_stable_letter(sub, values);
  if (t < 0) return {"character vanishes on the cover", std::nullopt};
  Presentation cover = reduced_relators(sub.presentation);
  cover.flags = pres.flags;
  return ascending_attempt(cover, t, sub.inclusion, pres, ab, chi, n, true);
}

bool relator_present(const Presentation& pres, const Word& relator, std::size_t& index) {
  const Word target = cyclically_reduced(relator);
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    if (cyclically_reduced(pres.relators[i]) == target) {
      index = i;
      return true;
    }
  }
  return false;
}

}  // namespace

const char* status_name(FibredStatus s) noexcept {
  switch (s) {
    case FibredStatus::Fibred: return "Fibred";
    case FibredStatus::NotFibred: return "NotFibred";
    case FibredStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

Presentation dehn_fill(const Presentation& pres, std::size_t cusp_index, long p, long q) {
  if (cusp_index >= pres.cusps.size()) {
    throw Error(Errc::NoCusp, pres.name + " has no cusp " + std::to_string(cusp_index));
  }
  if (q < 0 || std::gcd(p, q) != 1) {
    throw Error(Errc::BadSlope, "slope (" + std::to_string(p) + "," + std::to_string(q) +
                                    ") needs coprime p, q with q >= 0");
  }
  const Cusp& cusp = pres.cusps[cusp_index];
  Presentation out = pres;
  out.relators.push_back(free_reduce(cusp.meridian.pow(p) * cusp.longitude.pow(q)));
  out.cusps.erase(out.cusps.begin() + static_cast<long>(cusp_index));
  out.name = pres.name + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  out.flags.is_closed = out.flags.is_3manifold && out.cusps.empty();
  // Exceptional slopes need not be hyperbolic.
  out.flags.is_hyperbolic = false;
  return out;
}

namespace {

FibredVerdict decide_stages(const Presentation& input, const DecideOptions& opts) {
  FibredVerdict v;
  const Presentation pres = reduced_relators(input);
  const AbelianStructure ab = abelianization(pres);
  v.betti = ab.betti;
  v.evidence.push_back({"homology", ab.describe(), {}});
  if (ab.betti == 0) {
    v.status = FibredStatus::NotFibred;
    v.evidence.back().result += "; finite homology, no map onto Z";
    return v;
  }
  const CharacterLattice lattice = primitive_characters(ab);
  const bool two_gen = pres.num_generators() == 2;
  const bool one_relator = two_gen && pres.relators.size() == 1;

  // Stages 1 and 2 are decisions; later stages only add corroboration or a
  // certificate for the remaining cases.
  if (one_relator && ab.betti == 1) {
    const Character chi = lattice.basis[0];
    const Rank1Result res = brown_rank1(pres.relators[0], chi);
    StageEvidence e{"brown_rank1", res.fg_kernel ? "kernel finitely generated"
                                                 : "kernel not finitely generated",
                    {{"character", char_text(chi)}, {"walk", join(res.walk.heights, " ")}}};
    if (!res.note.empty()) e.artifacts["note"] = res.note;
    v.evidence.push_back(std::move(e));
    v.status = res.fg_kernel ? FibredStatus::Fibred : FibredStatus::NotFibred;
    if (res.fg_kernel) {
      v.certificate = FibredCertificate{};
      v.certificate->kind = FibredCertificate::Kind::BrownRank1;
      v.certificate->relator = pres.relators[0];
      v.certificate->chi = chi;
    }
  } else if (one_relator && ab.betti == 2) {
    const ConeReport rep = brown_rank2(pres.relators[0]);
    const auto dir = rep.all_exceptional ? std::nullopt : fg_direction(rep);
    StageEvidence e{"brown_rank2",
                    dir ? "some character has finitely generated kernel"
                        : "no character has finitely generated kernel",
                    {{"cones", rep.all_exceptional ? "all directions exceptional" : cones_text(rep)}}};
    if (dir) e.artifacts["character"] = char_text(Character{{(*dir)[0], (*dir)[1]}});
    v.evidence.push_back(std::move(e));
    v.status = dir ? FibredStatus::Fibred : FibredStatus::NotFibred;
    if (dir) {
      v.certificate = FibredCertificate{};
      v.certificate->kind = FibredCertificate::Kind::BrownRank2;
      v.certificate->relator = pres.relators[0];
      v.certificate->chi = Character{{(*dir)[0], (*dir)[1]}};
    }
  }

  // Stage 3: Alexander polynomial obstructions.
  try {
    const AlexanderData d = alexander_polynomial(pres);
    const ObstructionReport ob = fibred_obstructions(d.delta, d.basis, pres.flags);
    StageEvidence e{"alexander", ob.not_fibred() ? "obstruction" : "no obstruction",
                    {{"delta", d.status == DeltaStatus::ZeroIdeal ? "0" : to_string(d.delta, d.variables)}}};
    if (d.delta.nvars() == 1 && !d.delta.is_zero()) e.artifacts["bracket"] = to_bracket_string(d.delta);
    std::string notes;
    for (const std::string& n : ob.notes) notes += (notes.empty() ? "" : "; ") + n;
    if (!notes.empty()) e.artifacts["notes"] = notes;
    v.evidence.push_back(std::move(e));
    if (ob.not_fibred()) {
      if (v.status == FibredStatus::Fibred) {
        v.caveats.push_back("inconsistent evidence: Alexander obstruction against a Brown certificate");
      } else {
        v.status = FibredStatus::NotFibred;
      }
    }
  } catch (const Error& err) {
    v.evidence.push_back({"alexander", std::string("skipped: ") + err.what(), {}});
  }
  if (v.status != FibredStatus::Unknown) return v;

  // Stage 4: one-relator quotients of a two-generator group. A character of
  // the input with finitely generated kernel in <a, b | r_i> has finitely
  // generated kernel in the input too.
  if (two_gen && pres.relators.size() >= 2) {
    std::string tried;
    for (std::size_t i = 0; i < pres.relators.size() && v.status == FibredStatus::Unknown; ++i) {
      const auto ev = exponent_vector(pres.relators[i], 2);
      std::optional<Character> chi;
      std::string outcome;
      if (ev[0] == 0 && ev[1] == 0) {
        // Every direction is a character of the quotient; keep the input's.
        const ConeReport rep = brown_rank2(pres.relators[i]);
        for (long r = 1; r <= 12 && !chi; ++r) {
          for (long m = -r; m <= r && !chi; ++m) {
            const long n = r - std::abs(m);
            const Character c{{m, n}};
            if (std::gcd(m, n) == 1 && is_character(pres, c) && rep.query(m, n)) chi = c;
          }
        }
        outcome = chi ? "fg for " + char_text(*chi) : "no fg character of the input";
      } else {
        const long g = std::gcd(ev[0], ev[1]);
        const Character c{{ev[1] / g, -ev[0] / g}};
        if (!is_character(pres, c)) {
          outcome = "quotient character " + char_text(c) + " not a character of the input";
        } else {
          const auto fg = brown_quotient(pres, i, c);
          if (fg && *fg) chi = c;
          outcome = (chi ? "fg for " : "not fg for ") + char_text(c);
        }
      }
      tried += (tried.empty() ? "" : "; ") + std::to_string(i) + ": " + outcome;
      if (chi) {
        v.status = FibredStatus::Fibred;
        v.caveats.push_back(kQuotientCaveat);
        v.certificate = FibredCertificate{};
        v.certificate->kind = FibredCertificate::Kind::BrownQuotient;
        v.certificate->relator = pres.relators[i];
        v.certificate->chi = *chi;
      }
    }
    v.evidence.push_back({"brown_quotient",
                          v.status == FibredStatus::Fibred
                              ? "kernel finitely generated in a one-relator quotient"
                              : "no one-relator quotient certifies",
                          {{"relators", tried}}});
    if (v.status != FibredStatus::Unknown) return v;
  }

  // Stage 5: cyclic covers with an ascending HNN structure, starting with
  // the input itself for every generator it is in standard form for.
  StageEvidence covers{"cyclic_covers", "no cover certifies", {}};
  for (std::size_t g = 0; g < pres.num_generators() && v.status == FibredStatus::Unknown; ++g) {
    const int t = static_cast<int>(g);
    if (!is_standard_form(pres, {t})) continue;
    Character chi{std::vector<long>(pres.num_generators(), 0)};
    chi.values[g] = 1;
    const std::string key = "degree 1 " + char_text(chi);
    std::vector<Word> identity;
    for (std::size_t h = 0; h < pres.num_generators(); ++h) {
      identity.push_back(Word::generator(static_cast<int>(h)));
    }
    try {
      CoverAttempt a = ascending_attempt(pres, t, identity, pres, ab, chi, 1, false);
      covers.artifacts[key] = a.summary;
      if (a.certificate) {
        v.status = FibredStatus::Fibred;
        v.certificate = std::move(a.certificate);
        covers.result = "ascending HNN structure of the input";
      }
    } catch (const Error& err) {
      covers.artifacts[key] = std::string("failed: ") + err.what();
    }
  }
  for (std::size_t n = 2; n <= opts.max_cover && v.status == FibredStatus::Unknown; ++n) {
    for (const Character& chi : lattice.basis) {
      const std::string key = "degree " + std::to_string(n) + " " + char_text(chi);
      try {
        CoverAttempt a = try_cover(pres, ab, chi, n);
        covers.artifacts[key] = a.summary;
        if (a.certificate) {
          v.status = FibredStatus::Fibred;
          v.certificate = std::move(a.certificate);
          covers.result = "ascending HNN cover of " + key;
          break;
        }
      } catch (const Error& err) {
        covers.artifacts[key] = std::string("failed: ") + err.what();
      }
    }
  }
  if (v.certificate) {
    covers.artifacts["subwords"] = words_text(
        v.certificate->subwords, fiber_alphabet(v.certificate->cover, v.certificate->stable_letter));
  }
  v.evidence.push_back(std::move(covers));
  return v;
}

}  // namespace

FibredVerdict decide_fibred(const Presentation& input, const DecideOptions& opts) {
  FibredVerdict v = decide_stages(input, opts);
  // Annotation only: knot-exterior status is the user's claim.
  if (input.flags.is_knot_exterior) {
    v.evidence.push_back(
        {"knot", "annotation only: a knot exterior is fibred iff its longitude-slope filling is", {}});
  }
  return v;
}

bool verify_certificate(const Presentation& input, const FibredCertificate& cert) {
  const Presentation pres = reduced_relators(input);
  if (cert.chi.values.size() != pres.num_generators() || !is_character(pres, cert.chi) ||
      !cert.chi.is_surjective()) {
    return false;
  }
  if (cert.kind != FibredCertificate::Kind::AscendingCover) {
    std::size_t index = 0;
    if (pres.num_generators() != 2 || !relator_present(pres, cert.relator, index)) return false;
    const auto fg = brown_quotient(pres, index, cert.chi);
    return fg && *fg;
  }
  const Presentation& cover = cert.cover;
  const int t = cert.stable_letter;
  if (cert.degree < 1 || t < 0 || t >= static_cast<int>(cover.num_generators()) ||
      cert.inclusion.size() != cover.num_generators()) {
    return false;
  }
  // The cover sits in the kernel of chi mod degree, with t a unit there.
  const long n = static_cast<long>(cert.degree);
  for (std::size_t g = 0; g < cover.num_generators(); ++g) {
    const long value = cert.chi(cert.inclusion[g]);
    if (static_cast<int>(g) == t ? std::abs(value) != n : value != 0) return false;
  }
  const std::size_t rank = cover.num_generators() - 1;
  try {
    if (extract_fiber_subwords(cover, t, cert.side) != cert.subwords) return false;
    if (!generates_whole(build_folded_graph(cert.subwords, rank))) return false;
    if (!cover.flags.is_3manifold) {
      const FiberSide other =
          cert.side == FiberSide::TtoInverse ? FiberSide::InverseToT : FiberSide::TtoInverse;
      if (!generates_whole(build_folded_graph(extract_fiber_subwords(cover, t, other), rank))) {
        return false;
      }
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

namespace {

// Coordinates of e in the basis given by the columns of m (3x3, unimodular).
std::optional<std::vector<long>> solve3(const std::array<std::array<long, 3>, 3>& m,
                                        const std::vector<long>& e) {
  auto det3 = [](const std::array<std::array<long, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const long d = det3(m);
  if (d != 1 && d != -1) return std::nullopt;
  std::vector<long> x(3);
  for (int c = 0; c < 3; ++c) {
    auto mc = m;
    for (int r = 0; r < 3; ++r) mc[r][c] = e[r];
    x[c] = det3(mc) / d;
  }
  return x;
}

// A relator that is cyclically a commutator forces the images of the
// commuting pair into a cyclic subgroup of F2; if the third basis element
// then has nonzero exponent sum in another relator, no map onto F2 exists.
std::optional<std::string> commuting_relator_obstruction(const Presentation& pres) {
  if (pres.num_generators() != 3) return std::nullopt;
  const Alphabet& al = pres.generators;
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    const Word r = cyclically_reduced(pres.relators[i]);
    for (std::size_t rot = 0; rot < r.size(); ++rot) {
      const Word w = cyclic_rotate(r, rot);
      // Basis (p, q, u) as exponent columns, with r conjugate to [p, q].
      std::vector<std::array<Word, 3>> bases;
      if (w.size() == 4 && w[0].gen != w[1].gen && w[2] == w[0].inverse() &&
          w[3] == w[1].inverse()) {
        const int u = 3 - w[0].gen - w[1].gen;
        bases.push_back({Word{w[0]}, Word{w[1]}, Word::generator(u)});
      }
      // g H k^n G h K^n: with x = H g and Y = K^n h it becomes conjugate to
      // Y x y X, a commutator of x and Y, and (x, Y, k) is a basis.
      if (w.size() >= 6 && w.size() % 2 == 0) {
        const std::size_t n = (w.size() - 4) / 2;
        const Letter g = w[0], h = w[1].inverse(), k = w[2];
        bool ok = g.gen != h.gen && g.gen != k.gen && h.gen != k.gen;
        for (std::size_t j = 0; j < n; ++j) ok = ok && w[2 + j] == k && w[n + 4 + j] == k.inverse();
        ok = ok && w[n + 2] == g.inverse() && w[n + 3] == h;
        if (ok) {
          const Word x = Word{h.inverse(), g};
          const Word Y = Word{k.inverse()}.pow(static_cast<long>(n)) * Word{h};
          bases.push_back({x, Y, Word{k}});
        }
      }
      for (const auto& basis : bases) {
        std::array<std::array<long, 3>, 3> m{};
        for (int c = 0; c < 3; ++c) {
          const auto ev = exponent_vector(basis[c], 3);
          for (int row = 0; row < 3; ++row) m[row][c] = ev[row];
        }
        for (std::size_t j = 0; j < pres.relators.size(); ++j) {
          if (j == i) continue;
          const auto coords = solve3(m, exponent_vector(pres.relators[j], 3));
          if (coords && (*coords)[2] != 0) {
            return "relator " + pres.format(r) + " is a commutator of " + pres.format(basis[0]) +
                   " and " + pres.format(basis[1]) + "; relator " + pres.format(pres.relators[j]) +
                   " has exponent " + std::to_string((*coords)[2]) + " in " +
                   format_word(basis[2], al);
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CorankReport corank_bounds(const Presentation& input, const CorankOptions& opts) {
  CorankReport rep;
  const Presentation pres = reduced_relators(input);
  const AbelianStructure ab = abelianization(pres);
  const long betti = static_cast<long>(ab.betti);
  rep.lower = betti == 0 ? 0 : 1;
  rep.upper = betti;
  rep.evidence.push_back("betti " + std::to_string(betti));
  if (pres.relators.empty()) {
    rep.lower = rep.upper = static_cast<long>(pres.num_generators());
    rep.evidence.push_back("no relators: free of rank " + std::to_string(rep.lower));
    return rep;
  }
  auto cap = [&rep](long bound, std::string why) {
    rep.evidence.push_back(std::move(why));
    rep.upper = std::min(rep.upper, std::max(bound, rep.lower));
  };
  if (rep.upper <= 1) return rep;

  // (a) A two-generator group maps onto F2 only if it is F2.
  if (pres.num_generators() == 2 && !pres.relators.empty()) {
    cap(1, "two generators with a nontrivial relator: not F2, so no map onto F2");
  }
  // (b) Fibred groups with betti >= 2 cannot map onto F_betti.
  if (rep.upper > 1 && opts.use_fibred) {
    const FibredVerdict v = decide_fibred(pres, opts.decide);
    if (v.status == FibredStatus::Fibred) {
      cap(betti - 1, "fibred: a finitely generated normal subgroup of infinite index rules out F" +
                         std::to_string(betti));
    }
  }
  // (c) Commuting relator.
  if (rep.upper > 1) {
    if (auto why = commuting_relator_obstruction(pres)) cap(1, "commuting relator: " + *why);
  }
  if (rep.upper > 1 && opts.max_index >= 2) {
    try {
      const LowIndexResult low = low_index_subgroups(pres, std::min(opts.max_index, kMaxLowIndex));
      // (d) The index-2 subgroups pulled back from F2 have betti >= 3.
      const std::size_t index2 = low.counts.count(2) ? low.counts.at(2) : 0;
      if (index2 < 3) {
        cap(1, "only " + std::to_string(index2) + " subgroups of index 2");
      } else if (index2 == 3) {
        for (const CosetTable& table : low.tables) {
          if (table.index() != 2) continue;
          const AbelianStructure sub_ab = subgroup_homology(pres, table);
          if (sub_ab.betti < 3) {
            cap(1, "index-2 subgroup with homology " + sub_ab.describe() + " (betti below 3)");
            break;
          }
        }
      }
      // (e) Pull-backs of F2's subgroups are distinct up to conjugacy.
      for (const auto& [index, count] : low.counts) {
        if (index < std::size(kFreeRank2Counts) && count < kFreeRank2Counts[index]) {
          cap(1, "index " + std::to_string(index) + ": " + std::to_string(count) +
                     " conjugacy classes, F2 has " + std::to_string(kFreeRank2Counts[index]));
          break;
        }
      }
    } catch (const Error& err) {
      rep.evidence.push_back(std::string("subgroup tests skipped: ") + err.what());
    }
  }
  return rep;
}

BatchSummary run_batch(const std::string& input_text, std::ostream& out, const BatchOptions& opts) {
  const std::vector<ParsedBlock> blocks = parse_presentation_blocks(input_text);
  std::vector<std::string> lines(blocks.size());
  std::vector<int> outcome(blocks.size(), -1);  // FibredStatus, or -1 for an error

  auto work = [&](std::size_t i) {
    const ParsedBlock& b = blocks[i];
    Json j;
    j["index"] = i;
    j["line"] = b.first_line;
    if (!b.ok) {
      j["error"] = b.error;
      lines[i] = j.dump();
      return;
    }
    j["name"] = b.presentation.name;
    try {
      const auto start = std::chrono::steady_clock::now();
      const FibredVerdict v = decide_fibred(b.presentation, opts.decide);
      const auto mid = std::chrono::steady_clock::now();
      j["verdict"] = to_json(v, b.presentation);
      if (opts.corank) j["corank"] = to_json(corank_bounds(b.presentation, opts.corank_opts));
      if (opts.timings) {
        const auto end = std::chrono::steady_clock::now();
        using ms = std::chrono::duration<double, std::milli>;
        j["timings_ms"] = {{"decide", ms(mid - start).count()}, {"total", ms(end - start).count()}};
      }
      outcome[i] = static_cast<int>(v.status);
    } catch (const std::exception& e) {
      j["error"] = e.what();
    }
    lines[i] = j.dump();
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, blocks.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < blocks.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < jobs; ++k) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < blocks.size(); i = next++) work(i);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  BatchSummary s;
  s.entries = blocks.size();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out << lines[i] << '\n';
    switch (outcome[i]) {
      case static_cast<int>(FibredStatus::Fibred): ++s.fibred; break;
      case static_cast<int>(FibredStatus::NotFibred): ++s.not_fibred; break;
      case static_cast<int>(FibredStatus::Unknown): ++s.unknown; break;
      default: ++s.errors; break;
    }
  }
  if (!blocks.empty()) {
    Json summary{{"entries", s.entries},   {"fibred", s.fibred}, {"not_fibred", s.not_fibred},
                 {"unknown", s.unknown},   {"errors", s.errors}};
    out << Json{{"summary", summary}}.dump() << '\n';
  }
  return s;
}

std::string plot_svg(const Presentation& pres, std::size_t relator_index) {
  if (pres.num_generators() != 2) {
    throw Error(Errc::Unsupported, "plots need a two-generator presentation");
  }
  if (relator_index >= pres.relators.size()) {
    throw Error(Errc::BadRelator, "relator index out of range");
  }
  const Word r = cyclically_reduced(pres.relators[relator_index]);
  if (r.empty()) throw Error(Errc::Unsupported, "empty relator has nothing to draw");
  const auto ev = exponent_vector(r, 2);
  if (ev[0] == 0 && ev[1] == 0) return lattice_path_svg(brown_rank2(r));
  const AbelianStructure ab = abelianization(pres);
  if (ab.betti != 1) throw Error(Errc::Unsupported, "no unique character to draw the walk with");
  return height_walk_svg(brown_rank1(r, primitive_characters(ab).basis[0]).walk);
}

void emit_plot(const Presentation& pres, const std::string& path, std::size_t relator_index) {
  const std::string svg = plot_svg(pres, relator_index);
  std::ofstream f(path);
  if (!f) throw Error(Errc::Unsupported, "cannot write " + path);
  f << svg;
}

}  // namespace flab
