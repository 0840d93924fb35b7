#include "flab/serialize.hpp"

#include "flab/laurent.hpp"

namespace flab {

namespace {

// Exact integers become JSON numbers when they fit, strings otherwise.
Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json words_json(const std::vector<Word>& words, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(format_word(w, alphabet));
  return out;
}

Json point_json(const Point2& p) { return Json::array({p[0], p[1]}); }

}  // namespace

Json to_json(const Presentation& pres) {
  Json j;
  j["name"] = pres.name;
  j["generators"] = pres.generators;
  j["relators"] = words_json(pres.relators, pres.generators);
  Json cusps = Json::array();
  for (const Cusp& c : pres.cusps) {
    cusps.push_back({{"meridian", pres.format(c.meridian)}, {"longitude", pres.format(c.longitude)}});
  }
  j["cusps"] = cusps;
  Json flags = Json::array();
  if (pres.flags.is_3manifold) flags.push_back("3manifold");
  if (pres.flags.is_closed) flags.push_back("closed");
  if (pres.flags.is_hyperbolic) flags.push_back("hyperbolic");
  if (pres.flags.is_knot_exterior) flags.push_back("knot");
  j["flags"] = flags;
  return j;
}

Json to_json(const AbelianStructure& ab) {
  Json j;
  j["betti"] = ab.betti;
  Json torsion = Json::array();
  for (const Integer& d : ab.torsion) torsion.push_back(integer_json(d));
  j["torsion"] = torsion;
  j["description"] = ab.describe();
  Json images = Json::array();
  for (const auto& row : ab.gen_images) {
    Json r = Json::array();
    for (const Integer& x : row) r.push_back(integer_json(x));
    images.push_back(r);
  }
  j["gen_images"] = images;
  return j;
}

Json to_json(const AlexanderData& data) {
  Json j;
  j["variables"] = data.variables;
  j["status"] = data.status == DeltaStatus::Ok ? "ok" : "zero_ideal";
  j["delta"] = to_string(data.delta, data.variables);
  if (data.delta.nvars() == 1 && !data.delta.is_zero()) j["bracket"] = to_bracket_string(data.delta);
  Json minors = Json::array();
  for (const LaurentPoly& m : data.minors) minors.push_back(to_string(m, data.variables));
  j["minors"] = minors;
  return j;
}

Json to_json(const Rank1Result& res) {
  Json j;
  j["fg_kernel"] = res.fg_kernel;
  j["sigma_pos"] = res.sigma_pos;
  j["sigma_neg"] = res.sigma_neg;
  j["character"] = res.walk.chi.values;
  j["heights"] = res.walk.heights;
  if (!res.note.empty()) j["note"] = res.note;
  return j;
}

Json to_json(const ConeReport& rep) {
  Json j;
  Json hull = Json::array();
  for (std::size_t i = 0; i < rep.hull.size(); ++i) {
    hull.push_back({{"vertex", point_json(rep.hull[i])}, {"visits", rep.hull_visits[i]}});
  }
  j["hull"] = hull;
  Json rays = Json::array();
  for (const Point2& r : rep.exceptional_rays) rays.push_back(point_json(r));
  j["exceptional_rays"] = rays;
  Json cones = Json::array();
  for (const ExceptionalCone& c : rep.exceptional_cones) {
    cones.push_back({{"from", point_json(c.from)}, {"to", point_json(c.to)}});
  }
  j["exceptional_cones"] = cones;
  j["all_exceptional"] = rep.all_exceptional;
  return j;
}

Json to_json(const CosetTable& table, const Alphabet& alphabet) {
  Json j;
  j["index"] = table.index();
  Json action;
  for (std::size_t g = 0; g < table.num_gens; ++g) {
    Json images = Json::array();
    for (const auto& row : table.rows) images.push_back(row[2 * g]);
    action[g < alphabet.size() ? alphabet[g] : "g" + std::to_string(g)] = images;
  }
  j["action"] = action;
  j["subgroup_gens"] = words_json(table.subgroup_gens, alphabet);
  return j;
}

Json to_json(const SubgroupPresentation& sub) {
  Json j;
  j["presentation"] = to_json(sub.presentation);
  j["inclusion"] = words_json(sub.inclusion, sub.ambient.generators);
  return j;
}

Json to_json(const AscendingResult& res, const Alphabet& fiber_alphabet) {
  Json j;
  j["verdict"] = res.verdict == HnnVerdict::Fibred ? "Fibred" : "Inconclusive";
  j["fiber_rank"] = res.fiber_rank;
  j["side"] = res.side == FiberSide::TtoInverse ? "t_to_T" : "T_to_t";
  j["subwords"] = words_json(res.subwords, fiber_alphabet);
  j["forward_generates"] = res.forward_generates;
  if (res.backward_generates) j["backward_generates"] = *res.backward_generates;
  j["notes"] = res.notes;
  return j;
}

Json to_json(const FibredVerdict& verdict, const Presentation& pres) {
  Json j;
  j["status"] = status_name(verdict.status);
  j["betti"] = verdict.betti;
  Json evidence = Json::array();
  for (const StageEvidence& e : verdict.evidence) {
    Json item{{"stage", e.stage}, {"result", e.result}};
    if (!e.artifacts.empty()) {
      Json art;
      for (const auto& [k, v] : e.artifacts) art[k] = v;
      item["artifacts"] = art;
    }
    evidence.push_back(item);
  }
  j["evidence"] = evidence;
  j["caveats"] = verdict.caveats;
  if (verdict.certificate) {
    const FibredCertificate& c = *verdict.certificate;
    Json cert;
    switch (c.kind) {
      case FibredCertificate::Kind::BrownRank1: cert["kind"] = "brown_rank1"; break;
      case FibredCertificate::Kind::BrownRank2: cert["kind"] = "brown_rank2"; break;
      case FibredCertificate::Kind::BrownQuotient: cert["kind"] = "brown_quotient"; break;
      case FibredCertificate::Kind::AscendingCover: cert["kind"] = "ascending_cover"; break;
    }
    cert["character"] = c.chi.values;
    if (c.kind == FibredCertificate::Kind::AscendingCover) {
      cert["degree"] = c.degree;
      cert["cover"] = to_json(c.cover);
      cert["stable_letter"] = c.cover.generators.at(c.stable_letter);
      cert["side"] = c.side == FiberSide::TtoInverse ? "t_to_T" : "T_to_t";
      cert["subwords"] = words_json(c.subwords, fiber_alphabet(c.cover, c.stable_letter));
      cert["inclusion"] = words_json(c.inclusion, pres.generators);
    } else {
      cert["relator"] = pres.format(c.relator);
    }
    j["certificate"] = cert;
  }
  return j;
}

Json to_json(const CorankReport& rep) {
  return Json{{"lower", rep.lower}, {"upper", rep.upper}, {"evidence", rep.evidence}};
}

}  // namespace flab
