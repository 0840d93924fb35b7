// flab: decides whether 3-manifold groups given by presentations fibre.
//
// Exit codes: 0 success, 1 usage or unsupported request, 2 parse error,
// 3 resource bound exceeded (FLAB_MAX_COSETS overrides the coset bound).

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flab/abelian.hpp"
#include "flab/brown.hpp"
#include "flab/covers.hpp"
#include "flab/error.hpp"
#include "flab/fox.hpp"
#include "flab/laurent.hpp"
#include "flab/parse.hpp"
#include "flab/pipeline.hpp"
#include "flab/serialize.hpp"

namespace {

using namespace flab;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

// Missing files are reported like malformed ones.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Presentation> load(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return parse_presentations(text);
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(Errc::Unsupported, "expected comma-separated integers, got '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

Character character_arg(const Presentation& pres, const std::string& text) {
  Character chi{parse_longs(text)};
  if (chi.values.size() != pres.num_generators()) {
    throw Error(Errc::BadCount, "character needs one value per generator");
  }
  if (!is_character(pres, chi)) throw Error(Errc::NotACharacter, text);
  return chi;
}

Character first_character(const Presentation& pres) {
  const CharacterLattice lat = primitive_characters(abelianization(pres));
  if (lat.basis.empty()) throw Error(Errc::NoCharacters, pres.name);
  return lat.basis.front();
}

std::string values_text(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string point_text(const Point2& p) { return values_text({p[0], p[1]}); }

void print_json(const Json& j) { std::cout << j.dump() << '\n'; }

int cmd_parse(const std::string& file) {
  bool first = true;
  for (const Presentation& p : load(file)) {
    if (!first) std::cout << '\n';
    first = false;
    std::cout << format_presentation(p);
  }
  return 0;
}

int cmd_abelianize(const std::string& file, bool json) {
  for (const Presentation& p : load(file)) {
    const AbelianStructure ab = abelianization(p);
    if (json) {
      Json j = to_json(ab);
      j["name"] = p.name;
      print_json(j);
    } else {
      std::cout << p.name << ": " << ab.describe() << '\n';
    }
  }
  return 0;
}

int cmd_alex(const std::string& file, bool standard_form) {
  for (Presentation p : load(file)) {
    if (standard_form) {
      p = to_standard_form(p).presentation;
      std::cout << format_presentation(p);
    }
    const AlexanderData data = alexander_polynomial(p);
    std::cout << p.name << ": delta = " << to_string(data.delta, data.variables);
    if (data.delta.nvars() == 1 && !data.delta.is_zero()) {
      std::cout << "  " << to_bracket_string(data.delta);
    }
    std::cout << '\n';
    for (std::size_t i = 0; i < data.minors.size(); ++i) {
      std::cout << "  m" << i + 1 << " = " << to_string(data.minors[i], data.variables) << '\n';
    }
  }
  return 0;
}

int cmd_bns(const std::string& file, const std::string& chi_text, bool all) {
  for (const Presentation& raw : load(file)) {
    const Presentation p = reduced_relators(raw);
    if (p.num_generators() != 2 || p.relators.size() != 1) {
      std::cout << p.name << ": skipped, needs two generators and one relator\n";
      continue;
    }
    const std::size_t betti = abelianization(p).betti;
    if (betti == 2 && (all || chi_text.empty())) {
      const ConeReport rep = brown_rank2(p.relators[0]);
      std::cout << p.name << ": hull";
      for (std::size_t i = 0; i < rep.hull.size(); ++i) {
        std::cout << ' ' << point_text(rep.hull[i]) << 'x' << rep.hull_visits[i];
      }
      std::cout << '\n';
      if (rep.all_exceptional) {
        std::cout << "  every direction is exceptional\n";
        continue;
      }
      for (const Point2& r : rep.exceptional_rays) std::cout << "  exceptional +-" << point_text(r) << '\n';
      for (const ExceptionalCone& c : rep.exceptional_cones) {
        std::cout << "  exceptional cone " << point_text(c.from) << " .. " << point_text(c.to) << '\n';
      }
      continue;
    }
    const Character chi = chi_text.empty() ? first_character(p) : character_arg(p, chi_text);
    if (betti == 2) {
      const ConeReport rep = brown_rank2(p.relators[0]);
      std::cout << p.name << ' ' << values_text(chi.values) << ": "
                << (rep.query(chi.values[0], chi.values[1]) ? "fg" : "not fg") << '\n';
      continue;
    }
    const Rank1Result res = brown_rank1(p.relators[0], chi);
    std::cout << p.name << ' ' << values_text(chi.values) << ": "
              << (res.fg_kernel ? "fg" : "not fg") << "  chi in Sigma: " << res.sigma_pos
              << "  -chi in Sigma: " << res.sigma_neg << '\n';
    if (!res.note.empty()) std::cout << "  " << res.note << '\n';
  }
  return 0;
}

int cmd_fill(const std::string& file, std::size_t cusp, const std::string& slope) {
  const std::vector<long> pq = parse_longs(slope);
  if (pq.size() != 2) throw Error(Errc::BadSlope, "expected p,q");
  bool first = true;
  for (const Presentation& p : load(file)) {
    if (!first) std::cout << '\n';
    first = false;
    const Presentation filled = dehn_fill(p, cusp, pq[0], pq[1]);
    std::cout << format_presentation(filled) << "# H1 = " << abelianization(filled).describe() << '\n';
  }
  return 0;
}

int cmd_cover(const std::string& file, std::size_t degree, const std::string& chi_text) {
  if (degree == 0) throw Error(Errc::Unsupported, "degree must be positive");
  bool first = true;
  for (const Presentation& p : load(file)) {
    if (!first) std::cout << '\n';
    first = false;
    const Character chi = chi_text.empty() ? first_character(p) : character_arg(p, chi_text);
    const CosetTable table = cyclic_cover(p, chi, degree);
    SubgroupPresentation sub = simplify_subgroup(reidemeister_schreier(p, table));
    sub.presentation.name = p.name + ".cover" + std::to_string(degree);
    std::cout << format_presentation(sub.presentation);
    for (std::size_t i = 0; i < sub.inclusion.size(); ++i) {
      std::cout << "# " << sub.presentation.generators[i] << " -> " << p.format(sub.inclusion[i])
                << '\n';
    }
    std::cout << "# H1 = " << abelianization(sub.presentation).describe() << '\n';
  }
  return 0;
}

// Index and homology of one subgroup given by generator words.
int cmd_subgroup_index(const std::string& file, const std::string& gens_text, bool json) {
  for (const Presentation& p : load(file)) {
    std::vector<Word> gens;
    std::stringstream ss(gens_text);
    std::string item;
    while (std::getline(ss, item, ',')) gens.push_back(p.word(item));
    const CosetTable table = todd_coxeter(p, gens);
    const AbelianStructure h1 = subgroup_homology(p, table);
    if (json) {
      Json j{{"name", p.name}};
      j["table"] = to_json(table, p.generators);
      j["homology"] = to_json(h1);
      print_json(j);
      continue;
    }
    std::cout << p.name << ": index " << table.index() << ", H1 = " << h1.describe() << '\n';
  }
  return 0;
}

int cmd_subgroups(const std::string& file, std::size_t max_index, bool json) {
  if (max_index > kMaxLowIndex) {
    throw Error(Errc::Unsupported, "max index is " + std::to_string(kMaxLowIndex));
  }
  for (const Presentation& p : load(file)) {
    const LowIndexResult res = low_index_subgroups(p, max_index);
    if (json) {
      Json j{{"name", p.name}};
      Json counts;
      for (const auto& [idx, n] : res.counts) counts[std::to_string(idx)] = n;
      j["counts"] = counts;
      Json tables = Json::array();
      for (const CosetTable& t : res.tables) tables.push_back(to_json(t, p.generators));
      j["tables"] = tables;
      print_json(j);
      continue;
    }
    std::cout << p.name << ':';
    for (const auto& [idx, n] : res.counts) std::cout << " index " << idx << ": " << n << ';';
    std::cout << '\n';
  }
  return 0;
}

int cmd_fiber(const std::string& file, std::size_t max_cover, bool json) {
  DecideOptions opts;
  opts.max_cover = max_cover;
  for (const Presentation& p : load(file)) {
    const FibredVerdict v = decide_fibred(p, opts);
    if (json) {
      Json j{{"name", p.name}};
      j.update(to_json(v, p));
      print_json(j);
      continue;
    }
    std::cout << p.name << ": " << status_name(v.status) << " (betti " << v.betti << ")\n";
    for (const StageEvidence& e : v.evidence) std::cout << "  " << e.stage << ": " << e.result << '\n';
    for (const std::string& c : v.caveats) std::cout << "  caveat: " << c << '\n';
  }
  return 0;
}

int cmd_corank(const std::string& file, std::size_t max_index) {
  CorankOptions opts;
  opts.max_index = max_index;
  for (const Presentation& p : load(file)) {
    const CorankReport rep = corank_bounds(p, opts);
    std::cout << p.name << ": corank in [" << rep.lower << ", " << rep.upper << "]\n";
    for (const std::string& e : rep.evidence) std::cout << "  " << e << '\n';
  }
  return 0;
}

int cmd_plot(const std::string& file, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const Presentation& p : load(file)) {
    const std::string path = (std::filesystem::path(dir) / (p.name + ".svg")).string();
    emit_plot(p, path);
    std::cout << path << '\n';
  }
  return 0;
}

int cmd_batch(const std::string& file, const std::string& out_path, const BatchOptions& opts) {
  std::string text;
  try {
    text = read_file(file);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  const BatchSummary s = run_batch(text, out, opts);
  std::cout << s.entries << " entries: " << s.fibred << " fibred, " << s.not_fibred
            << " not fibred, " << s.unknown << " unknown, " << s.errors << " errors\n";
  return 0;
}

bool is_parse_error(Errc c) {
  return c == Errc::Syntax || c == Errc::UnknownGenerator || c == Errc::DuplicateGenerator;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether 3-manifold groups fibre over the circle"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  bool standard_form = false;
  bool all = false;
  std::string chi_text;
  std::size_t cusp = 0;
  std::string slope;
  std::size_t degree = 0;
  std::size_t max_index = 5;
  std::size_t max_cover = DecideOptions{}.max_cover;
  std::string out;
  BatchOptions batch;

  auto* parse = app.add_subcommand("parse", "Validate and echo normalized presentations");
  auto* abel = app.add_subcommand("abelianize", "First homology");
  abel->add_flag("--json", json);
  auto* alex = app.add_subcommand("alex", "Alexander polynomial");
  alex->add_flag("--standard-form", standard_form, "Rewrite to standard form first");
  auto* bns = app.add_subcommand("bns", "Brown's test for one-relator two-generator groups");
  auto* bns_char = bns->add_option("--char", chi_text, "Character values, e.g. 1,1");
  bns->add_flag("--all", all, "Report every exceptional direction")->excludes(bns_char);
  auto* fill = app.add_subcommand("fill", "Dehn filling");
  fill->add_option("--cusp", cusp)->required();
  fill->add_option("--slope", slope, "p,q")->required();
  auto* cover = app.add_subcommand("cover", "Cyclic cover via Reidemeister-Schreier");
  cover->add_option("--degree", degree)->required();
  cover->add_option("--char", chi_text, "Character values, one per generator");
  auto* subgroups = app.add_subcommand("subgroups", "Low-index subgroup counts");
  std::string gens_text;
  auto* sub_max = subgroups->add_option("--max-index", max_index, "Count classes up to this index");
  auto* sub_gens = subgroups->add_option("--gens", gens_text, "Words, e.g. a,cB,b2: index by coset enumeration");
  sub_max->excludes(sub_gens);
  subgroups->add_flag("--json", json);
  auto* fiber = app.add_subcommand("fiber", "Fibred decision");
  fiber->add_option("--max-cover", max_cover);
  fiber->add_flag("--json", json);
  auto* corank = app.add_subcommand("corank", "Co-rank bounds");
  corank->add_option("--max-index", max_index);
  auto* plot = app.add_subcommand("plot", "SVG of lattice path or height walk");
  plot->add_option("--out", out, "Output directory")->required();
  auto* bat = app.add_subcommand("batch", "JSON-lines report");
  bat->add_option("--out", out, "Report path")->required();
  bat->add_option("--jobs", batch.jobs)->check(CLI::PositiveNumber);
  bat->add_flag("--corank", batch.corank, "Add co-rank bounds");
  bat->add_flag("--timings", batch.timings, "Add wall-clock times");
  bat->add_option("--max-cover", batch.decide.max_cover);

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_option("FILE", file, "Presentation file")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*parse) return cmd_parse(file);
    if (*abel) return cmd_abelianize(file, json);
    if (*alex) return cmd_alex(file, standard_form);
    if (*bns) return cmd_bns(file, chi_text, all);
    if (*fill) return cmd_fill(file, cusp, slope);
    if (*cover) return cmd_cover(file, degree, chi_text);
    if (*subgroups) {
      return gens_text.empty() ? cmd_subgroups(file, max_index, json)
                               : cmd_subgroup_index(file, gens_text, json);
    }
    if (*fiber) return cmd_fiber(file, max_cover, json);
    if (*corank) return cmd_corank(file, max_index);
    if (*plot) return cmd_plot(file, out);
    if (*bat) {
      batch.corank_opts.decide = batch.decide;
      return cmd_batch(file, out, batch);
    }
  } catch (const InputError& e) {
    std::cerr << "flab: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "flab: " << e.what() << '\n';
    if (is_parse_error(e.code())) return kExitParse;
    if (e.code() == Errc::Overflow) return kExitResource;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "flab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
