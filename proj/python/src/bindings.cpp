#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "flab/abelian.hpp"
#include "flab/brown.hpp"
#include "flab/covers.hpp"
#include "flab/error.hpp"
#include "flab/folding.hpp"
#include "flab/fox.hpp"
#include "flab/parse.hpp"
#include "flab/pipeline.hpp"
#include "flab/serialize.hpp"

namespace py = pybind11;
using namespace flab;

namespace {

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& e : j) out.append(to_py(e));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default: return py::none();
  }
}

std::vector<Word> words(const Presentation& p, const std::vector<std::string>& texts) {
  std::vector<Word> out;
  for (const std::string& t : texts) out.push_back(p.word(t));
  return out;
}

Character character(const Presentation& p, const std::optional<std::vector<long>>& chi) {
  if (chi) return Character{*chi};
  const CharacterLattice lat = primitive_characters(abelianization(p));
  if (lat.basis.empty()) throw Error(Errc::NoCharacters, p.name);
  return lat.basis.front();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fibring decisions for finitely presented 3-manifold groups";

  py::register_exception<Error>(m, "FlabError", PyExc_ValueError);

  py::class_<Presentation>(m, "Presentation")
      .def_readwrite("name", &Presentation::name)
      .def_readonly("generators", &Presentation::generators)
      .def_property_readonly("relators",
                             [](const Presentation& p) {
                               std::vector<std::string> out;
                               for (const Word& w : p.relators) out.push_back(p.format(w));
                               return out;
                             })
      .def_property_readonly("num_cusps", [](const Presentation& p) { return p.cusps.size(); })
      .def("to_dict", [](const Presentation& p) { return to_py(to_json(p)); })
      .def("__str__", &format_presentation)
      .def("__repr__", [](const Presentation& p) {
        return "<Presentation " + p.name + " on " + std::to_string(p.num_generators()) +
               " generators>";
      });

  m.def("parse", &parse_presentation, py::arg("text"), "Parse one presentation block.");
  m.def("parse_all", &parse_presentations, py::arg("text"), "Parse every block of a file.");
  m.def(
      "make_presentation",
      [](const std::string& name, const std::vector<std::string>& gens,
         const std::vector<std::string>& relators) {
        Presentation p;
        p.name = name;
        p.generators = gens;
        for (const std::string& r : relators) p.relators.push_back(p.word(r));
        return p;
      },
      py::arg("name"), py::arg("generators"), py::arg("relators"));

  m.def("abelianization", [](const Presentation& p) { return to_py(to_json(abelianization(p))); });
  m.def("alexander_polynomial",
        [](const Presentation& p) { return to_py(to_json(alexander_polynomial(p))); });

  m.def(
      "brown_rank1",
      [](const Presentation& p, std::optional<std::vector<long>> chi, std::size_t relator) {
        return to_py(to_json(brown_rank1(p.relators.at(relator), character(p, chi))));
      },
      py::arg("pres"), py::arg("chi") = py::none(), py::arg("relator") = 0);
  m.def(
      "brown_rank2",
      [](const Presentation& p, std::size_t relator) {
        return to_py(to_json(brown_rank2(p.relators.at(relator))));
      },
      py::arg("pres"), py::arg("relator") = 0);
  m.def(
      "brown_quotient",
      [](const Presentation& p, std::size_t relator, const std::vector<long>& chi) {
        return brown_quotient(p, relator, Character{chi});
      },
      py::arg("pres"), py::arg("relator"), py::arg("chi"));

  m.def("dehn_fill", &dehn_fill, py::arg("pres"), py::arg("cusp"), py::arg("p"), py::arg("q"));

  m.def(
      "coset_index",
      [](const Presentation& p, const std::vector<std::string>& gens) {
        const CosetTable t = todd_coxeter(p, words(p, gens));
        py::dict out;
        out["index"] = t.index();
        out["homology"] = to_py(to_json(subgroup_homology(p, t)));
        return out;
      },
      py::arg("pres"), py::arg("subgroup_gens"));
  m.def(
      "low_index_counts",
      [](const Presentation& p, std::size_t max_index) {
        return low_index_subgroups(p, max_index).counts;
      },
      py::arg("pres"), py::arg("max_index"));
  m.def(
      "cyclic_cover",
      [](const Presentation& p, std::size_t degree, std::optional<std::vector<long>> chi) {
        const SubgroupPresentation sub =
            simplify_subgroup(reidemeister_schreier(p, cyclic_cover(p, character(p, chi), degree)));
        return to_py(to_json(sub));
      },
      py::arg("pres"), py::arg("degree"), py::arg("chi") = py::none());

  m.def(
      "is_basis",
      [](const std::vector<std::string>& texts, std::size_t rank) {
        const Alphabet alpha = default_alphabet(rank);
        std::vector<Word> ws;
        for (const std::string& t : texts) ws.push_back(parse_word(t, alpha));
        return is_basis(ws, rank);
      },
      py::arg("words"), py::arg("rank"), "Words over a, b, c, ... (inverses upper case).");
  m.def(
      "generates_free_group",
      [](const std::vector<std::string>& texts, std::size_t rank) {
        const Alphabet alpha = default_alphabet(rank);
        std::vector<Word> ws;
        for (const std::string& t : texts) ws.push_back(parse_word(t, alpha));
        return generates_whole(build_folded_graph(ws, rank));
      },
      py::arg("words"), py::arg("rank"));

  m.def(
      "decide_fibred",
      [](const Presentation& p, std::size_t max_cover) {
        DecideOptions opts;
        opts.max_cover = max_cover;
        FibredVerdict v;
        {
          py::gil_scoped_release release;
          v = decide_fibred(p, opts);
        }
        return to_py(to_json(v, p));
      },
      py::arg("pres"), py::arg("max_cover") = DecideOptions{}.max_cover);
  m.def(
      "corank_bounds",
      [](const Presentation& p, std::size_t max_index) {
        CorankOptions opts;
        opts.max_index = max_index;
        return to_py(to_json(corank_bounds(p, opts)));
      },
      py::arg("pres"), py::arg("max_index") = CorankOptions{}.max_index);
  m.def(
      "run_batch",
      [](const std::string& text, std::size_t jobs, bool corank) {
        BatchOptions opts;
        opts.jobs = jobs;
        opts.corank = corank;
        std::ostringstream out;
        {
          py::gil_scoped_release release;
          (void)run_batch(text, out, opts);
        }
        py::list records;
        std::istringstream in(out.str());
        for (std::string line; std::getline(in, line);) records.append(to_py(Json::parse(line)));
        return records;
      },
      py::arg("text"), py::arg("jobs") = 1, py::arg("corank") = false,
      "One dict per block plus a final summary dict.");
  m.def("plot_svg", &plot_svg, py::arg("pres"), py::arg("relator") = 0);
}
