#include "flab/fox.hpp"

#include <algorithm>
#include <sstream>

#include "flab/error.hpp"

namespace flab {

void GroupRingElem::add(const Integer& coeff, const Word& w) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(free_reduce(w), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& rhs) const {
  GroupRingElem out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add(c, w);
  return out;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& rhs) const {
  GroupRingElem out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add(-c, w);
  return out;
}

GroupRingElem GroupRingElem::left_mul(const Word& w) const {
  GroupRingElem out;
  for (const auto& [v, c] : terms_) out.add(c, w * v);
  return out;
}

std::string GroupRingElem::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Integer mag = abs(c);
    if (mag != 1 || w.empty()) os << mag.get_str();
    if (!w.empty()) os << format_word(w, alphabet);
  }
  return os.str();
}

GroupRingElem fox_derivative(const Word& word, int gen) {
  GroupRingElem out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Letter l = word[i];
    if (l.gen != gen) continue;
    if (l.sign > 0) {
      out.add(1, word.slice(0, i));
    } else {
      out.add(-1, word.slice(0, i + 1));
    }
  }
  return out;
}

LaurentPoly abelian_eval(const GroupRingElem& elem, const AbelianStructure& ab) {
  LaurentPoly out(ab.betti);
  for (const auto& [w, c] : elem.terms()) out.add_term(ab.free_image(w), c);
  return out;
}

std::vector<std::string> variable_names(const Presentation& pres, const AbelianStructure& ab) {
  std::vector<std::string> names(ab.betti);
  for (std::size_t i = 0; i < ab.betti; ++i) {
    std::vector<int> hits;
    for (std::size_t g = 0; g < pres.num_generators(); ++g) {
      auto img = ab.free_image(g);
      bool unit = true;
      for (std::size_t j = 0; j < ab.betti; ++j) {
        if (img[j] != (j == i ? 1 : 0)) unit = false;
      }
      if (unit) hits.push_back(static_cast<int>(g));
    }
    if (hits.size() == 1) names[i] = pres.generators[hits[0]];
  }
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  const bool usable = std::none_of(names.begin(), names.end(),
                                   [](const std::string& s) { return s.empty(); }) &&
                      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (usable) return names;
  if (ab.betti == 1) return {"t"};
  for (std::size_t i = 0; i < ab.betti; ++i) names[i] = "t" + std::to_string(i + 1);
  return names;
}

AlexanderData alexander_matrix(const Presentation& pres) {
  AlexanderData data;
  data.basis = abelianization(pres);
  const AbelianStructure& ab = data.basis;
  if (ab.betti == 0) {
    throw Error(Errc::NoFreePart, "abelianization " + ab.describe() + " has no free part");
  }
  data.variables = variable_names(pres, ab);
  const std::size_t n = pres.num_generators();
  for (const Word& r : pres.relators) {
    std::vector<LaurentPoly> row(n, LaurentPoly(ab.betti));
    Exponents pos(ab.betti, 0);
    for (const Letter& l : r) {
      const auto step = ab.free_image(static_cast<std::size_t>(l.gen));
      if (l.sign > 0) {
        row[l.gen].add_term(pos, 1);
        for (std::size_t i = 0; i < ab.betti; ++i) pos[i] += step[i];
      } else {
        for (std::size_t i = 0; i < ab.betti; ++i) pos[i] -= step[i];
        row[l.gen].add_term(pos, -1);
      }
    }
    data.matrix.push_back(std::move(row));
  }
  return data;
}

LaurentPoly laurent_determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(0, 1);
  const std::size_t nvars = m[0][0].nvars();
  // Clear negative exponents column by column so elimination stays inside the
  // polynomial ring; the monomial factor is restored at the end.
  Exponents total(nvars, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Exponents lo(nvars, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i][j].is_zero()) continue;
      auto e = m[i][j].min_exponents();
      for (std::size_t v = 0; v < nvars; ++v) lo[v] = std::min(lo[v], e[v]);
    }
    Exponents shift(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      shift[v] = -lo[v];
      total[v] += lo[v];
    }
    for (std::size_t i = 0; i < n; ++i) m[i][j] = m[i][j].shifted(shift);
  }
  LaurentPoly prev = LaurentPoly::constant(nvars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly(nvars);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(v, prev);
        if (!q) throw std::logic_error("Bareiss step was not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = LaurentPoly(nvars);
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1].shifted(total);
  return negate ? -det : det;
}

namespace {

bool next_combination(std::vector<std::size_t>& s, std::size_t n) {
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] < n - s.size() + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < s.size(); ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

AlexanderData alexander_polynomial(const Presentation& pres) {
  AlexanderData data = alexander_matrix(pres);
  const std::size_t n = pres.num_generators();
  const std::size_t m = data.matrix.size();
  const std::size_t nvars = data.basis.betti;
  const std::size_t k = n - 1;
  if (k == 0) {
    // A 0x0 minor is 1.
    data.minors.push_back(LaurentPoly::constant(nvars, 1));
  } else if (m >= k) {
    std::vector<std::size_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    do {
      for (std::size_t drop = 0; drop < n; ++drop) {
        std::vector<std::vector<LaurentPoly>> sub;
        for (std::size_t r : rows) {
          std::vector<LaurentPoly> row;
          for (std::size_t c = 0; c < n; ++c) {
            if (c != drop) row.push_back(data.matrix[r][c]);
          }
          sub.push_back(std::move(row));
        }
        data.minors.push_back(laurent_determinant(std::move(sub)));
      }
    } while (next_combination(rows, m));
  }
  const bool all_zero = std::all_of(data.minors.begin(), data.minors.end(),
                                    [](const LaurentPoly& p) { return p.is_zero(); });
  if (all_zero) {
    data.status = DeltaStatus::ZeroIdeal;
    data.delta = LaurentPoly(nvars);
  } else {
    data.delta = laurent_gcd(data.minors);
  }
  return data;
}

SimpleFormData simple_form_data(const Presentation& pres, int gen) {
  if (!is_simple_form(pres, gen)) {
    throw Error(Errc::NotSimpleForm,
                "relators are not in simple form with respect to " + pres.generators.at(gen));
  }
  SimpleFormData out;
  std::vector<int> col(pres.num_generators(), -1);
  for (int g = 0; g < static_cast<int>(pres.num_generators()); ++g) {
    if (g == gen) continue;
    col[g] = static_cast<int>(out.other_generators.size());
    out.other_generators.push_back(g);
  }
  const std::size_t m = pres.relators.size(), n = out.other_generators.size();
  out.K = IntMatrix(m, n);
  out.L = IntMatrix(m, n);
  std::vector<std::optional<int>> single_u(m);
  for (std::size_t i = 0; i < m; ++i) {
    Word r = cyclically_reduced(pres.relators[i]);
    std::size_t start = 0;
    while (r[start] != Letter{gen, 1}) ++start;
    r = cyclic_rotate(r, start);
    bool after_inverse = false;
    long u_len = 0;
    Letter u_letter{};
    for (std::size_t p = 1; p < r.size(); ++p) {
      const Letter l = r[p];
      if (l.gen == gen) {
        after_inverse = true;
        continue;
      }
      IntMatrix& target = after_inverse ? out.L : out.K;
      target(i, col[l.gen]) += l.sign;
      if (!after_inverse) {
        ++u_len;
        u_letter = l;
      }
    }
    if (u_len == 1 && u_letter.sign > 0) single_u[i] = col[u_letter.gen];
  }
  if (m == n) {
    out.lead = determinant(out.K);
    out.trail = determinant(out.L);
    // Fibred shape: u_i = g_{pi(i)} for a permutation pi. Reorder rows so K = I.
    std::vector<int> row_for(n, -1);
    bool shape = true;
    for (std::size_t i = 0; i < m && shape; ++i) {
      if (!single_u[i] || row_for[*single_u[i]] != -1) {
        shape = false;
      } else {
        row_for[*single_u[i]] = static_cast<int>(i);
      }
    }
    if (shape) {
      // det(tI + L') with L' the rows of L permuted so row j has u = g_j.
      std::vector<std::vector<LaurentPoly>> mat(n, std::vector<LaurentPoly>(n, LaurentPoly(1)));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t c = 0; c < n; ++c) {
          mat[j][c] = LaurentPoly::constant(1, out.L(row_for[j], c));
          if (c == j) mat[j][c] += LaurentPoly::variable(1, 0);
        }
      }
      out.monodromy_charpoly = laurent_determinant(std::move(mat));
    }
  }
  return out;
}

ObstructionReport fibred_obstructions(const LaurentPoly& delta, const AbelianStructure& ab,
                                      const ManifoldFlags& flags) {
  ObstructionReport rep;
  if (delta.is_zero()) {
    rep.nonmonic_beta1 = ab.betti == 1;
    rep.newton_no_units = true;
    rep.notes.emplace_back("Alexander polynomial is zero");
    return rep;
  }
  const LaurentPredicates pred = laurent_predicates(delta);
  if (ab.betti == 1) {
    rep.nonmonic_beta1 = !pred.is_monic_univariate;
    const long span = pred.degree_span.at(0);
    if (flags.is_hyperbolic) rep.degree_too_small = span < 2;
    if (flags.is_closed && flags.is_hyperbolic) {
      rep.closed_hyperbolic_shape = span % 2 != 0 || span < 4 || !pred.is_monic_univariate;
    }
    rep.torsion_consistent = abs(pred.value_at_all_ones) == ab.torsion_order();
    if (!*rep.torsion_consistent) {
      rep.notes.push_back("|Delta(1)| = " + Integer(abs(pred.value_at_all_ones)).get_str() +
                          " differs from torsion order " + ab.torsion_order().get_str());
    }
  }
  bool unit_vertex = false;
  for (const auto& v : newton_vertices(delta)) {
    if (abs(v.coefficient) == 1) unit_vertex = true;
  }
  rep.newton_no_units = !unit_vertex;
  return rep;
}

}  // namespace flab
