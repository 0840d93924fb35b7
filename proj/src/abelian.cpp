#include "flab/abelian.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "flab/error.hpp"

namespace flab {

namespace {

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(Errc::Unsupported, "integer too large for machine word");
  return v.get_si();
}

Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Quotient rounded toward zero; keeps remainders smaller than the pivot.
Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const Integer& v : diagonal()) r += (v != 0);
  return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix D = a;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    for (;;) {
      // Pivot: smallest |entry| in the active block, row-major ties.
      std::size_t pr = m, pc = n;
      for (std::size_t i = k; i < m; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (D(i, j) == 0) continue;
          if (pr == m || abs_int(D(i, j)) < abs_int(D(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == m) return {std::move(U), std::move(D), std::move(V)};
      D.swap_rows(k, pr);
      U.swap_rows(k, pr);
      D.swap_cols(k, pc);
      V.swap_cols(k, pc);

      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (D(i, k) == 0) continue;
        const Integer q = tdiv(D(i, k), D(k, k));
        D.add_row_multiple(i, k, -q);
        U.add_row_multiple(i, k, -q);
        if (D(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (D(k, j) == 0) continue;
        const Integer q = tdiv(D(k, j), D(k, k));
        D.add_col_multiple(j, k, -q);
        V.add_col_multiple(j, k, -q);
        if (D(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = k + 1; i < m && divides; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (D(i, j) % D(k, k) != 0) {
            D.add_row_multiple(k, i, 1);
            U.add_row_multiple(k, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      if (D(k, k) < 0) {
        D.negate_row(k);
        U.negate_row(k);
      }
      break;
    }
  }
  return {std::move(U), std::move(D), std::move(V)};
}

void check_smith_invariants(const IntMatrix& a, const SmithDecomposition& snf) {
  if (snf.U * a * snf.V != snf.D) throw std::logic_error("U*A*V != D");
  for (std::size_t i = 0; i < snf.D.rows(); ++i) {
    for (std::size_t j = 0; j < snf.D.cols(); ++j) {
      if (i != j && snf.D(i, j) != 0) throw std::logic_error("D not diagonal");
    }
  }
  const auto d = snf.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) throw std::logic_error("negative invariant factor");
    if (i + 1 < d.size()) {
      if (d[i] == 0 && d[i + 1] != 0) throw std::logic_error("zero before nonzero");
      if (d[i] != 0 && d[i + 1] % d[i] != 0) throw std::logic_error("divisibility chain broken");
    }
  }
  if (abs_int(determinant(snf.U)) != 1) throw std::logic_error("U not unimodular");
  if (abs_int(determinant(snf.V)) != 1) throw std::logic_error("V not unimodular");
}

IntMatrix exponent_matrix(const Presentation& pres) {
  const std::size_t n = pres.num_generators();
  IntMatrix a(pres.relators.size(), n);
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    const auto v = exponent_vector(pres.relators[i], n);
    for (std::size_t j = 0; j < n; ++j) a(i, j) = v[j];
  }
  return a;
}

long Character::operator()(const Word& w) const {
  long s = 0;
  for (const Letter& l : w) s += l.sign * values.at(l.gen);
  return s;
}

long Character::gcd() const {
  long g = 0;
  for (long v : values) g = std::gcd(g, v);
  return g;
}

Character Character::operator-() const {
  Character c = *this;
  for (long& v : c.values) v = -v;
  return c;
}

bool is_character(const Presentation& pres, const Character& chi) {
  if (chi.values.size() != pres.num_generators()) return false;
  for (const Word& r : pres.relators) {
    if (chi(r) != 0) return false;
  }
  return true;
}

AbelianStructure abelianization(const Presentation& pres) {
  const std::size_t n = pres.num_generators();
  const SmithDecomposition snf = smith_normal_form(exponent_matrix(pres));
  const auto d = snf.diagonal();

  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> torsion_cols;
  AbelianStructure ab;
  for (std::size_t j = 0; j < n; ++j) {
    if (j >= d.size() || d[j] == 0) {
      free_cols.push_back(j);
    } else if (d[j] > 1) {
      torsion_cols.push_back(j);
      ab.torsion.push_back(d[j]);
    }
  }
  ab.betti = free_cols.size();
  ab.basis_change = snf.V;
  ab.gen_images.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    auto& img = ab.gen_images[g];
    for (std::size_t c : free_cols) img.push_back(snf.V(g, c));
    for (std::size_t c : torsion_cols) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), snf.V(g, c).get_mpz_t(), d[c].get_mpz_t());
      img.push_back(r);
    }
  }
  return ab;
}

std::vector<long> AbelianStructure::free_image(std::size_t gen) const {
  std::vector<long> v(betti);
  for (std::size_t i = 0; i < betti; ++i) v[i] = to_long(gen_images.at(gen)[i]);
  return v;
}

std::vector<long> AbelianStructure::free_image(const Word& w) const {
  std::vector<long> v(betti, 0);
  for (const Letter& l : w) {
    for (std::size_t i = 0; i < betti; ++i) v[i] += l.sign * to_long(gen_images.at(l.gen)[i]);
  }
  return v;
}

Character AbelianStructure::free_character(std::size_t i) const {
  Character c;
  for (std::size_t g = 0; g < gen_images.size(); ++g) c.values.push_back(to_long(gen_images[g].at(i)));
  return c;
}

Integer AbelianStructure::torsion_order() const {
  Integer o = 1;
  for (const Integer& t : torsion) o *= t;
  return o;
}

std::string AbelianStructure::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const Integer& t : torsion) {
    os << (first ? "" : " + ") << "Z_" << t.get_str();
    first = false;
  }
  for (std::size_t i = 0; i < betti; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

IntMatrix induced_free_map(const AbelianStructure& src, const AbelianStructure& dst,
                           const std::vector<Word>& images) {
  const std::size_t n = src.gen_images.size();
  if (images.size() != n) throw std::invalid_argument("one image per source generator required");
  const std::size_t b = src.betti, c = dst.betti;
  IntMatrix from(b, n), to(c, n);
  for (std::size_t g = 0; g < n; ++g) {
    auto v = src.free_image(g);
    auto w = dst.free_image(images[g]);
    for (std::size_t i = 0; i < b; ++i) from(i, g) = v[i];
    for (std::size_t i = 0; i < c; ++i) to(i, g) = w[i];
  }
  // The generator images span Z^b, so U * from * V = [I 0] and
  // from * (V[:, :b] * U) = I.
  SmithDecomposition s = smith_normal_form(from);
  IntMatrix right(n, b);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < b; ++j) right(i, j) = s.V(i, j);
  }
  return to * (right * s.U);
}

Character CharacterLattice::combine(const std::vector<long>& coeffs) const {
  if (coeffs.size() != basis.size()) throw Error(Errc::BadBasis, "coefficient count mismatch");
  Character c;
  if (basis.empty()) return c;
  c.values.assign(basis.front().values.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t g = 0; g < c.values.size(); ++g) c.values[g] += coeffs[i] * basis[i].values[g];
  }
  return c;
}

std::vector<long> CharacterLattice::coordinates(const Character& chi) const {
  // Solve chi = sum x_i basis_i over the integers via the Smith form of the
  // generator-by-basis matrix.
  const std::size_t n = chi.values.size();
  const std::size_t b = basis.size();
  IntMatrix m(n, b);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t g = 0; g < n; ++g) m(g, i) = basis[i].values[g];
  }
  const SmithDecomposition snf = smith_normal_form(m);
  // m = U^-1 D V^-1, so m x = c  <=>  D (V^-1 x) = U c.
  IntMatrix c(n, 1);
  for (std::size_t g = 0; g < n; ++g) c(g, 0) = chi.values[g];
  const IntMatrix uc = snf.U * c;
  IntMatrix y(b, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer di = i < b ? snf.D(i, i) : Integer(0);
    if (di == 0) {
      if (uc(i, 0) != 0) return {};
      continue;
    }
    if (uc(i, 0) % di != 0) return {};
    y(i, 0) = uc(i, 0) / di;
  }
  const IntMatrix x = snf.V * y;
  std::vector<long> out(b);
  for (std::size_t i = 0; i < b; ++i) out[i] = to_long(x(i, 0));
  return out;
}

CharacterLattice primitive_characters(const AbelianStructure& ab) {
  if (ab.betti == 0) throw Error(Errc::NoCharacters, "first Betti number is zero");
  CharacterLattice lat;
  for (std::size_t i = 0; i < ab.betti; ++i) lat.basis.push_back(ab.free_character(i));
  return lat;
}

TietzeResult to_standard_form(const Presentation& input) {
  Presentation pres = input;
  TietzeLog log;
  const std::size_t n = pres.num_generators();
  std::vector<bool> active(n, true);

  auto column_add = [&](std::size_t pivot, std::size_t col, long q) {
    // g_pivot := g_pivot * g_col^(-q) turns column col into col - q * pivot.
    Word repl = Word::generator(static_cast<int>(pivot)) *
                Word::generator(static_cast<int>(col)).pow(-q);
    SubstituteMove mv{static_cast<int>(pivot), pres.generators[pivot], free_reduce(repl)};
    pres = apply_move(pres, mv);
    log.moves.emplace_back(std::move(mv));
  };

  for (std::size_t row = 0; row < pres.relators.size(); ++row) {
    for (;;) {
      const auto ev = exponent_vector(pres.relators[row], n);
      std::size_t pivot = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (!active[j] || ev[j] == 0) continue;
        if (pivot == n || std::labs(ev[j]) < std::labs(ev[pivot])) pivot = j;
      }
      if (pivot == n) break;
      bool reduced = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot || !active[j] || ev[j] == 0) continue;
        column_add(pivot, j, ev[j] / ev[pivot]);
        reduced = false;
      }
      if (reduced) {
        active[pivot] = false;
        break;
      }
    }
  }

  // Zero-exponent generators first, original order otherwise.
  PermuteGeneratorsMove perm;
  for (std::size_t j = 0; j < n; ++j) {
    if (active[j]) perm.order.push_back(static_cast<int>(j));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!active[j]) perm.order.push_back(static_cast<int>(j));
  }
  bool identity = true;
  for (std::size_t j = 0; j < n; ++j) identity = identity && perm.order[j] == static_cast<int>(j);
  if (!identity) {
    pres = apply_move(pres, perm);
    log.moves.emplace_back(std::move(perm));
  }
  return {std::move(pres), std::move(log)};
}

bool is_standard_form(const Presentation& pres, const std::vector<int>& gens) {
  for (const Word& r : pres.relators) {
    const auto ev = exponent_vector(r, pres.num_generators());
    for (int g : gens) {
      if (ev.at(g) != 0) return false;
    }
  }
  return true;
}

bool is_simple_form(const Presentation& pres, int gen) {
  if (gen < 0 || static_cast<std::size_t>(gen) >= pres.num_generators()) {
    throw Error(Errc::UnknownGenerator, "generator index out of range");
  }
  if (pres.relators.empty()) return false;
  for (const Word& r : pres.relators) {
    const Word w = cyclically_reduced(r);
    if (w.count(gen, 1) != 1 || w.count(gen, -1) != 1) return false;
  }
  return true;
}

bool is_simple_form(const Presentation& pres, std::string_view gen) {
  const int idx = pres.generator_index(gen);
  if (idx < 0) throw Error(Errc::UnknownGenerator, "unknown generator '" + std::string(gen) + "'");
  return is_simple_form(pres, idx);
}

}  // namespace flab
