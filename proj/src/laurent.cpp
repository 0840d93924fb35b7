#include "flab/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "flab/error.hpp"

namespace flab {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Integer& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponents exps, const Integer& c) {
  LaurentPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i, long power) {
  Exponents e(nvars, 0);
  e.at(i) = power;
  return monomial(std::move(e));
}

Integer LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != nvars_) throw Error(Errc::RingMismatch, "exponent vector of wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_ring(const LaurentPoly& rhs) const {
  if (nvars_ != rhs.nvars_) {
    throw Error(Errc::RingMismatch, "Laurent polynomials in " + std::to_string(nvars_) +
                                        " and " + std::to_string(rhs.nvars_) + " variables");
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out += rhs;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out -= rhs;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  check_ring(rhs);
  LaurentPoly out(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(const Integer& k) const {
  LaurentPoly out(nvars_);
  if (k == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  if (shift.size() != nvars_) throw Error(Errc::RingMismatch, "shift of wrong length");
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < nvars_; ++i) f[i] += shift[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Exponents LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

Exponents LaurentPoly::max_exponents() const {
  if (terms_.empty()) return {};
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
  }
  return m;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly neg(const LaurentPoly& p) { return -p; }
LaurentPoly scalar_mul(const Integer& n, const LaurentPoly& p) { return p.scaled(n); }

namespace {

long total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); }

const std::pair<const Exponents, Integer>& graded_lex_leading(const LaurentPoly& p) {
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
    if (graded_lex_less(best->first, it->first)) best = it;
  }
  return *best;
}

Exponents negated(Exponents e) {
  for (long& x : e) x = -x;
  return e;
}

// --- polynomial gcd on non-negative exponents -------------------------------

int main_variable(const LaurentPoly& p) {
  int v = -1;
  for (const auto& [e, c] : p.terms()) {
    for (int i = static_cast<int>(e.size()) - 1; i > v; --i) {
      if (e[i] != 0) {
        v = i;
        break;
      }
    }
  }
  return v;
}

long degree_in(const LaurentPoly& p, int v) {
  long d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

// Coefficients of p as a polynomial in variable v (v-exponent zeroed).
std::vector<LaurentPoly> coeffs_in(const LaurentPoly& p, int v) {
  std::vector<LaurentPoly> out(degree_in(p, v) + 1, LaurentPoly(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[v] = 0;
    out[e[v]].add_term(f, c);
  }
  return out;
}

Integer integer_content(const LaurentPoly& p) {
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd(g, c);
  return g;
}

LaurentPoly divide_exact_or_throw(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = exact_divide(p, q);
  if (!r) throw std::logic_error("inexact division inside gcd");
  return *r;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, int v) {
  LaurentPoly g(p.nvars());
  for (const auto& c : coeffs_in(p, v)) {
    if (!c.is_zero()) g = poly_gcd(g, c);
  }
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& p, int v) {
  return divide_exact_or_throw(p, content_in(p, v));
}

// Pseudo-remainder of a by b in variable v.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, int v) {
  const long db = degree_in(b, v);
  const auto bc = coeffs_in(b, v);
  const LaurentPoly& lb = bc.back();
  const std::size_t n = a.nvars();
  while (!a.is_zero() && degree_in(a, v) >= db) {
    const long da = degree_in(a, v);
    const LaurentPoly la = coeffs_in(a, v).back();
    Exponents shift(n, 0);
    shift[v] = da - db;
    a = a * lb - b.shifted(shift) * la;
  }
  return a;
}

LaurentPoly positive_sign(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return graded_lex_leading(p).second < 0 ? -p : p;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return positive_sign(b);
  if (b.is_zero()) return positive_sign(a);
  const std::size_t n = a.nvars();
  const int v = std::max(main_variable(a), main_variable(b));
  if (v < 0) {
    return LaurentPoly::constant(n, gcd(integer_content(a), integer_content(b)));
  }
  if (degree_in(a, v) == 0) return poly_gcd(a, content_in(b, v));
  if (degree_in(b, v) == 0) return poly_gcd(content_in(a, v), b);

  const LaurentPoly ca = content_in(a, v);
  const LaurentPoly cb = content_in(b, v);
  LaurentPoly pa = divide_exact_or_throw(a, ca);
  LaurentPoly pb = divide_exact_or_throw(b, cb);
  if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
  LaurentPoly g(n);
  while (true) {
    LaurentPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (degree_in(r, v) == 0) {
      g = LaurentPoly::constant(n, 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  return positive_sign(poly_gcd(ca, cb) * primitive_part(g, v));
}

// --- convex hull helpers ------------------------------------------------------

using Point = Exponents;

long cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Point> hull_2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Solve the square rational system m x = rhs; nullopt if singular.
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> m,
                                            std::vector<mpq_class> rhs) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

// Is p a convex combination of the points indexed by subset? Uses the
// subset's affine hull when it is affinely independent.
bool in_simplex(const Point& p, const std::vector<Point>& pts,
                const std::vector<std::size_t>& subset) {
  const std::size_t k = subset.size();
  const std::size_t dim = p.size();
  // Normal equations restricted to the simplex: lambda_1..lambda_{k-1} for
  // q_i - q_0, then verify exactly.
  if (k == 1) return pts[subset[0]] == p;
  std::vector<std::vector<mpq_class>> g(k - 1, std::vector<mpq_class>(k - 1));
  std::vector<mpq_class> rhs(k - 1);
  const Point& q0 = pts[subset[0]];
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 1; j < k; ++j) {
      mpq_class dot = 0;
      for (std::size_t d = 0; d < dim; ++d) {
        dot += (pts[subset[i]][d] - q0[d]) * (pts[subset[j]][d] - q0[d]);
      }
      g[i - 1][j - 1] = dot;
    }
    mpq_class dot = 0;
    for (std::size_t d = 0; d < dim; ++d) dot += (pts[subset[i]][d] - q0[d]) * (p[d] - q0[d]);
    rhs[i - 1] = dot;
  }
  auto lam = solve(std::move(g), std::move(rhs));
  if (!lam) return false;
  mpq_class sum = 0;
  for (const auto& l : *lam) {
    if (l < 0) return false;
    sum += l;
  }
  if (sum > 1) return false;
  for (std::size_t d = 0; d < dim; ++d) {
    mpq_class x = q0[d];
    for (std::size_t i = 1; i < k; ++i) x += (*lam)[i - 1] * (pts[subset[i]][d] - q0[d]);
    if (x != p[d]) return false;
  }
  return true;
}

bool in_hull_of_others(const std::vector<Point>& pts, std::size_t idx) {
  const std::size_t dim = pts[idx].size();
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i != idx) others.push_back(i);
  }
  // Caratheodory: p lies in a simplex on at most dim + 1 of the others.
  std::vector<std::size_t> subset;
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (!subset.empty() && in_simplex(pts[idx], pts, subset)) return true;
    if (subset.size() == dim + 1) return false;
    for (std::size_t i = start; i < others.size(); ++i) {
      subset.push_back(others[i]);
      if (self(self, i + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool graded_lex_less(const Exponents& a, const Exponents& b) {
  const long da = total_degree(a);
  const long db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly normalize_units(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot normalize the zero polynomial");
  LaurentPoly out = p.shifted(negated(p.min_exponents()));
  return graded_lex_leading(out).second < 0 ? -out : out;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  const std::size_t n = p.nvars();
  if (q.nvars() != n) throw Error(Errc::RingMismatch, "division across rings");
  LaurentPoly quotient(n);
  if (p.is_zero()) return quotient;
  // A true quotient has per-variable exponent range [min p - min q, max p - max q].
  const Exponents pmin = p.min_exponents(), pmax = p.max_exponents();
  const Exponents qmin = q.min_exponents(), qmax = q.max_exponents();
  Exponents lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = pmin[i] - qmin[i];
    hi[i] = pmax[i] - qmax[i];
    if (lo[i] > hi[i]) return std::nullopt;
  }
  const auto& [qlead_e, qlead_c] = *q.terms().rbegin();
  LaurentPoly r = p;
  while (!r.is_zero()) {
    const auto& [rlead_e, rlead_c] = *r.terms().rbegin();
    if (!mpz_divisible_p(rlead_c.get_mpz_t(), qlead_c.get_mpz_t())) return std::nullopt;
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = rlead_e[i] - qlead_e[i];
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    }
    Integer c = rlead_c / qlead_c;
    LaurentPoly t = LaurentPoly::monomial(e, c);
    quotient += t;
    r -= q * t;
  }
  return quotient;
}

LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& polys) {
  std::optional<std::size_t> nvars;
  LaurentPoly g;
  bool any = false;
  for (const auto& p : polys) {
    if (nvars && *nvars != p.nvars()) throw Error(Errc::RingMismatch, "gcd across rings");
    if (!nvars) {
      nvars = p.nvars();
      if (*nvars > 3) {
        throw Error(Errc::Unsupported, "gcd in more than three variables is not supported");
      }
      g = LaurentPoly(*nvars);
    }
    if (p.is_zero()) continue;
    any = true;
    g = poly_gcd(g, p.shifted(negated(p.min_exponents())));
  }
  if (!any) throw Error(Errc::ZeroIdeal, "gcd of zero polynomials");
  return normalize_units(g);
}

std::vector<NewtonVertex> newton_vertices(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "Newton polytope of the zero polynomial");
  std::vector<Point> pts;
  for (const auto& [e, c] : p.terms()) pts.push_back(e);
  std::vector<Point> verts;
  const std::size_t n = p.nvars();
  if (pts.size() <= 1 || n == 0) {
    verts = pts;
  } else if (n == 1) {
    verts = {pts.front()};
    if (pts.back() != pts.front()) verts.push_back(pts.back());
  } else if (n == 2) {
    verts = hull_2d(pts);
  } else {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!in_hull_of_others(pts, i)) verts.push_back(pts[i]);
    }
  }
  std::sort(verts.begin(), verts.end());
  std::vector<NewtonVertex> out;
  for (auto& v : verts) out.push_back({v, p.coefficient(v)});
  return out;
}

LaurentPoly invert_variables(const LaurentPoly& p) {
  LaurentPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(negated(e), c);
  return out;
}

LaurentPredicates laurent_predicates(const LaurentPoly& p) {
  LaurentPredicates out;
  const std::size_t n = p.nvars();
  out.value_at_all_ones = 0;
  for (const auto& [e, c] : p.terms()) out.value_at_all_ones += c;
  if (p.is_zero()) {
    out.degree_span.assign(n, 0);
    return out;
  }
  const Exponents lo = p.min_exponents(), hi = p.max_exponents();
  for (std::size_t i = 0; i < n; ++i) out.degree_span.push_back(hi[i] - lo[i]);
  if (n == 1) {
    const Integer& a = p.terms().begin()->second;
    const Integer& b = p.terms().rbegin()->second;
    out.is_monic_univariate = abs(a) == 1 && abs(b) == 1;
  }
  const LaurentPoly np = normalize_units(p);
  out.is_symmetric_under_inversion = normalize_units(invert_variables(p)) == np;
  return out;
}

LaurentPoly change_variables(const LaurentPoly& p, const IntMatrix& k) {
  const std::size_t n = p.nvars();
  if (k.rows() != n || k.cols() != n) {
    throw Error(Errc::BadBasis, "basis change must be " + std::to_string(n) + "x" +
                                    std::to_string(n));
  }
  if (abs(determinant(k)) != 1) throw Error(Errc::BadBasis, "basis change is not unimodular");
  LaurentPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) f[i] += k(i, j).get_si() * e[j];
    }
    out.add_term(f, c);
  }
  return out;
}

std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names_in) {
  const std::size_t n = p.nvars();
  std::vector<std::string> names = names_in;
  if (names.size() != n) {
    names.clear();
    if (n == 1) {
      names.push_back("t");
    } else {
      for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i + 1));
    }
  }
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, Integer>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return graded_lex_less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    const bool is_const = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    if (mag != 1 || is_const) os << mag.get_str();
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      os << names[i];
      if (e[i] != 1) os << '^' << e[i];
    }
  }
  return os.str();
}

std::string to_bracket_string(const LaurentPoly& p) {
  if (p.nvars() != 1 || p.is_zero()) return to_string(p);
  const LaurentPoly np = normalize_units(p);
  if (!laurent_predicates(np).is_symmetric_under_inversion) return to_string(p);
  const long span = np.max_exponents()[0];
  std::ostringstream os;
  const bool even = span % 2 == 0;
  os << (even ? '[' : '(');
  const long stop = even ? span / 2 : (span + 1) / 2;
  for (long d = span; d >= stop; --d) {
    if (d != span) os << ',';
    os << np.coefficient({d}).get_str();
  }
  os << (even ? ']' : ')');
  return os.str();
}

LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  LaurentPoly out(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw Error(Errc::Syntax, what + " at column " + std::to_string(i + 1));
  };
  auto read_int = [&]() -> std::optional<Integer> {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) return std::nullopt;
    return Integer(std::string(text.substr(start, i - start)));
  };
  skip_ws();
  if (i == text.size()) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Integer coeff = 1;
    if (auto c = read_int()) coeff = *c;
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    Exponents e(n, 0);
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t best = n;
      std::size_t best_len = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (text.substr(i).starts_with(names[v]) && names[v].size() > best_len) {
          best = v;
          best_len = names[v].size();
        }
      }
      if (best == n) fail("unknown variable");
      i += best_len;
      long power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        int psign = 1;
        if (i < text.size() && text[i] == '-') {
          psign = -1;
          ++i;
        }
        auto pw = read_int();
        if (!pw) fail("expected exponent");
        power = psign * pw->get_si();
      }
      e[best] += power;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    out.add_term(e, sign * coeff);
  }
  return out;
}

}  // namespace flab
