#include "flab/brown.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "flab/error.hpp"

namespace flab {

bool brown_top_condition(const std::vector<long>& h) {
  const std::size_t n = h.size();
  if (n == 0) return false;
  const long top = *std::max_element(h.begin(), h.end());
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i] == top) idx.push_back(i);
  }
  if (idx.size() == 1) return true;
  if (idx.size() == 2 && n > 2) {
    const std::size_t gap = idx[1] - idx[0];
    return gap == 1 || gap == n - 1;
  }
  return false;
}

namespace {

std::vector<long> negated(std::vector<long> v) {
  for (long& x : v) x = -x;
  return v;
}

Word reduced_nonempty(const Word& relator) {
  Word r = cyclically_reduced(relator);
  if (r.empty()) throw Error(Errc::BadRelator, "relator is trivial in the free group");
  return r;
}

long cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

long cross(const Point2& a, const Point2& b) { return a[0] * b[1] - a[1] * b[0]; }

Point2 primitive(Point2 d) {
  const long g = std::gcd(d[0], d[1]);
  if (g > 1) {
    d[0] /= g;
    d[1] /= g;
  }
  return d;
}

// Half-plane then cross-product ordering of directions by angle in [0, 2pi).
bool angle_less(const Point2& a, const Point2& b) {
  auto upper = [](const Point2& p) { return p[1] > 0 || (p[1] == 0 && p[0] > 0); };
  const bool ua = upper(a), ub = upper(b);
  if (ua != ub) return ua;
  return cross(a, b) > 0;
}

// One representative per +-pair: angle in [0, pi).
bool is_representative(const Point2& d) { return d[1] > 0 || (d[1] == 0 && d[0] > 0); }

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point2> h(2 * pts.size());
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

std::vector<long> heights_along(const LatticePath& path, long m, long n) {
  std::vector<long> h;
  h.reserve(path.points.size());
  for (const auto& p : path.points) h.push_back(m * p[0] + n * p[1]);
  return h;
}

}  // namespace

Rank1Result brown_rank1(const Word& relator, const Character& chi) {
  Rank1Result out;
  const Word r = reduced_nonempty(relator);
  if (r.generator_bound() > static_cast<int>(chi.values.size())) {
    throw Error(Errc::NotACharacter, "character has fewer values than the relator's generators");
  }
  if (chi.is_zero()) throw Error(Errc::NotACharacter, "zero character");
  if (chi(r) != 0) {
    throw Error(Errc::NotACharacter,
                "character takes value " + std::to_string(chi(r)) + " on the relator");
  }
  out.walk.relator = r;
  out.walk.chi = chi;
  out.walk.heights.push_back(0);
  for (const Letter& l : r) {
    out.walk.heights.push_back(out.walk.heights.back() + l.sign * chi.values[l.gen]);
  }
  if (chi.values.size() > 2) {
    out.note = "one relator on three or more generators: Sigma is empty";
    return out;
  }
  std::vector<long> cyc(out.walk.heights.begin(), out.walk.heights.end() - 1);
  out.sigma_pos = brown_top_condition(cyc);
  out.sigma_neg = brown_top_condition(negated(cyc));
  out.fg_kernel = out.sigma_pos && out.sigma_neg;
  return out;
}

LatticePath lattice_path(const Word& relator) {
  LatticePath path;
  path.relator = reduced_nonempty(relator);
  if (path.relator.generator_bound() > 2) {
    throw Error(Errc::NotRank2, "relator uses more than two generators");
  }
  const auto ev = exponent_vector(path.relator, 2);
  if (ev[0] != 0 || ev[1] != 0) {
    throw Error(Errc::NotRank2, "relator has exponent sums (" + std::to_string(ev[0]) + ", " +
                                    std::to_string(ev[1]) + ")");
  }
  Point2 p{0, 0};
  for (const Letter& l : path.relator) {
    path.points.push_back(p);
    p[l.gen] += l.sign;
  }
  return path;
}

bool ConeReport::in_sigma(long m, long n) const {
  if (m == 0 && n == 0) throw Error(Errc::NotACharacter, "zero direction");
  const Point2 d = primitive({m, n});
  return brown_top_condition(heights_along(path, d[0], d[1]));
}

bool ConeReport::query(long m, long n) const { return in_sigma(m, n) && in_sigma(-m, -n); }

bool ConeReport::hull_centrally_symmetric() const {
  if (hull.empty()) return true;
  // Symmetric about the centroid of the vertices iff v -> (sum / k) * 2 - v
  // permutes the vertex set; compare with doubled coordinates.
  const long k = static_cast<long>(hull.size());
  Point2 sum{0, 0};
  for (const auto& v : hull) {
    sum[0] += v[0];
    sum[1] += v[1];
  }
  std::set<Point2> scaled;
  for (const auto& v : hull) scaled.insert({k * v[0], k * v[1]});
  for (const auto& v : hull) {
    if (!scaled.count({2 * sum[0] - k * v[0], 2 * sum[1] - k * v[1]})) return false;
  }
  return true;
}

ConeReport brown_rank2(const Word& relator) {
  ConeReport rep;
  rep.path = lattice_path(relator);
  rep.hull = convex_hull(rep.path.points);
  std::map<Point2, long> visits;
  for (const auto& p : rep.path.points) ++visits[p];
  for (const auto& v : rep.hull) rep.hull_visits.push_back(visits[v]);

  // Critical directions: outward edge normals and their negatives.
  std::vector<Point2> crit;
  const std::size_t k = rep.hull.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point2& a = rep.hull[i];
    const Point2& b = rep.hull[(i + 1) % k];
    if (k == 2 && i == 1) break;
    const Point2 normal = primitive({b[1] - a[1], a[0] - b[0]});
    crit.push_back(normal);
    crit.push_back({-normal[0], -normal[1]});
  }
  std::sort(crit.begin(), crit.end(), angle_less);
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  // Alternating items: ray i, then the open arc from ray i to ray i+1.
  const std::size_t c = crit.size();
  std::vector<bool> ray_ok(c), arc_ok(c);
  for (std::size_t i = 0; i < c; ++i) {
    const Point2& a = crit[i];
    const Point2& b = crit[(i + 1) % c];
    ray_ok[i] = rep.query(a[0], a[1]);
    Point2 mid{a[0] + b[0], a[1] + b[1]};
    if (cross(a, b) <= 0 || (mid[0] == 0 && mid[1] == 0)) mid = {-a[1], a[0]};
    arc_ok[i] = rep.query(mid[0], mid[1]);
  }
  const bool any_ok = std::any_of(ray_ok.begin(), ray_ok.end(), [](bool b) { return b; }) ||
                      std::any_of(arc_ok.begin(), arc_ok.end(), [](bool b) { return b; });
  if (!any_ok) {
    rep.all_exceptional = true;
    return rep;
  }
  // Maximal runs of failing arcs (joined through failing rays) become open
  // sectors bounded by the rays before the first and after the last arc.
  std::vector<bool> inside_cone(c, false);
  for (std::size_t i = 0; i < c; ++i) {
    if (arc_ok[i]) continue;
    // Arc i starts a run unless ray i and the arc before it both fail.
    if (!ray_ok[i] && !arc_ok[(i + c - 1) % c]) continue;
    std::size_t j = i;
    while (!ray_ok[(j + 1) % c] && !arc_ok[(j + 1) % c]) {
      j = (j + 1) % c;
      inside_cone[j] = true;
    }
    const ExceptionalCone cone{crit[i], crit[(j + 1) % c]};
    if (is_representative(cone.from)) rep.exceptional_cones.push_back(cone);
  }
  for (std::size_t i = 0; i < c; ++i) {
    if (!ray_ok[i] && !inside_cone[i] && is_representative(crit[i])) {
      rep.exceptional_rays.push_back(crit[i]);
    }
  }
  std::sort(rep.exceptional_rays.begin(), rep.exceptional_rays.end(), angle_less);
  return rep;
}

std::optional<bool> brown_quotient(const Presentation& pres, std::size_t relator_index,
                                   const Character& chi) {
  if (pres.num_generators() != 2) {
    throw Error(Errc::Unsupported, "Brown's algorithm needs exactly two generators");
  }
  if (relator_index >= pres.relators.size()) {
    throw Error(Errc::BadRelator, "relator index out of range");
  }
  if (chi.values.size() != 2 || !is_character(pres, chi)) {
    throw Error(Errc::NotACharacter, "not a character of " + pres.name);
  }
  if (chi.is_zero()) return std::nullopt;
  const Word r = reduced_nonempty(pres.relators[relator_index]);
  const auto ev = exponent_vector(r, 2);
  if (ev[0] == 0 && ev[1] == 0) return brown_rank2(r).query(chi.values[0], chi.values[1]);
  return brown_rank1(r, chi).fg_kernel;
}

bool punctured_torus_bundle_test(const Presentation& pres) {
  if (pres.num_generators() != 2 || pres.relators.size() != 1) {
    throw Error(Errc::Unsupported, "needs a two-generator one-relator presentation");
  }
  if (!pres.flags.is_hyperbolic) {
    throw Error(Errc::Unsupported, "criterion applies to hyperbolic manifolds only");
  }
  const Word r = reduced_nonempty(pres.relators[0]);
  const auto ev = exponent_vector(r, 2);
  if (ev[0] == 0 && ev[1] == 0) return false;
  if (ev[0] != 0 && ev[1] != 0) {
    throw Error(Errc::Unsupported, "presentation is not in standard form");
  }
  Character chi{{ev[0] == 0 ? 1L : 0L, ev[0] == 0 ? 0L : 1L}};
  const Rank1Result res = brown_rank1(r, chi);
  std::set<long> levels(res.walk.heights.begin(), res.walk.heights.end());
  return levels.size() == 3 && res.fg_kernel;
}

// --- SVG ---------------------------------------------------------------------

namespace {

constexpr long kUnit = 20;
constexpr long kMargin = 20;

}  // namespace

std::string height_walk_svg(const HeightWalk& walk) {
  const auto& h = walk.heights;
  const long top = *std::max_element(h.begin(), h.end());
  const long bottom = *std::min_element(h.begin(), h.end());
  const long width = static_cast<long>(h.size() - 1) * kUnit + 2 * kMargin;
  const long height = (top - bottom) * kUnit + 2 * kMargin;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\">\n";
  os << "<line x1=\"0\" y1=\"" << kMargin + top * kUnit << "\" x2=\"" << width << "\" y2=\""
     << kMargin + top * kUnit << "\" stroke=\"#bbb\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"black\" points=\"";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) os << ' ';
    os << kMargin + static_cast<long>(i) * kUnit << ',' << kMargin + (top - h[i]) * kUnit;
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

std::string lattice_path_svg(const ConeReport& report) {
  const auto& pts = report.path.points;
  long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  auto sx = [&](long x) { return kMargin + (x - xmin) * kUnit; };
  auto sy = [&](long y) { return kMargin + (ymax - y) * kUnit; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (xmax - xmin) * kUnit + 2 * kMargin
     << "\" height=\"" << (ymax - ymin) * kUnit + 2 * kMargin << "\">\n";
  os << "<polygon fill=\"#eef\" stroke=\"#66c\" points=\"";
  for (std::size_t i = 0; i < report.hull.size(); ++i) {
    if (i) os << ' ';
    os << sx(report.hull[i][0]) << ',' << sy(report.hull[i][1]);
  }
  os << "\"/>\n<polyline fill=\"none\" stroke=\"black\" points=\"";
  for (const auto& p : pts) os << sx(p[0]) << ',' << sy(p[1]) << ' ';
  os << sx(0) << ',' << sy(0) << "\"/>\n";
  os << "<circle cx=\"" << sx(0) << "\" cy=\"" << sy(0) << "\" r=\"3\" fill=\"red\"/>\n";
  for (std::size_t i = 0; i < report.hull.size(); ++i) {
    const auto& v = report.hull[i];
    const long n = report.hull_visits[i];
    os << "<circle cx=\"" << sx(v[0]) << "\" cy=\"" << sy(v[1]) << "\" r=\"6\" fill=\""
       << (n == 1 ? "#6c6" : "#c66") << "\"/>\n";
    os << "<text x=\"" << sx(v[0]) + 8 << "\" y=\"" << sy(v[1]) - 8
       << "\" font-size=\"10\">" << n << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace flab
