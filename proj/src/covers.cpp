#include "flab/covers.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "flab/error.hpp"

namespace flab {

namespace {

constexpr int inverse_column(int col) noexcept { return col ^ 1; }

Letter column_letter(int col) noexcept { return {col / 2, col % 2 == 0 ? 1 : -1}; }

std::vector<Word> reduced_words(const std::vector<Word>& words) {
  std::vector<Word> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(free_reduce(w));
  return out;
}

}  // namespace

int CosetTable::act(int coset, const Word& w) const {
  for (Letter l : w) {
    if (coset == kUndefined) return kUndefined;
    coset = image(coset, l);
  }
  return coset;
}

bool CosetTable::is_complete() const {
  for (const auto& row : rows) {
    for (int v : row) {
      if (v == kUndefined) return false;
    }
  }
  return true;
}

bool CosetTable::is_valid_for(const Presentation& pres) const {
  if (!is_complete() || num_gens != pres.num_generators() || rows.empty()) return false;
  const int n = static_cast<int>(index());
  for (int c = 0; c < n; ++c) {
    for (std::size_t col = 0; col < 2 * num_gens; ++col) {
      const int d = rows[c][col];
      if (d < 0 || d >= n || rows[d][inverse_column(static_cast<int>(col))] != c) return false;
    }
    for (const Word& r : pres.relators) {
      if (act(c, r) != c) return false;
    }
  }
  for (const Word& w : subgroup_gens) {
    if (act(0, w) != 0) return false;
  }
  return true;
}

std::size_t default_max_cosets() {
  if (const char* env = std::getenv("FLAB_MAX_COSETS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 100000;
}

CosetTable standardized(const CosetTable& table) {
  const std::size_t n = table.index();
  const std::size_t cols = 2 * table.num_gens;
  std::vector<int> old_to_new(n, kUndefined);
  std::vector<int> order{0};
  old_to_new[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t col = 0; col < cols; ++col) {
      const int d = table.rows[order[i]][col];
      if (d != kUndefined && old_to_new[d] == kUndefined) {
        old_to_new[d] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  }
  CosetTable out;
  out.num_gens = table.num_gens;
  out.subgroup_gens = table.subgroup_gens;
  out.rows.assign(order.size(), std::vector<int>(cols, kUndefined));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t col = 0; col < cols; ++col) {
      const int d = table.rows[order[i]][col];
      out.rows[i][col] = d == kUndefined ? kUndefined : old_to_new[d];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter (HLT)

namespace {

class Enumerator {
 public:
  Enumerator(std::size_t ngens, std::size_t max_cosets)
      : cols_(2 * ngens), max_(max_cosets) {
    new_coset();
  }

  enum class Scan { Done, NoSpace };

  bool alive(int c) const { return forward_[c] == c; }
  std::size_t size() const { return table_.size(); }
  std::size_t live() const { return live_; }

  // Scan w from c, defining new cosets as needed.
  Scan scan_and_fill(int c, const Word& w) {
    const auto& ls = w.letters();
    if (ls.empty()) return Scan::Done;
    int f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(ls.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][letter_column(ls[i])] != kUndefined) {
        f = table_[f][letter_column(ls[i])];
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return Scan::Done;
      }
      while (j >= i && table_[b][letter_column(ls[j].inverse())] != kUndefined) {
        b = table_[b][letter_column(ls[j].inverse())];
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return Scan::Done;
      }
      if (i == j) {
        link(f, letter_column(ls[i]), b);
        return Scan::Done;
      }
      if (!has_space()) return Scan::NoSpace;
      link(f, letter_column(ls[i]), new_coset());
    }
  }

  // Scan without defining; deductions and coincidences only.
  void scan_only(int c, const Word& w) {
    const auto& ls = w.letters();
    if (ls.empty()) return;
    int f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(ls.size()) - 1;
    while (i <= j && table_[f][letter_column(ls[i])] != kUndefined) {
      f = table_[f][letter_column(ls[i])];
      ++i;
    }
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && table_[b][letter_column(ls[j].inverse())] != kUndefined) {
      b = table_[b][letter_column(ls[j].inverse())];
      --j;
    }
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      link(f, letter_column(ls[i]), b);
    }
  }

  bool fill_row(int c) {
    for (std::size_t col = 0; col < cols_; ++col) {
      if (!alive(c)) return true;
      if (table_[c][col] == kUndefined) {
        if (!has_space()) return false;
        link(c, static_cast<int>(col), new_coset());
      }
    }
    return true;
  }

  bool has_space() const { return live_ < max_ && table_.size() < 8 * max_ + 8; }

  CosetTable result(std::size_t ngens) const {
    CosetTable raw;
    raw.num_gens = ngens;
    std::vector<int> compact(table_.size(), kUndefined);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (alive(static_cast<int>(c))) compact[c] = next++;
    }
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(static_cast<int>(c))) continue;
      std::vector<int> row(cols_);
      for (std::size_t col = 0; col < cols_; ++col) row[col] = compact[table_[c][col]];
      raw.rows.push_back(std::move(row));
    }
    return standardized(raw);
  }

 private:
  int new_coset() {
    table_.emplace_back(cols_, kUndefined);
    forward_.push_back(static_cast<int>(forward_.size()));
    ++live_;
    return static_cast<int>(table_.size()) - 1;
  }

  void link(int c, int col, int d) {
    table_[c][col] = d;
    table_[d][inverse_column(col)] = c;
  }

  int rep(int c) {
    int r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      const int next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const int lo = std::min(a, b), hi = std::max(a, b);
    forward_[hi] = lo;
    --live_;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int g = queue[qi];
      for (std::size_t col = 0; col < cols_; ++col) {
        const int d = table_[g][col];
        if (d == kUndefined) continue;
        const int icol = inverse_column(static_cast<int>(col));
        table_[d][icol] = kUndefined;
        const int mu = rep(g), nu = rep(d);
        if (table_[mu][col] != kUndefined) {
          merge(nu, table_[mu][col], queue);
        } else if (table_[nu][icol] != kUndefined) {
          merge(mu, table_[nu][icol], queue);
        } else {
          table_[mu][col] = nu;
          table_[nu][icol] = mu;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_;
  std::size_t live_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> forward_;
};

[[noreturn]] void overflow(std::size_t max_cosets) {
  throw Error(Errc::Overflow, "coset enumeration exceeded " + std::to_string(max_cosets) +
                                  " cosets (index infinite or bound too small)");
}

}  // namespace

CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                        std::size_t max_cosets) {
  if (max_cosets == 0) max_cosets = default_max_cosets();
  const std::size_t ngens = pres.num_generators();
  for (const Word& w : subgroup_gens) {
    if (w.generator_bound() > static_cast<int>(ngens)) {
      throw Error(Errc::UnknownGenerator, "subgroup generator outside the presentation");
    }
  }
  const std::vector<Word> rels = reduced_words(pres.relators);
  const std::vector<Word> sub = reduced_words(subgroup_gens);
  Enumerator e(ngens, max_cosets);

  // Runs `step` until it succeeds; a shortage triggers one lookahead pass,
  // which must free some cosets.
  auto with_space = [&](const std::function<bool()>& step) {
    while (!step()) {
      const std::size_t before = e.live();
      for (std::size_t c = 0; c < e.size(); ++c) {
        for (const Word& r : rels) {
          if (e.alive(static_cast<int>(c))) e.scan_only(static_cast<int>(c), r);
        }
      }
      if (e.live() == before || !e.has_space()) overflow(max_cosets);
    }
  };

  for (const Word& w : sub) {
    with_space([&] { return e.scan_and_fill(0, w) == Enumerator::Scan::Done; });
  }
  for (std::size_t c = 0; c < e.size(); ++c) {
    const int ci = static_cast<int>(c);
    for (const Word& r : rels) {
      if (!e.alive(ci)) break;
      with_space([&] { return !e.alive(ci) || e.scan_and_fill(ci, r) == Enumerator::Scan::Done; });
    }
    if (e.alive(ci)) with_space([&] { return e.fill_row(ci); });
  }
  CosetTable out = e.result(ngens);
  out.subgroup_gens = subgroup_gens;
  if (!out.is_valid_for(pres)) {
    throw std::logic_error("todd_coxeter produced an inconsistent table");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Low-index subgroups

namespace {

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& pres, std::size_t max_index)
      : ngens_(pres.num_generators()), cols_(2 * ngens_), max_(max_index) {
    for (const Word& r : pres.relators) {
      Word w = cyclically_reduced(r);
      if (!w.empty()) rels_.push_back(std::move(w));
    }
  }

  LowIndexResult run() {
    rows_.assign(1, std::vector<int>(cols_, kUndefined));
    search();
    std::sort(found_.begin(), found_.end(), [](const CosetTable& a, const CosetTable& b) {
      if (a.index() != b.index()) return a.index() < b.index();
      return a.rows < b.rows;
    });
    LowIndexResult res;
    for (std::size_t i = 2; i <= max_; ++i) res.counts[i] = 0;
    for (const CosetTable& t : found_) ++res.counts[t.index()];
    res.tables = std::move(found_);
    return res;
  }

 private:
  using Rows = std::vector<std::vector<int>>;

  void search() {
    // First undefined slot in row-major order.
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      for (std::size_t col = 0; col < cols_; ++col) {
        if (rows_[c][col] != kUndefined) continue;
        const int icol = inverse_column(static_cast<int>(col));
        const std::size_t n = rows_.size();
        for (std::size_t d = 0; d <= n && d < max_; ++d) {
          if (d < n && rows_[d][icol] != kUndefined) continue;
          const Rows saved = rows_;
          if (d == n) rows_.emplace_back(cols_, kUndefined);
          rows_[c][col] = static_cast<int>(d);
          rows_[d][icol] = static_cast<int>(c);
          if (propagate() && canonical()) search();
          rows_ = saved;
        }
        return;
      }
    }
    if (rows_.size() >= 2 && canonical()) {
      CosetTable t;
      t.num_gens = ngens_;
      t.rows = rows_;
      t.subgroup_gens = schreier_generators(t);
      found_.push_back(std::move(t));
    }
  }

  // Relator scans from every coset until no deduction is made; false on a
  // contradiction.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < rows_.size(); ++c) {
        for (const Word& r : rels_) {
          const auto& ls = r.letters();
          int f = static_cast<int>(c), b = static_cast<int>(c);
          std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(ls.size()) - 1;
          while (i <= j && rows_[f][letter_column(ls[i])] != kUndefined) {
            f = rows_[f][letter_column(ls[i])];
            ++i;
          }
          if (i > j) {
            if (f != b) return false;
            continue;
          }
          while (j >= i && rows_[b][letter_column(ls[j].inverse())] != kUndefined) {
            b = rows_[b][letter_column(ls[j].inverse())];
            --j;
          }
          if (j < i) {
            if (f != b) return false;
          } else if (i == j) {
            const int col = letter_column(ls[i]);
            if (rows_[b][inverse_column(col)] != kUndefined) return false;
            rows_[f][col] = b;
            rows_[b][inverse_column(col)] = f;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  // False when renumbering from another base coset gives a table that is
  // already known to be smaller.
  bool canonical() const {
    const std::size_t n = rows_.size();
    for (std::size_t base = 1; base < n; ++base) {
      std::vector<int> old_to_new(n, kUndefined), new_to_old;
      old_to_new[base] = 0;
      new_to_old.push_back(static_cast<int>(base));
      bool decided = false;
      for (std::size_t i = 0; i < n && !decided; ++i) {
        if (i >= new_to_old.size()) break;
        for (std::size_t col = 0; col < cols_; ++col) {
          const int img = rows_[new_to_old[i]][col];
          const int orig = rows_[i][col];
          if (img == kUndefined || orig == kUndefined) {
            decided = true;
            break;
          }
          if (old_to_new[img] == kUndefined) {
            old_to_new[img] = static_cast<int>(new_to_old.size());
            new_to_old.push_back(img);
          }
          const int relabeled = old_to_new[img];
          if (relabeled < orig) return false;
          if (relabeled > orig) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  std::size_t ngens_;
  std::size_t cols_;
  std::size_t max_;
  std::vector<Word> rels_;
  Rows rows_;
  std::vector<CosetTable> found_;
};

}  // namespace

LowIndexResult low_index_subgroups(const Presentation& pres, std::size_t max_index) {
  if (max_index < 1 || max_index > kMaxLowIndex) {
    throw Error(Errc::Unsupported, "low-index bound must be between 1 and " +
                                       std::to_string(kMaxLowIndex));
  }
  if (pres.num_generators() == 0) return {};
  return LowIndexSearch(pres, max_index).run();
}

// ---------------------------------------------------------------------------
// Transversals, cyclic covers, Reidemeister-Schreier

namespace {

struct Transversal {
  std::vector<Word> reps;
  // tree[c][g]: edge (c, g) with positive orientation lies in the tree.
  std::vector<std::vector<bool>> tree;
};

Transversal bfs_transversal(const CosetTable& table) {
  const std::size_t n = table.index();
  const std::size_t cols = 2 * table.num_gens;
  Transversal t;
  t.reps.assign(n, Word());
  t.tree.assign(n, std::vector<bool>(table.num_gens, false));
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (std::size_t col = 0; col < cols; ++col) {
      const int d = table.rows[c][col];
      if (d == kUndefined || seen[d]) continue;
      seen[d] = true;
      const Letter l = column_letter(static_cast<int>(col));
      t.reps[d] = free_reduce(t.reps[c] * Word{l});
      if (l.sign > 0) {
        t.tree[c][l.gen] = true;
      } else {
        t.tree[d][l.gen] = true;
      }
      queue.push_back(d);
    }
  }
  return t;
}

}  // namespace

std::vector<Word> schreier_generators(const CosetTable& table) {
  const Transversal t = bfs_transversal(table);
  std::vector<Word> out;
  for (std::size_t c = 0; c < table.index(); ++c) {
    for (std::size_t g = 0; g < table.num_gens; ++g) {
      if (t.tree[c][g]) continue;
      const int d = table.rows[c][2 * g];
      if (d == kUndefined) continue;
      out.push_back(free_reduce(t.reps[c] * Word::generator(static_cast<int>(g)) *
                                t.reps[d].inverse()));
    }
  }
  return out;
}

Word unit_word(const Character& chi) {
  if (!chi.is_surjective()) throw Error(Errc::NotPrimitive, "character is not surjective");
  Word w;
  long g = 0;
  for (std::size_t i = 0; i < chi.values.size(); ++i) {
    const long v = chi.values[i];
    if (v == 0) continue;
    const Word gi = Word::generator(static_cast<int>(i));
    if (g == 0) {
      w = gi.pow(v > 0 ? 1 : -1);
      g = std::abs(v);
      continue;
    }
    // s * g + t * v = gcd(g, v)
    long old_r = g, r = v, old_s = 1, s = 0, old_t = 0, tt = 1;
    while (r != 0) {
      const long q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
      old_t = std::exchange(tt, old_t - q * tt);
    }
    if (old_r < 0) {
      old_r = -old_r;
      old_s = -old_s;
      old_t = -old_t;
    }
    w = free_reduce(w.pow(old_s) * gi.pow(old_t));
    g = old_r;
  }
  return w;
}

CosetTable cyclic_cover(const Presentation& pres, const Character& chi, std::size_t n) {
  if (chi.values.size() != pres.num_generators()) {
    throw Error(Errc::NotACharacter, "character length differs from generator count");
  }
  if (!chi.is_surjective()) throw Error(Errc::NotPrimitive, "character is not surjective");
  if (!is_character(pres, chi)) {
    throw Error(Errc::NotACharacter, "character does not vanish on every relator");
  }
  if (n == 0) throw Error(Errc::Unsupported, "cover degree must be positive");
  const long nn = static_cast<long>(n);
  CosetTable t;
  t.num_gens = pres.num_generators();
  t.rows.assign(n, std::vector<int>(2 * t.num_gens));
  for (long k = 0; k < nn; ++k) {
    for (std::size_t g = 0; g < t.num_gens; ++g) {
      const long v = chi.values[g];
      t.rows[k][2 * g] = static_cast<int>((((k + v) % nn) + nn) % nn);
      t.rows[k][2 * g + 1] = static_cast<int>((((k - v) % nn) + nn) % nn);
    }
  }
  const Word x = unit_word(chi);
  // ker chi is generated by the x-conjugates of g x^-chi(g); x^n absorbs all
  // but n of them.
  for (long k = 0; k < nn; ++k) {
    for (std::size_t g = 0; g < t.num_gens; ++g) {
      const Word h = Word::generator(static_cast<int>(g)) * x.pow(-chi.values[g]);
      const Word w = free_reduce(x.pow(k) * h * x.pow(-k));
      if (!w.empty()) t.subgroup_gens.push_back(w);
    }
  }
  t.subgroup_gens.push_back(free_reduce(x.pow(nn)));
  return t;
}

SubgroupPresentation reidemeister_schreier(const Presentation& pres, const CosetTable& table) {
  if (!table.is_complete() || table.index() == 0) {
    throw Error(Errc::Incomplete, "coset table is not complete");
  }
  if (table.num_gens != pres.num_generators()) {
    throw Error(Errc::Incomplete, "coset table does not match the presentation");
  }
  const Transversal t = bfs_transversal(table);
  const std::size_t n = table.index();
  std::vector<std::vector<int>> sg(n, std::vector<int>(table.num_gens, kUndefined));
  SubgroupPresentation out;
  out.ambient = pres;
  int next = 0;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t g = 0; g < table.num_gens; ++g) {
      if (t.tree[c][g]) continue;
      sg[c][g] = next++;
      const int d = table.rows[c][2 * g];
      out.inclusion.push_back(free_reduce(t.reps[c] * Word::generator(static_cast<int>(g)) *
                                          t.reps[d].inverse()));
    }
  }
  Presentation& p = out.presentation;
  p.name = pres.name.empty() ? "cover" : pres.name + ".cover" + std::to_string(n);
  p.generators = synthesized_alphabet(static_cast<std::size_t>(next));
  p.flags = pres.flags;
  p.flags.is_knot_exterior = false;
  for (std::size_t c = 0; c < n; ++c) {
    for (const Word& r : pres.relators) {
      std::vector<Letter> rewritten;
      int cur = static_cast<int>(c);
      for (Letter l : r) {
        if (l.sign > 0) {
          if (sg[cur][l.gen] != kUndefined) rewritten.push_back({sg[cur][l.gen], 1});
          cur = table.rows[cur][2 * l.gen];
        } else {
          const int prev = table.rows[cur][2 * l.gen + 1];
          if (sg[prev][l.gen] != kUndefined) rewritten.push_back({sg[prev][l.gen], -1});
          cur = prev;
        }
      }
      p.relators.push_back(free_reduce(Word(std::move(rewritten))));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

// Smallest rotation of w or its inverse.
Word cyclic_key(const Word& w) {
  Word best = w;
  for (const Word& v : {w, w.inverse()}) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      Word r = cyclic_rotate(v, k);
      if (r < best) best = std::move(r);
    }
  }
  return best;
}

bool one_pass(Presentation& cur, TietzeLog& log, const std::vector<bool>& protected_gens) {
  auto apply = [&](TietzeMove m) {
    cur = apply_move(cur, m);
    log.moves.push_back(std::move(m));
  };
  for (std::size_t i = 0; i < cur.relators.size(); ++i) {
    Word r = cyclically_reduced(cur.relators[i]);
    if (!(r == cur.relators[i])) apply(ReplaceRelatorMove{static_cast<int>(i), r});
  }
  std::set<Word> keys;
  for (std::size_t i = 0; i < cur.relators.size();) {
    if (cur.relators[i].empty() || !keys.insert(cyclic_key(cur.relators[i])).second) {
      apply(RemoveRelatorMove{static_cast<int>(i)});
    } else {
      ++i;
    }
  }
  std::vector<std::size_t> order(cur.relators.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cur.relators[a].size() < cur.relators[b].size();
  });
  for (std::size_t ri : order) {
    const Word& r = cur.relators[ri];
    // Highest id first so that early generators survive.
    for (std::size_t g = cur.num_generators(); g-- > 0;) {
      if (protected_gens[g] || r.occurrences(static_cast<int>(g)) != 1) continue;
      std::size_t pos = 0;
      while (r[pos].gen != static_cast<int>(g)) ++pos;
      const Word rot = cyclic_rotate(r, pos);
      // rot = l * rest, so g^sign = rest^-1.
      const Word rest = rot.slice(1, rot.size() - 1);
      const Word expr = free_reduce(r[pos].sign > 0 ? rest.inverse() : rest);
      apply(EliminateMove{static_cast<int>(g), expr, static_cast<int>(ri)});
      return true;
    }
  }
  return false;
}

}  // namespace

TietzeResult simplify_presentation(const Presentation& pres) {
  TietzeResult res{pres, {}};
  Presentation& cur = res.presentation;
  for (;;) {
    std::vector<bool> protected_gens(cur.num_generators(), false);
    for (const Cusp& c : cur.cusps) {
      for (const Word* w : {&c.meridian, &c.longitude}) {
        for (Letter l : *w) protected_gens[l.gen] = true;
      }
    }
    if (!one_pass(cur, res.log, protected_gens)) break;
  }
  return res;
}

SubgroupPresentation simplify_subgroup(const SubgroupPresentation& sub) {
  TietzeResult res = simplify_presentation(sub.presentation);
  std::vector<Word> inclusion = sub.inclusion;
  for (const TietzeMove& m : res.log.moves) {
    if (const auto* e = std::get_if<EliminateMove>(&m)) {
      inclusion.erase(inclusion.begin() + e->gen);
    }
  }
  return {std::move(res.presentation), std::move(inclusion), sub.ambient};
}

AbelianStructure subgroup_homology(const Presentation& pres, const CosetTable& table) {
  return abelianization(simplify_subgroup(reidemeister_schreier(pres, table)).presentation);
}

AbelianStructure subgroup_homology(const Presentation& pres,
                                   const std::vector<Word>& subgroup_gens,
                                   std::size_t max_cosets) {
  return subgroup_homology(pres, todd_coxeter(pres, subgroup_gens, max_cosets));
}

}  // namespace flab
