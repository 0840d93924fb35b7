#include "flab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "flab/error.hpp"

namespace flab {

namespace {

bool single_letter(const Alphabet& alphabet) {
  return std::all_of(alphabet.begin(), alphabet.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

int lookup(const Alphabet& alphabet, std::string_view name) {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == name) return static_cast<int>(i);
  }
  return -1;
}

// Reads an optional "^k" or "k" repetition count at text[pos].
long read_count(std::string_view text, std::size_t& pos, bool allow_bare) {
  bool caret = false;
  if (pos < text.size() && text[pos] == '^') {
    caret = true;
    ++pos;
  }
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    throw Error(Errc::BadCount, "signed repetition count in '" +
                                    std::string(text) + "'");
  }
  if (!caret && !allow_bare) return 1;
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (start == pos) {
    if (caret) {
      throw Error(Errc::BadCount, "missing count after '^' in '" +
                                      std::string(text) + "'");
    }
    return 1;
  }
  long k = std::stol(std::string(text.substr(start, pos - start)));
  if (k < 1) {
    throw Error(Errc::BadCount,
                "repetition count must be >= 1 in '" + std::string(text) + "'");
  }
  return k;
}

void push_run(std::vector<Letter>& out, Letter l, long k) {
  for (long i = 0; i < k; ++i) out.push_back(l);
}

}  // namespace

Alphabet synthesized_alphabet(std::size_t n) {
  Alphabet out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("g" + std::to_string(i));
  return out;
}

Alphabet default_alphabet(std::size_t n) {
  if (n > 26) return synthesized_alphabet(n);
  Alphabet out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(1, static_cast<char>('a' + i));
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> out;
  const bool compact = single_letter(alphabet);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++pos;
      continue;
    }
    if (c == '1') {  // identity
      ++pos;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '^' || c == '-') {
        throw Error(Errc::BadCount, "count without a letter in '" +
                                        std::string(text) + "'");
      }
      throw Error(Errc::UnknownGenerator,
                  std::string("unexpected character '") + c + "'");
    }
    std::string name;
    const bool inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
    if (compact) {
      name.assign(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      ++pos;
    } else {
      std::size_t start = pos;
      ++pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        ++pos;
      }
      name = std::string(text.substr(start, pos - start));
      name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
    }
    const int gen = lookup(alphabet, name);
    if (gen < 0) {
      throw Error(Errc::UnknownGenerator, "unknown generator '" + name + "'");
    }
    const long k = read_count(text, pos, compact);
    push_run(out, Letter{gen, inverse ? -1 : 1}, k);
  }
  return Word(std::move(out));
}

std::string format_word(const Word& word, const Alphabet& alphabet,
                        bool compact) {
  if (word.empty()) return "1";
  const bool letters = single_letter(alphabet);
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < word.size()) {
    const Letter l = word[i];
    std::size_t j = i + 1;
    if (compact || !letters) {
      while (j < word.size() && word[j] == l) ++j;
    }
    const std::size_t run = j - i;
    std::string name = static_cast<std::size_t>(l.gen) < alphabet.size()
                           ? alphabet[l.gen]
                           : "g" + std::to_string(l.gen);
    if (l.sign < 0) {
      name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    }
    if (!letters && !first) os << ' ';
    os << name;
    if (run > 1) {
      if (letters) {
        os << run;
      } else {
        os << '^' << run;
      }
    }
    first = false;
    i = j;
  }
  return os.str();
}

int Presentation::generator_index(std::string_view gen_name) const {
  return lookup(generators, gen_name);
}

void Presentation::validate() const {
  const int n = static_cast<int>(generators.size());
  auto check = [&](const Word& w, const char* what) {
    for (const Letter& l : w) {
      if (l.gen < 0 || l.gen >= n) {
        throw Error(Errc::UnknownGenerator,
                    std::string(what) + " uses undeclared generator " +
                        std::to_string(l.gen));
      }
    }
  };
  for (const Word& r : relators) check(r, "relator");
  for (const Cusp& c : cusps) {
    check(c.meridian, "cusp word");
    check(c.longitude, "cusp word");
  }
}

Presentation make_presentation(std::string name, std::string_view gens,
                               std::initializer_list<std::string_view> relators) {
  Presentation p;
  p.name = std::move(name);
  for (char c : gens) {
    if (!std::isspace(static_cast<unsigned char>(c))) p.generators.emplace_back(1, c);
  }
  for (std::string_view r : relators) p.relators.push_back(parse_word(r, p.generators));
  return p;
}

std::string format_presentation(const Presentation& pres) {
  std::ostringstream os;
  if (!pres.name.empty()) os << "name: " << pres.name << '\n';
  os << "gens:";
  for (const auto& g : pres.generators) os << ' ' << g;
  os << '\n';
  for (const Word& r : pres.relators) os << "rel: " << pres.format(r) << '\n';
  for (const Cusp& c : pres.cusps) {
    os << "cusp: " << pres.format(c.meridian) << " | "
       << pres.format(c.longitude) << '\n';
  }
  std::vector<std::string> flags;
  if (pres.flags.is_3manifold) flags.emplace_back("3manifold");
  if (pres.flags.is_closed) flags.emplace_back("closed");
  if (pres.flags.is_hyperbolic) flags.emplace_back("hyperbolic");
  if (pres.flags.is_knot_exterior) flags.emplace_back("knot");
  if (!flags.empty()) {
    os << "flags:";
    for (const auto& f : flags) os << ' ' << f;
    os << '\n';
  }
  return os.str();
}

Presentation reduced_relators(const Presentation& pres) {
  Presentation out = pres;
  out.relators.clear();
  for (const Word& r : pres.relators) {
    Word w = cyclically_reduced(r);
    if (!w.empty()) out.relators.push_back(std::move(w));
  }
  for (Cusp& c : out.cusps) {
    c.meridian = free_reduce(c.meridian);
    c.longitude = free_reduce(c.longitude);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Word> identity_images(std::size_t n) {
  std::vector<Word> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(Word::generator(static_cast<int>(i)));
  return images;
}

Word reindex(const Word& w, const std::vector<int>& old_to_new) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back({old_to_new[l.gen], l.sign});
  return free_reduce(Word(std::move(out)));
}

template <typename F>
void for_each_word(Presentation& p, F&& f) {
  for (Word& r : p.relators) r = f(r);
  for (Cusp& c : p.cusps) {
    c.meridian = f(c.meridian);
    c.longitude = f(c.longitude);
  }
}

void check_relator_index(const Presentation& p, int idx) {
  if (idx < 0 || static_cast<std::size_t>(idx) >= p.relators.size()) {
    throw Error(Errc::BadSubstitution, "relator index out of range");
  }
}

}  // namespace

Presentation apply_move(const Presentation& pres, const TietzeMove& move) {
  Presentation out = pres;
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, SubstituteMove>) {
          const int n = static_cast<int>(pres.num_generators());
          if (m.target < 0 || m.target >= n) {
            throw Error(Errc::UnknownGenerator, "substitution target out of range");
          }
          if (m.replacement.occurrences(m.target) != 1 ||
              m.replacement.generator_bound() > n) {
            throw Error(Errc::BadSubstitution,
                        "replacement must contain the fresh generator exactly once");
          }
          auto images = identity_images(pres.num_generators());
          images[m.target] = m.replacement;
          out.generators[m.target] = m.fresh_name;
          for_each_word(out, [&](const Word& w) { return map_word(w, images); });
        } else if constexpr (std::is_same_v<M, EliminateMove>) {
          check_relator_index(pres, m.relator_index);
          if (m.expression.occurrences(m.gen) != 0) {
            throw Error(Errc::BadSubstitution, "elimination expression uses the eliminated generator");
          }
          auto images = identity_images(pres.num_generators());
          images[m.gen] = m.expression;
          out.relators.erase(out.relators.begin() + m.relator_index);
          for_each_word(out, [&](const Word& w) { return map_word(w, images); });
          std::vector<int> old_to_new(pres.num_generators());
          for (int i = 0; i < static_cast<int>(old_to_new.size()); ++i) {
            old_to_new[i] = i < m.gen ? i : i - 1;
          }
          for_each_word(out, [&](const Word& w) { return reindex(w, old_to_new); });
          out.generators.erase(out.generators.begin() + m.gen);
        } else if constexpr (std::is_same_v<M, AddRelatorMove>) {
          out.relators.push_back(m.relator);
        } else if constexpr (std::is_same_v<M, RemoveRelatorMove>) {
          check_relator_index(pres, m.relator_index);
          out.relators.erase(out.relators.begin() + m.relator_index);
        } else if constexpr (std::is_same_v<M, ReplaceRelatorMove>) {
          check_relator_index(pres, m.relator_index);
          out.relators[m.relator_index] = m.relator;
        } else if constexpr (std::is_same_v<M, PermuteGeneratorsMove>) {
          std::vector<int> old_to_new(pres.num_generators());
          for (std::size_t i = 0; i < m.order.size(); ++i) {
            old_to_new[m.order[i]] = static_cast<int>(i);
            out.generators[i] = pres.generators[m.order[i]];
          }
          for_each_word(out, [&](const Word& w) { return reindex(w, old_to_new); });
        }
      },
      move);
  return out;
}

Presentation replay(const Presentation& pres, const TietzeLog& log) {
  Presentation cur = pres;
  for (const TietzeMove& m : log.moves) cur = apply_move(cur, m);
  return cur;
}

std::vector<Word> induced_images(const Presentation& source,
                                 const TietzeLog& log) {
  std::vector<Word> images = identity_images(source.num_generators());
  std::size_t ngens = source.num_generators();
  for (const TietzeMove& move : log.moves) {
    std::visit(
        [&](const auto& m) {
          using M = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<M, SubstituteMove>) {
            auto sub = identity_images(ngens);
            sub[m.target] = m.replacement;
            for (Word& w : images) w = map_word(w, sub);
          } else if constexpr (std::is_same_v<M, EliminateMove>) {
            auto sub = identity_images(ngens);
            sub[m.gen] = m.expression;
            std::vector<int> old_to_new(ngens);
            for (int i = 0; i < static_cast<int>(ngens); ++i) {
              old_to_new[i] = i < m.gen ? i : i - 1;
            }
            for (Word& w : images) w = reindex(map_word(w, sub), old_to_new);
            --ngens;
          } else if constexpr (std::is_same_v<M, PermuteGeneratorsMove>) {
            std::vector<int> old_to_new(ngens);
            for (std::size_t i = 0; i < m.order.size(); ++i) {
              old_to_new[m.order[i]] = static_cast<int>(i);
            }
            for (Word& w : images) w = reindex(w, old_to_new);
          }
        },
        move);
  }
  return images;
}

TietzeResult substitute(const Presentation& pres, int target,
                        const Word& replacement, std::string fresh_name) {
  TietzeLog log;
  log.moves.emplace_back(SubstituteMove{target, std::move(fresh_name), replacement});
  Presentation out = apply_move(pres, log.moves.back());
  return {std::move(out), std::move(log)};
}

TietzeResult substitute(const Presentation& pres, std::string_view target,
                        std::string_view replacement, std::string fresh_name) {
  const int idx = pres.generator_index(target);
  if (idx < 0) {
    throw Error(Errc::UnknownGenerator, "unknown generator '" + std::string(target) + "'");
  }
  Alphabet renamed = pres.generators;
  renamed[idx] = fresh_name;
  for (std::size_t i = 0; i < renamed.size(); ++i) {
    if (static_cast<int>(i) != idx && renamed[i] == fresh_name) {
      throw Error(Errc::BadSubstitution, "fresh generator name already in use");
    }
  }
  return substitute(pres, idx, parse_word(replacement, renamed), std::move(fresh_name));
}

}  // namespace flab
