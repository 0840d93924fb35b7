#include "flab/word.hpp"

#include <algorithm>

namespace flab {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  Word w(std::move(out));
  w.reduced_ = reduced_;
  w.cyclically_reduced_ = cyclically_reduced_;
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out(letters_);
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::pow(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  const long n = k < 0 ? -k : k;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  }
  return Word(std::move(out));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

int Word::generator_bound() const noexcept {
  int bound = 0;
  for (const Letter& l : letters_) bound = std::max(bound, l.gen + 1);
  return bound;
}

long Word::count(int gen, int sign) const noexcept {
  return std::count(letters_.begin(), letters_.end(), Letter{gen, sign});
}

long Word::occurrences(int gen) const noexcept {
  return std::count_if(letters_.begin(), letters_.end(),
                       [gen](const Letter& l) { return l.gen == gen; });
}

Word free_reduce(const Word& word) {
  if (word.reduced_) return word;
  std::vector<Letter> stack;
  stack.reserve(word.size());
  for (const Letter& l : word.letters_) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  Word out(std::move(stack));
  out.reduced_ = true;
  return out;
}

CyclicReduction cyclic_reduce(const Word& word) {
  Word w = free_reduce(word);
  std::size_t lo = 0;
  std::size_t hi = w.size();
  // Peel one symmetric cancelling pair at a time; the conjugator collects the
  // peeled prefix letters outermost-first.
  std::vector<Letter> conj;
  while (hi - lo >= 2 && w.letters_[lo].cancels(w.letters_[hi - 1])) {
    conj.push_back(w.letters_[lo]);
    ++lo;
    --hi;
  }
  CyclicReduction out{w.slice(lo, hi - lo), Word(std::move(conj))};
  out.word.reduced_ = true;
  out.word.cyclically_reduced_ = true;
  out.conjugator.reduced_ = true;
  return out;
}

Word cyclically_reduced(const Word& word) { return cyclic_reduce(word).word; }

Word cyclic_rotate(const Word& word, std::size_t k) {
  if (word.empty()) return word;
  k %= word.size();
  std::vector<Letter> out(word.letters_.begin() + k, word.letters_.end());
  out.insert(out.end(), word.letters_.begin(), word.letters_.begin() + k);
  Word w(std::move(out));
  w.cyclically_reduced_ = word.cyclically_reduced_;
  w.reduced_ = word.cyclically_reduced_;
  return w;
}

std::vector<long> exponent_vector(const Word& word, std::size_t ngens) {
  std::vector<long> v(ngens, 0);
  for (const Letter& l : word) {
    if (l.gen >= 0 && static_cast<std::size_t>(l.gen) < ngens) v[l.gen] += l.sign;
  }
  return v;
}

Word map_word(const Word& word, std::span<const Word> images) {
  std::vector<Letter> out;
  for (const Letter& l : word) {
    const Word& img = images[l.gen];
    if (l.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        out.push_back(it->inverse());
      }
    }
  }
  return free_reduce(Word(std::move(out)));
}

}  // namespace flab
