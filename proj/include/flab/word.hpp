#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace flab {

// One letter of a free-group word: generator id and sign (+1 or -1).
struct Letter {
  int gen = 0;
  int sign = 1;

  [[nodiscard]] constexpr Letter inverse() const noexcept {
    return {gen, -sign};
  }
  [[nodiscard]] constexpr bool cancels(Letter other) const noexcept {
    return gen == other.gen && sign == -other.sign;
  }
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

struct CyclicReduction;

// A word in the free group on generators 0..n-1. Raw words are allowed; the
// reduced flags are set only by free_reduce / cyclic_reduce and by
// operations that preserve reducedness.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word generator(int gen, int sign = 1) { return Word{{gen, sign}}; }

  [[nodiscard]] std::span<const Letter> letters() const noexcept {
    return letters_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] const Letter& operator[](std::size_t i) const {
    return letters_[i];
  }
  [[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] auto end() const noexcept { return letters_.end(); }

  [[nodiscard]] bool is_reduced() const noexcept { return reduced_; }
  [[nodiscard]] bool is_cyclically_reduced() const noexcept {
    return cyclically_reduced_;
  }

  [[nodiscard]] Word inverse() const;
  // Concatenation without cancellation.
  [[nodiscard]] Word operator*(const Word& rhs) const;
  // k-th power (k may be negative), unreduced.
  [[nodiscard]] Word pow(long k) const;
  // Subword [pos, pos+len), unreduced.
  [[nodiscard]] Word slice(std::size_t pos, std::size_t len) const;

  // Largest generator id + 1 appearing in the word (0 for the empty word).
  [[nodiscard]] int generator_bound() const noexcept;
  [[nodiscard]] long count(int gen, int sign) const noexcept;
  [[nodiscard]] long occurrences(int gen) const noexcept;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(const Word& a, const Word& b) noexcept {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }

 private:
  friend Word free_reduce(const Word&);
  friend CyclicReduction cyclic_reduce(const Word&);
  friend Word cyclic_rotate(const Word&, std::size_t);

  std::vector<Letter> letters_;
  bool reduced_ = false;
  bool cyclically_reduced_ = false;
};

[[nodiscard]] Word free_reduce(const Word& word);

// word == conjugator * word * conjugator^-1 in the free group.
struct CyclicReduction {
  Word word;
  Word conjugator;
};

// Input must be freely reduced (it is reduced first if it is not).
[[nodiscard]] CyclicReduction cyclic_reduce(const Word& word);

// Convenience: free then cyclic reduction, dropping the conjugator.
[[nodiscard]] Word cyclically_reduced(const Word& word);

// Rotation by k letters to the left; keeps reduction flags.
[[nodiscard]] Word cyclic_rotate(const Word& word, std::size_t k);

// Exponent sum of each generator 0..ngens-1.
[[nodiscard]] std::vector<long> exponent_vector(const Word& word,
                                                std::size_t ngens);

// Replace each generator g by images[g] (and g^-1 by its inverse). Result is
// freely reduced.
[[nodiscard]] Word map_word(const Word& word, std::span<const Word> images);

}  // namespace flab
