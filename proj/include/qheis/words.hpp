#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qheis {

/// A word over the alphabet {A, B}. The empty word is the identity I.
class Word {
public:
  Word() = default;
  /// Throws std::invalid_argument on letters other than 'A' and 'B'.
  explicit Word(std::string letters);
  static Word power(char letter, std::size_t n) { return Word(std::string(n, letter)); }

  const std::string &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  std::size_t count(char letter) const;
  /// (#B) - (#A).
  long bdeg() const { return static_cast<long>(count('B')) - static_cast<long>(count('A')); }
  /// Number of blocks k in W = B^{m1}A^{n1} ... B^{mk}A^{nk}; 0 for I.
  std::size_t ba_count() const;
  /// Occurrences of A before B, the termination measure of AB -> qBA + I.
  std::size_t inversions() const;

  Word reversed() const;
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len));
  }
  std::string to_string() const { return letters_.empty() ? "I" : letters_; }

  friend Word operator+(const Word &a, const Word &b) { return Word(a.letters_ + b.letters_, 0); }
  friend bool operator==(const Word &a, const Word &b) = default;
  /// Shortlex order: length first, then lexicographic with A < B.
  friend bool operator<(const Word &a, const Word &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a.letters_ < b.letters_;
  }

private:
  Word(std::string letters, int) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Strict lexicographic comparison with A < B. Throws std::invalid_argument
/// when one word is a proper prefix of the other (the order leaves it open).
bool lex_less(const Word &v, const Word &w);

/// V ⊳ W: the concatenation VW is lexicographically greater than WV.
/// Both sides have the same length, so plain comparison suffices.
bool triangle_less(const Word &v, const Word &w);

/// Regular word test by the all-splits definition; throws on the empty word.
bool is_regular(const Word &w);

/// All regular words of length 1..max_len sorted by (length, lex).
std::vector<Word> enumerate_regular(std::size_t max_len);

/// Canonical factorization w = gh with h the longest regular proper ending.
/// Throws std::invalid_argument for non-regular words or length < 2.
std::pair<Word, Word> factorize(const Word &w);

/// Binary bracket tree with letters at the leaves.
class LieMonomial {
public:
  static LieMonomial leaf(char letter);
  static LieMonomial bracket(LieMonomial left, LieMonomial right);

  bool is_leaf() const { return !left_; }
  char letter() const { return letter_; }
  const LieMonomial &left() const { return *left_; }
  const LieMonomial &right() const { return *right_; }

  /// Left-to-right leaf word.
  Word foliage() const;
  /// Square-bracket rendering, e.g. `[B,[B,A]]`.
  std::string to_string() const;

  friend bool operator==(const LieMonomial &a, const LieMonomial &b);

private:
  char letter_ = 0;
  std::shared_ptr<const LieMonomial> left_;
  std::shared_ptr<const LieMonomial> right_;
};

/// The nonassociative regular word ⟨w⟩; throws for non-regular w.
LieMonomial bracketing(const Word &w);

} // namespace qheis
