#include "qheis/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace qheis {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != 'A' && c != 'B')
      throw std::invalid_argument(std::string("invalid letter '") + c + "' (alphabet is {A, B})");
}

std::size_t Word::count(char letter) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::size_t Word::ba_count() const {
  if (letters_.empty())
    return 0;
  std::size_t k = 1;
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
    if (letters_[i] == 'A' && letters_[i + 1] == 'B')
      ++k;
  return k;
}

std::size_t Word::inversions() const {
  std::size_t as = 0, inv = 0;
  for (char c : letters_) {
    if (c == 'A')
      ++as;
    else
      inv += as;
  }
  return inv;
}

Word Word::reversed() const { return Word(std::string(letters_.rbegin(), letters_.rend()), 0); }

bool lex_less(const Word &v, const Word &w) {
  const std::size_t n = std::min(v.size(), w.size());
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] != w[i])
      return v[i] < w[i];
  if (v.size() != w.size())
    throw std::invalid_argument("lexicographic order is undefined when " +
                                (v.size() < w.size() ? v : w).to_string() + " is a proper prefix of " +
                                (v.size() < w.size() ? w : v).to_string());
  return false;
}

bool triangle_less(const Word &v, const Word &w) { return lex_less(w + v, v + w); }

bool is_regular(const Word &w) {
  if (w.empty())
    throw std::invalid_argument("regularity is undefined for the empty word");
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!triangle_less(w.substr(0, i), w.substr(i)))
      return false;
  return true;
}

std::vector<Word> enumerate_regular(std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    // Bit i set means letter i is B; counting upward walks words in lex order.
    for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
      std::string s(len, 'A');
      for (std::size_t i = 0; i < len; ++i)
        if (bits & (1UL << (len - 1 - i)))
          s[i] = 'B';
      Word w(std::move(s));
      if (is_regular(w))
        out.push_back(std::move(w));
    }
  }
  return out;
}

std::pair<Word, Word> factorize(const Word &w) {
  if (w.size() < 2)
    throw std::invalid_argument("factorize needs a regular word of length >= 2, got " + w.to_string());
  if (!is_regular(w))
    throw std::invalid_argument("factorize: " + w.to_string() + " is not regular");
  for (std::size_t split = 1; split < w.size(); ++split) {
    Word h = w.substr(split);
    if (is_regular(h))
      return {w.substr(0, split), h};
  }
  // The last letter is always a regular ending.
  throw std::logic_error("unreachable: no regular ending");
}

LieMonomial LieMonomial::leaf(char letter) {
  if (letter != 'A' && letter != 'B')
    throw std::invalid_argument("Lie monomial leaves are A or B");
  LieMonomial m;
  m.letter_ = letter;
  return m;
}

LieMonomial LieMonomial::bracket(LieMonomial left, LieMonomial right) {
  LieMonomial m;
  m.left_ = std::make_shared<const LieMonomial>(std::move(left));
  m.right_ = std::make_shared<const LieMonomial>(std::move(right));
  return m;
}

Word LieMonomial::foliage() const {
  if (is_leaf())
    return Word(std::string(1, letter_));
  return left_->foliage() + right_->foliage();
}

std::string LieMonomial::to_string() const {
  if (is_leaf())
    return std::string(1, letter_);
  return "[" + left_->to_string() + "," + right_->to_string() + "]";
}

bool operator==(const LieMonomial &a, const LieMonomial &b) {
  if (a.is_leaf() || b.is_leaf())
    return a.is_leaf() && b.is_leaf() && a.letter_ == b.letter_;
  return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

LieMonomial bracketing(const Word &w) {
  if (!is_regular(w))
    throw std::invalid_argument("bracketing: " + w.to_string() + " is not regular");
  if (w.size() == 1)
    return LieMonomial::leaf(w[0]);
  auto [g, h] = factorize(w);
  return LieMonomial::bracket(bracketing(g), bracketing(h));
}

} // namespace qheis
