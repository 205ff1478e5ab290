#pragma once

#include "qheis/coeff.hpp"
#include "qheis/words.hpp"

#include <map>
#include <string>

namespace qheis {

/// Element of the free algebra F<A,B> over Q(q): a finite linear combination
/// of words. Zero coefficients are never stored; terms iterate in shortlex order.
class FreeElement {
public:
  using Terms = std::map<Word, RationalFunction>;

  FreeElement() = default;
  FreeElement(const Word &w, RationalFunction c = 1);
  static FreeElement identity() { return FreeElement(Word()); }
  static FreeElement letter(char c) { return FreeElement(Word(std::string(1, c))); }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coeff(const Word &w) const;
  void add_term(const Word &w, const RationalFunction &c);

  FreeElement operator-() const;
  FreeElement &operator+=(const FreeElement &o);
  FreeElement &operator-=(const FreeElement &o);
  FreeElement &operator*=(const RationalFunction &c);

  friend FreeElement operator+(FreeElement a, const FreeElement &b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement &b) { return a -= b; }
  friend FreeElement operator*(FreeElement a, const RationalFunction &c) { return a *= c; }
  friend FreeElement operator*(const RationalFunction &c, FreeElement a) { return a *= c; }
  /// Concatenation product.
  friend FreeElement operator*(const FreeElement &a, const FreeElement &b);
  friend bool operator==(const FreeElement &a, const FreeElement &b) = default;

  /// `c1*W1 + c2*W2 + ...`
  std::string to_string() const;

private:
  Terms terms_;
};

/// [x, y] = xy - yx.
FreeElement commutator(const FreeElement &x, const FreeElement &y);

/// Expands a bracket tree into words.
FreeElement eval_monomial(const LieMonomial &m);

/// Linear extension of W -> (-1)^{|W|} reverse(W).
FreeElement theta(const FreeElement &x);

/// Necessary condition for Lie polynomials: theta(x) = -x.
bool passes_lie_necessary(const FreeElement &x);

/// Renders `c*X` with the coefficient parenthesized when it is a sum.
std::string render_term(const RationalFunction &c, const std::string &basis, bool first);

} // namespace qheis
