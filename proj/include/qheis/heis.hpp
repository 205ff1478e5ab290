#pragma once

#include "qheis/coeff.hpp"
#include "qheis/freealg.hpp"

#include <map>
#include <string>
#include <utility>

namespace qheis {

/// PBW monomial B^m A^n.
struct Mono {
  unsigned m = 0;
  unsigned n = 0;
  /// Z-grading degree m - n.
  long degree() const { return static_cast<long>(m) - static_cast<long>(n); }
  friend bool operator==(const Mono &, const Mono &) = default;
};

/// Sorts monomials by (degree, m), the report rendering order.
struct MonoOrder {
  bool operator()(const Mono &a, const Mono &b) const {
    if (a.degree() != b.degree())
      return a.degree() < b.degree();
    return a.m < b.m;
  }
};

/**
 * Element of H(q) in PBW coordinates: sum of c * B^m A^n.
 *
 * Every element carries the q it lives over; combining elements over
 * different q throws std::invalid_argument. At rational q all coefficients
 * are constants.
 */
class NormalElement {
public:
  using Terms = std::map<Mono, RationalFunction, MonoOrder>;

  explicit NormalElement(QValue q) : q_(std::move(q)) {}
  static NormalElement monomial(const QValue &q, unsigned m, unsigned n, RationalFunction c = 1);
  static NormalElement identity(const QValue &q) { return monomial(q, 0, 0); }
  static NormalElement scalar(const QValue &q, const RationalFunction &c) { return monomial(q, 0, 0, c); }
  static NormalElement gen_a(const QValue &q) { return monomial(q, 0, 1); }
  static NormalElement gen_b(const QValue &q) { return monomial(q, 1, 0); }

  const QValue &q() const { return q_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coeff(unsigned m, unsigned n) const;
  void add_term(Mono mono, const RationalFunction &c);

  NormalElement operator-() const;
  NormalElement &operator+=(const NormalElement &o);
  NormalElement &operator-=(const NormalElement &o);
  NormalElement &operator*=(const RationalFunction &c);

  friend NormalElement operator+(NormalElement a, const NormalElement &b) { return a += b; }
  friend NormalElement operator-(NormalElement a, const NormalElement &b) { return a -= b; }
  friend NormalElement operator*(NormalElement a, const RationalFunction &c) { return a *= c; }
  friend NormalElement operator*(const RationalFunction &c, NormalElement a) { return a *= c; }
  /// Algebra product in H(q).
  friend NormalElement operator*(const NormalElement &a, const NormalElement &b);
  friend bool operator==(const NormalElement &a, const NormalElement &b) {
    return a.q_ == b.q_ && a.terms_ == b.terms_;
  }

  NormalElement pow(unsigned k) const;
  /// The same element viewed as a combination of words B^m A^n.
  FreeElement embed() const;
  /// `c*B^m*A^n + ...` in (degree, m) order; parseable by the expression language.
  std::string to_string() const;

private:
  void require_same_q(const NormalElement &o) const;
  QValue q_;
  Terms terms_;
};

NormalElement h_commutator(const NormalElement &x, const NormalElement &y);

/// Maps a coefficient of Q(q) into the coefficient domain of q
/// (identity for symbolic q, evaluation at rational q).
RationalFunction coerce(const RationalFunction &c, const QValue &q);

enum class RewriteStrategy { Leftmost, Rightmost };

/// Image of x in H(q): rewrites AB -> qBA + I until every word is B^m A^n.
NormalElement normal_form(const FreeElement &x, const QValue &q,
                          RewriteStrategy strategy = RewriteStrategy::Leftmost);
NormalElement normal_form(const Word &w, const QValue &q,
                          RewriteStrategy strategy = RewriteStrategy::Leftmost);

/// Two sides of a claimed identity, both in normal form.
struct Comparison {
  NormalElement lhs;
  NormalElement rhs;
  bool holds() const { return lhs == rhs; }
  NormalElement residual() const { return lhs - rhs; }
};

/// The four reordering formulae AB^n, A^nB, BA^n, B^nA.
enum class ReorderKind { ABn, AnB, BAn, BnA };
const char *to_string(ReorderKind kind);
/// Throws DomainError for q = 0 with BAn / BnA, std::invalid_argument for n < 1.
Comparison reorder_check(ReorderKind kind, long n, const QValue &q);
bool reorder_holds(ReorderKind kind, long n, const QValue &q);

/// Parts d -> component in H_d = span{B^k A^l : k - l = d}.
using GradedParts = std::map<long, NormalElement>;
GradedParts grade(const NormalElement &x);

/// [A,B]^k in PBW form (memoized per q).
NormalElement comm_power(unsigned k, const QValue &q);

/// P(B,A)[A,B]^n versus [A,B]^n P(q^{-n}B, q^n A); throws DomainError at q = 0.
Comparison shift_poly_check(const FreeElement &p, long n, const QValue &q);

/// Closed forms of B^nA^n and A^nB^n in powers of [A,B]; q must avoid {0, 1}.
NormalElement bnan_expand(long n, const QValue &q);
NormalElement anbn_expand(long n, const QValue &q);

/// G_n(x; z) = sum_i (-1)^{n-i} z^{C(n-i,2)} {n choose i}_z x^i.
NormalElement gauss_polynomial(long n, const NormalElement &x, const RationalFunction &z);
/// prod_{i=0}^{n-1} (x - z^i I), the product form of the Gauss polynomial.
NormalElement gauss_product(long n, const NormalElement &x, const RationalFunction &z);

/// Coordinates in the basis B^d[A,B]^k (d > 0), [A,B]^k (d = 0),
/// [A,B]^k A^{-d} (d < 0).
struct LiePowerCoords {
  QValue q;
  std::map<std::pair<long, unsigned>, RationalFunction> coords;
  RationalFunction at(long d, unsigned k) const;
  friend bool operator==(const LiePowerCoords &, const LiePowerCoords &) = default;
  std::string to_string() const;
};

/// The basis vector of LiePowerCoords at (d, k), expanded.
NormalElement lie_power_vector(long d, unsigned k, const QValue &q);
/// Both throw DomainError for q in {0, 1}.
LiePowerCoords to_lie_power_basis(const NormalElement &x);
NormalElement from_lie_power_basis(const LiePowerCoords &c);

/// <w> evaluated in H(q) through bracketing, free expansion and normal form.
NormalElement bracket_word(const Word &w, const QValue &q);
/// <B^m A^n> (m, n >= 1) via the iterated brackets [<BA^n>, A] and [B, <B^mA^n>].
NormalElement bracket_bm_an(unsigned m, unsigned n, const QValue &q);

/// [<BA>, B^mA^n] and [B, B^mA^n] against their closed forms.
Comparison adad_ba_check(long m, long n, const QValue &q);
Comparison adad_b_check(long m, long n, const QValue &q);
/// <BA^n> and <B^nA> against their closed forms (n >= 1).
Comparison fban_check(long n, const QValue &q);
Comparison fbna_check(long n, const QValue &q);

} // namespace qheis
