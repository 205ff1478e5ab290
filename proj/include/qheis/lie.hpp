#pragma once

#include "qheis/heis.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qheis {

// ---------------------------------------------------------------------------
// Generic q: the basis <BA>, A, B, Abar(k,l), Bbar(k,l), Gbar(k) of L(q),
// completed to a basis of H(q) by I, A^k, B^l (k, l >= 2).
// ---------------------------------------------------------------------------

enum class GenKind { Identity, PowA, PowB, BrBA, GenA, GenB, AlphaBar, BetaBar, GammaBar };

struct GenBasisVector {
  GenKind kind = GenKind::Identity;
  unsigned k = 0;
  unsigned l = 0;

  static GenBasisVector identity() { return {GenKind::Identity, 0, 0}; }
  static GenBasisVector pow_a(unsigned k) { return {GenKind::PowA, k, 0}; }
  static GenBasisVector pow_b(unsigned l) { return {GenKind::PowB, 0, l}; }
  static GenBasisVector br_ba() { return {GenKind::BrBA, 0, 0}; }
  static GenBasisVector gen_a() { return {GenKind::GenA, 0, 0}; }
  static GenBasisVector gen_b() { return {GenKind::GenB, 0, 0}; }
  static GenBasisVector alpha_bar(unsigned k, unsigned l) { return {GenKind::AlphaBar, k, l}; }
  static GenBasisVector beta_bar(unsigned k, unsigned l) { return {GenKind::BetaBar, k, l}; }
  static GenBasisVector gamma_bar(unsigned k) { return {GenKind::GammaBar, k, 0}; }

  /// False for the complement vectors I, A^k, B^l.
  bool in_lie() const;
  /// `<BA>`, `A`, `B`, `Abar(k,l)`, `Bbar(k,l)`, `Gbar(k)`, `I`, `A^k`, `B^l`.
  std::string to_string() const;
  auto operator<=>(const GenBasisVector &) const = default;
};

using GenCombination = std::map<GenBasisVector, RationalFunction>;
std::string to_string(const GenCombination &c);

/// PBW expansion; Abar(k,l) = [A,B]^{k+1}A^l, Bbar(k,l) = B^l[A,B]^{k+1},
/// Gbar(k) = [A,B]^{k+2}, <BA> = -[A,B]. Throws DomainError for q in {0, 1, -1}.
NormalElement expand_gen_basis(const GenBasisVector &v, const QValue &q);
NormalElement expand(const GenCombination &c, const QValue &q);

/// Exact coordinates of x in the generic basis (including complement vectors).
GenCombination decompose_generic(const NormalElement &x);
/// x lies in L(q) iff its I, A^k, B^l (k, l >= 2) coordinates vanish.
bool membership_generic(const NormalElement &x);

// ---- beta families ----

enum class BetaKind { A, B, Gamma };
const char *to_string(BetaKind kind);

/// Iterated adjoint construction:
///   beta_A(k,l) = (ad <BA>)^k (-ad A)^{l+1} (B)
///   beta_B(k,l) = (ad B)^{l-1} (-ad <BA>)^k (<B^2A>)
///   beta_G(k)   = (ad B) (ad <BA>)^k (<BA^2>)
/// l is ignored for Gamma and must be >= 1 otherwise.
NormalElement beta_raw(BetaKind kind, unsigned k, unsigned l, const QValue &q);
/// The same elements as brackets of the regular words (BA)^kBA^{l+1},
/// B^{l+1}A(BA)^k and B(BA)^kBA^2.
NormalElement beta_word(BetaKind kind, unsigned k, unsigned l, const QValue &q);
/// The printed closed forms.
NormalElement beta_printed(BetaKind kind, unsigned k, unsigned l, const QValue &q);
Comparison beta_closed_check(BetaKind kind, unsigned k, unsigned l, const QValue &q);

/// q^k sum_{i<=k} (q-1)^{-(i+1)} beta_G(i) against -{k+1}_q [A,B]^{k+2}.
Comparison gamma_sum_check(unsigned k, const QValue &q);
/// q^k/(1-q^{k+1}) sum_{i<=k} (q-1)^{-i} beta_G(i) against [A,B]^{k+2}.
Comparison gamma_normalization_check(unsigned k, const QValue &q);
/// beta_G(k) = q^{-(k+1)}(q-1)^{k+1}({k+1}_q[A,B]^{k+1} - {k+2}_q[A,B]^{k+2}).
Comparison gamma_rederived_check(unsigned k, const QValue &q);
/// sum_{i<=k} q^{i+1}(q-1)^{-(i+1)} beta_G(i) = [A,B] - {k+2}_q [A,B]^{k+2}.
Comparison gamma_sum_rederived_check(unsigned k, const QValue &q);
/// Normalizations -(1-q)^{-l}(q^l-1)^{-k} beta_A = Abar and
/// (q-1)^{-k-1}(1-q^{k+1})^{1-l} beta_B = Bbar.
Comparison beta_normalization_check(BetaKind kind, unsigned k, unsigned l, const QValue &q);

// ---- commutation tables ----

/// Row/column order of the commutation table.
enum class Family { AlphaBar, A, BrBA, GammaBar, B, BetaBar };
Family family_of(const GenBasisVector &v);

/// The printed right side of [row, col]; throws std::invalid_argument for a
/// cell left blank (row after col) or indices outside the cell's range.
GenCombination table1_printed(const GenBasisVector &row, const GenBasisVector &col, const QValue &q);
/// Re-derived right side for the cells whose printed form is wrong, else nullopt.
std::optional<GenCombination> table1_rederived(const GenBasisVector &row, const GenBasisVector &col,
                                               const QValue &q);
Comparison table1_check(const GenBasisVector &row, const GenBasisVector &col, const QValue &q);
Comparison table1_rederived_check(const GenBasisVector &row, const GenBasisVector &col, const QValue &q);

/// c_i(k,l,m,n) = (-1)^{n-i}{n choose i}_q (q^{(l-n)(i+m+1)+C(i+1,2)} - q^{-n(k+m+(n+3)/2)+C(n-i,2)}).
RationalFunction ci_coefficient(long k, long l, long m, long n, long i, const QValue &q);
/// Right side of [Abar(k,l), Bbar(m,n)] by cases l > n, l < n, l = n.
GenCombination bigcomrel_rhs(unsigned k, unsigned l, unsigned m, unsigned n, const QValue &q);
Comparison bigcomrel_check(unsigned k, unsigned l, unsigned m, unsigned n, const QValue &q);

/// Closed-form cells of the ideal table for row A^p ('A') or B^p ('B');
/// nullopt for the cells that only claim membership and for the row A^n,
/// column Abar cell whose printed index is unbound.
std::optional<GenCombination> table2_closed_form(char row, unsigned p, const GenBasisVector &col,
                                                 const QValue &q);
/// [A^n, Abar(k,l)] = (q^{n(k+1)}-1) Abar(k,l+n).
GenCombination table2_rederived_cell(unsigned n, unsigned k, unsigned l, const QValue &q);

/// [B^m, A^n] lies in span{<BA>, Bbar(., m-n)} (m > n), span{Abar(., n-m)}
/// (m < n) or span{<BA>, Gbar(.)} (m = n).
bool nilpotent_span_holds(unsigned m, unsigned n, const QValue &q);

/// Basis vectors of the generic basis (with complement) whose PBW support
/// fits in m, n <= bound.
std::vector<GenBasisVector> generic_basis_within(unsigned bound);

// ---------------------------------------------------------------------------
// q = 0: the basis I, A, B, B^2A^j, B^iA^2 (i, j >= 4), <B^mA^n> of H(0);
// L(0) is spanned by A, B, <B^mA^n>.
// ---------------------------------------------------------------------------

enum class ZeroKind { Identity, GenA, GenB, BBAj, BiAA, BrMN, PowA, PowB };

struct ZeroBasisVector {
  ZeroKind kind = ZeroKind::Identity;
  unsigned m = 0;
  unsigned n = 0;

  static ZeroBasisVector identity() { return {ZeroKind::Identity, 0, 0}; }
  static ZeroBasisVector gen_a() { return {ZeroKind::GenA, 0, 1}; }
  static ZeroBasisVector gen_b() { return {ZeroKind::GenB, 1, 0}; }
  static ZeroBasisVector bb_aj(unsigned j) { return {ZeroKind::BBAj, 2, j}; }
  static ZeroBasisVector bi_aa(unsigned i) { return {ZeroKind::BiAA, i, 2}; }
  static ZeroBasisVector br_mn(unsigned m, unsigned n) { return {ZeroKind::BrMN, m, n}; }
  static ZeroBasisVector pow_a(unsigned n) { return {ZeroKind::PowA, 0, n}; }
  static ZeroBasisVector pow_b(unsigned m) { return {ZeroKind::PowB, m, 0}; }

  bool in_lie() const;
  std::string to_string() const;
  auto operator<=>(const ZeroBasisVector &) const = default;
};

using ZeroCombination = std::map<ZeroBasisVector, RationalFunction>;
std::string to_string(const ZeroCombination &c);

/// Expansion at q = 0 (<B^mA^n> through the iterated brackets).
NormalElement expand_zero_basis(const ZeroBasisVector &v);
NormalElement expand(const ZeroCombination &c);

/// Coordinates in the basis I, A^n, B^m, <B^mA^n> (m, n >= 1); triangular solve.
ZeroCombination decompose_zero_free(const NormalElement &x);
/// Coordinates in the basis I, A, B, B^2A^j, B^iA^2 (i, j >= 4), <B^mA^n>.
ZeroCombination decompose_zero(const NormalElement &x);
/// Throws DomainError unless x lives over q = 0.
bool membership_zero(const NormalElement &x);

/// sum_{i=0}^{h} (-1)^i C(h,i) B^{m-i}A^{n-i}, h = min(m,n), as printed.
NormalElement bm_an_printed(unsigned m, unsigned n);
/// sum_{i<h} (-1)^i C(m,i) B^{m-i}A^{n-i} + (-1)^h C(m-1,h-1) B^{m-h}A^{n-h}.
NormalElement bm_an_rederived(unsigned m, unsigned n);

/// Families of claimed basis vectors at q = 0 whose support fits in m, n <= bound.
enum class ZeroFamily { FreeLie, FreeIndep, Extended };
std::vector<ZeroBasisVector> zero_basis_within(ZeroFamily family, unsigned bound);

} // namespace qheis
