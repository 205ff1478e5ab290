#include "qheis/lie.hpp"

#include <stdexcept>

namespace qheis {

namespace {

void require_generic(const QValue &q, const char *what) {
  if (q.degenerate_for_generic())
    throw DomainError(std::string(what) + " requires q not in {0, 1, -1}");
}

void add(GenCombination &c, const GenBasisVector &v, const RationalFunction &coef) {
  if (coef.is_zero())
    return;
  auto [it, inserted] = c.try_emplace(v, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero())
      c.erase(it);
  }
}

GenCombination single(const GenBasisVector &v, const RationalFunction &coef) {
  GenCombination c;
  add(c, v, coef);
  return c;
}

NormalElement commutator_ab(const QValue &q) { return comm_power(1, q); }
NormalElement br_ba(const QValue &q) { return bracket_word(Word("BA"), q); }

std::string index_pair(unsigned a, unsigned b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

} // namespace

bool GenBasisVector::in_lie() const {
  return kind != GenKind::Identity && kind != GenKind::PowA && kind != GenKind::PowB;
}

std::string GenBasisVector::to_string() const {
  switch (kind) {
  case GenKind::Identity:
    return "I";
  case GenKind::PowA:
    return "A^" + std::to_string(k);
  case GenKind::PowB:
    return "B^" + std::to_string(l);
  case GenKind::BrBA:
    return "<BA>";
  case GenKind::GenA:
    return "A";
  case GenKind::GenB:
    return "B";
  case GenKind::AlphaBar:
    return "Abar" + index_pair(k, l);
  case GenKind::BetaBar:
    return "Bbar" + index_pair(k, l);
  case GenKind::GammaBar:
    return "Gbar(" + std::to_string(k) + ")";
  }
  return "?";
}

std::string to_string(const GenCombination &c) {
  if (c.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[v, coef] : c) {
    out += render_term(coef, v.to_string(), first);
    first = false;
  }
  return out;
}

NormalElement expand_gen_basis(const GenBasisVector &v, const QValue &q) {
  require_generic(q, "the generic Lie basis");
  switch (v.kind) {
  case GenKind::Identity:
    return NormalElement::identity(q);
  case GenKind::PowA:
    return NormalElement::monomial(q, 0, v.k);
  case GenKind::PowB:
    return NormalElement::monomial(q, v.l, 0);
  case GenKind::BrBA:
    return -commutator_ab(q);
  case GenKind::GenA:
    return NormalElement::gen_a(q);
  case GenKind::GenB:
    return NormalElement::gen_b(q);
  case GenKind::AlphaBar:
    return comm_power(v.k + 1, q) * NormalElement::monomial(q, 0, v.l);
  case GenKind::BetaBar:
    return NormalElement::monomial(q, v.l, 0) * comm_power(v.k + 1, q);
  case GenKind::GammaBar:
    return comm_power(v.k + 2, q);
  }
  throw std::logic_error("unknown basis vector kind");
}

NormalElement expand(const GenCombination &c, const QValue &q) {
  NormalElement out(q);
  for (const auto &[v, coef] : c)
    out += expand_gen_basis(v, q) * coef;
  return out;
}

GenCombination decompose_generic(const NormalElement &x) {
  GenCombination out;
  for (const auto &[key, c] : to_lie_power_basis(x).coords) {
    const auto [d, k] = key;
    const auto ad = static_cast<unsigned>(d < 0 ? -d : d);
    if (d == 0) {
      if (k == 0)
        add(out, GenBasisVector::identity(), c);
      else if (k == 1)
        add(out, GenBasisVector::br_ba(), -c);
      else
        add(out, GenBasisVector::gamma_bar(k - 2), c);
    } else if (k == 0) {
      if (d > 0)
        add(out, ad == 1 ? GenBasisVector::gen_b() : GenBasisVector::pow_b(ad), c);
      else
        add(out, ad == 1 ? GenBasisVector::gen_a() : GenBasisVector::pow_a(ad), c);
    } else {
      add(out, d > 0 ? GenBasisVector::beta_bar(k - 1, ad) : GenBasisVector::alpha_bar(k - 1, ad), c);
    }
  }
  return out;
}

bool membership_generic(const NormalElement &x) {
  require_generic(x.q(), "generic membership");
  for (const auto &[v, c] : decompose_generic(x))
    if (!v.in_lie())
      return false;
  return true;
}

// ---- beta families ----

const char *to_string(BetaKind kind) {
  switch (kind) {
  case BetaKind::A:
    return "beta_A";
  case BetaKind::B:
    return "beta_B";
  case BetaKind::Gamma:
    return "beta_G";
  }
  return "?";
}

NormalElement beta_raw(BetaKind kind, unsigned k, unsigned l, const QValue &q) {
  if (kind != BetaKind::Gamma && l < 1)
    throw std::invalid_argument(std::string(to_string(kind)) + " needs l >= 1");
  const NormalElement ba = br_ba(q);
  const NormalElement a = NormalElement::gen_a(q), b = NormalElement::gen_b(q);
  NormalElement x(q);
  switch (kind) {
  case BetaKind::A:
    x = b;
    for (unsigned i = 0; i <= l; ++i)
      x = h_commutator(x, a);
    for (unsigned i = 0; i < k; ++i)
      x = h_commutator(ba, x);
    break;
  case BetaKind::B:
    x = bracket_word(Word("BBA"), q);
    for (unsigned i = 0; i < k; ++i)
      x = h_commutator(x, ba);
    for (unsigned i = 1; i < l; ++i)
      x = h_commutator(b, x);
    break;
  case BetaKind::Gamma:
    x = bracket_word(Word("BAA"), q);
    for (unsigned i = 0; i < k; ++i)
      x = h_commutator(ba, x);
    x = h_commutator(b, x);
    break;
  }
  return x;
}

NormalElement beta_word(BetaKind kind, unsigned k, unsigned l, const QValue &q) {
  if (kind != BetaKind::Gamma && l < 1)
    throw std::invalid_argument(std::string(to_string(kind)) + " needs l >= 1");
  Word ba_k;
  for (unsigned i = 0; i < k; ++i)
    ba_k = ba_k + Word("BA");
  switch (kind) {
  case BetaKind::A:
    return bracket_word(ba_k + Word("B") + Word::power('A', l + 1), q);
  case BetaKind::B:
    return bracket_word(Word::power('B', l + 1) + Word("A") + ba_k, q);
  case BetaKind::Gamma:
    return bracket_word(Word("B") + ba_k + Word("BAA"), q);
  }
  throw std::logic_error("unknown beta kind");
}

NormalElement beta_printed(BetaKind kind, unsigned k, unsigned l, const QValue &q) {
  const RationalFunction Q = q.as_rf();
  const long K = k, L = l;
  switch (kind) {
  case BetaKind::A:
    return comm_power(k + 1, q) * NormalElement::monomial(q, 0, l) *
           -((1 - Q).pow(L) * (Q.pow(L) - 1).pow(K));
  case BetaKind::B:
    return NormalElement::monomial(q, l, 0) * comm_power(k + 1, q) *
           ((Q - 1).pow(K + 1) * (1 - Q.pow(K + 1)).pow(L - 1));
  case BetaKind::Gamma: {
    const RationalFunction pre = Q.pow(-K) * (Q - 1).pow(K + 1);
    return (comm_power(k + 1, q) * (Q * q_int(K, Q)) - comm_power(k + 2, q) * q_int(K + 1, Q)) * pre;
  }
  }
  throw std::logic_error("unknown beta kind");
}

Comparison beta_closed_check(BetaKind kind, unsigned k, unsigned l, const QValue &q) {
  return {beta_raw(kind, k, l, q), beta_printed(kind, k, l, q)};
}

Comparison gamma_sum_check(unsigned k, const QValue &q) {
  const RationalFunction Q = q.as_rf();
  NormalElement sum(q);
  for (unsigned i = 0; i <= k; ++i)
    sum += beta_raw(BetaKind::Gamma, i, 0, q) * (Q - 1).pow(-static_cast<long>(i) - 1);
  return {sum * Q.pow(k), comm_power(k + 2, q) * -q_int(k + 1, Q)};
}

Comparison gamma_normalization_check(unsigned k, const QValue &q) {
  const RationalFunction Q = q.as_rf();
  NormalElement sum(q);
  for (unsigned i = 0; i <= k; ++i)
    sum += beta_raw(BetaKind::Gamma, i, 0, q) * (Q - 1).pow(-static_cast<long>(i));
  return {sum * (Q.pow(k) / (1 - Q.pow(k + 1))), comm_power(k + 2, q)};
}

Comparison gamma_rederived_check(unsigned k, const QValue &q) {
  const RationalFunction Q = q.as_rf();
  const long K = k;
  NormalElement rhs = comm_power(k + 1, q) * q_int(K + 1, Q) - comm_power(k + 2, q) * q_int(K + 2, Q);
  return {beta_raw(BetaKind::Gamma, k, 0, q), rhs * (Q.pow(-K - 1) * (Q - 1).pow(K + 1))};
}

Comparison gamma_sum_rederived_check(unsigned k, const QValue &q) {
  const RationalFunction Q = q.as_rf();
  NormalElement sum(q);
  for (unsigned i = 0; i <= k; ++i) {
    const long e = static_cast<long>(i) + 1;
    sum += beta_raw(BetaKind::Gamma, i, 0, q) * (Q.pow(e) * (Q - 1).pow(-e));
  }
  return {sum, comm_power(1, q) - comm_power(k + 2, q) * q_int(static_cast<long>(k) + 2, Q)};
}

Comparison beta_normalization_check(BetaKind kind, unsigned k, unsigned l, const QValue &q) {
  require_generic(q, "beta normalization");
  const RationalFunction Q = q.as_rf();
  const long K = k, L = l;
  switch (kind) {
  case BetaKind::A:
    return {beta_raw(kind, k, l, q) * -((1 - Q).pow(-L) * (Q.pow(L) - 1).pow(-K)),
            expand_gen_basis(GenBasisVector::alpha_bar(k, l), q)};
  case BetaKind::B:
    return {beta_raw(kind, k, l, q) * ((Q - 1).pow(-K - 1) * (1 - Q.pow(K + 1)).pow(1 - L)),
            expand_gen_basis(GenBasisVector::beta_bar(k, l), q)};
  case BetaKind::Gamma:
    return gamma_normalization_check(k, q);
  }
  throw std::logic_error("unknown beta kind");
}

// ---- commutation tables ----

Family family_of(const GenBasisVector &v) {
  switch (v.kind) {
  case GenKind::AlphaBar:
    return Family::AlphaBar;
  case GenKind::GenA:
    return Family::A;
  case GenKind::BrBA:
    return Family::BrBA;
  case GenKind::GammaBar:
    return Family::GammaBar;
  case GenKind::GenB:
    return Family::B;
  case GenKind::BetaBar:
    return Family::BetaBar;
  default:
    throw std::invalid_argument(v.to_string() + " is not a Lie basis vector");
  }
}

GenCombination table1_printed(const GenBasisVector &row, const GenBasisVector &col, const QValue &q) {
  const Family fr = family_of(row), fc = family_of(col);
  if (fr > fc)
    throw std::invalid_argument("blank table cell [" + row.to_string() + ", " + col.to_string() +
                                "]; use antisymmetry");
  const RationalFunction Q = q.as_rf();
  auto qp = [&](long e) { return Q.pow(e); };
  auto qi = [&](long n) { return q_int(n, Q); };
  using V = GenBasisVector;
  const long k = row.k, l = row.l, m = col.k, n = col.l;
  const unsigned uk = row.k, ul = row.l, um = col.k, un = col.l;

  switch (fr) {
  case Family::AlphaBar:
    switch (fc) {
    case Family::AlphaBar:
      return single(V::alpha_bar(uk + um + 1, ul + un), qp(l * (m + 1)) - qp(n * (k + 1)));
    case Family::A:
      return single(V::alpha_bar(uk, ul + 1), 1 - Q);
    case Family::BrBA:
      return single(V::alpha_bar(uk + 1, ul), 1 - qp(l));
    case Family::GammaBar:
      return single(V::alpha_bar(uk + um + 2, ul), qp(l * (m + 2)) - 1);
    case Family::B: {
      if (l >= 2)
        return single(V::alpha_bar(uk + 2, ul - 1), (1 - qp(-(k + 2))) * qi(l));
      GenCombination c;
      if (k >= 1) {
        add(c, V::gamma_bar(uk), qp(-(k + 1)) * qi(k + 2));
        add(c, V::gamma_bar(uk - 1), -qp(-(k + 1)) * qi(k + 1));
      } else {
        add(c, V::gamma_bar(0), qp(-1) * (1 + Q));
        add(c, V::br_ba(), qp(-1));
      }
      return c;
    }
    case Family::BetaBar:
      return bigcomrel_rhs(uk, ul, um, un, q);
    default:
      break;
    }
    break;
  case Family::A:
    switch (fc) {
    case Family::A:
      return {};
    case Family::BrBA:
      return single(V::alpha_bar(0, 1), 1 - Q);
    case Family::GammaBar:
      return single(V::alpha_bar(um + 1, 1), qp(m + 2) - 1);
    case Family::B:
      return single(V::br_ba(), -1);
    case Family::BetaBar: {
      GenCombination c;
      if (n >= 2) {
        add(c, V::beta_bar(um + 2, un - 1), qp(-(m + 2)) * qi(m + n + 2));
        add(c, V::beta_bar(um + 1, un - 1), -qp(-(m + 2)) * qi(m + 2));
      } else if (m >= 1) {
        add(c, V::gamma_bar(um), qp(-(m + 1)) * qi(m + 2));
        add(c, V::gamma_bar(um - 1), -qp(-(m + 1)) * qi(m + 1));
      } else {
        add(c, V::gamma_bar(0), qp(-1) * (1 + Q));
        add(c, V::br_ba(), qp(-1));
      }
      return c;
    }
    default:
      break;
    }
    break;
  case Family::BrBA:
    switch (fc) {
    case Family::BrBA:
    case Family::GammaBar:
      return {};
    case Family::B:
      return single(V::beta_bar(0, 1), 1 - Q);
    case Family::BetaBar:
      return single(V::beta_bar(um + 1, un), 1 - qp(n));
    default:
      break;
    }
    break;
  case Family::GammaBar:
    switch (fc) {
    case Family::GammaBar:
      return {};
    case Family::B:
      return single(V::beta_bar(uk + 1, 1), qp(k + 2) - 1);
    case Family::BetaBar:
      return single(V::beta_bar(uk + um + 2, un), qp(n * (k + 2)) - 1);
    default:
      break;
    }
    break;
  case Family::B:
    if (fc == Family::B)
      return {};
    return single(V::beta_bar(um, un + 1), 1 - qp(m + 1));
  case Family::BetaBar:
    return single(V::beta_bar(uk + um + 1, ul + un), qp(n * (k + 1)) - qp(l * (m + 1)));
  }
  throw std::logic_error("unhandled table cell");
}

std::optional<GenCombination> table1_rederived(const GenBasisVector &row, const GenBasisVector &col,
                                               const QValue &q) {
  const Family fr = family_of(row), fc = family_of(col);
  const RationalFunction Q = q.as_rf();
  auto qi = [&](long n) { return q_int(n, Q); };
  using V = GenBasisVector;
  if (fr == Family::AlphaBar && fc == Family::A)
    return single(V::alpha_bar(row.k, row.l + 1), 1 - Q.pow(row.k + 1));
  if (fr == Family::AlphaBar && fc == Family::B && row.l >= 2) {
    const long k = row.k, l = row.l;
    GenCombination c;
    add(c, V::alpha_bar(row.k + 1, row.l - 1), Q.pow(-(k + 1)) * qi(k + l + 1));
    add(c, V::alpha_bar(row.k, row.l - 1), -Q.pow(-(k + 1)) * qi(k + 1));
    return c;
  }
  if (fr == Family::A && fc == Family::BetaBar && col.l >= 2) {
    const long m = col.k, n = col.l;
    GenCombination c;
    add(c, V::beta_bar(col.k + 1, col.l - 1), Q.pow(-(m + 1)) * qi(m + n + 1));
    add(c, V::beta_bar(col.k, col.l - 1), -Q.pow(-(m + 1)) * qi(m + 1));
    return c;
  }
  return std::nullopt;
}

Comparison table1_check(const GenBasisVector &row, const GenBasisVector &col, const QValue &q) {
  GenCombination rhs = table1_printed(row, col, q);
  return {h_commutator(expand_gen_basis(row, q), expand_gen_basis(col, q)), expand(rhs, q)};
}

Comparison table1_rederived_check(const GenBasisVector &row, const GenBasisVector &col, const QValue &q) {
  auto rhs = table1_rederived(row, col, q);
  if (!rhs)
    throw std::invalid_argument("no re-derived form for [" + row.to_string() + ", " + col.to_string() + "]");
  return {h_commutator(expand_gen_basis(row, q), expand_gen_basis(col, q)), expand(*rhs, q)};
}

RationalFunction ci_coefficient(long k, long l, long m, long n, long i, const QValue &q) {
  const RationalFunction Q = q.as_rf();
  // n(n+3) is always even, so the half-integer exponent is an integer.
  const long e1 = (l - n) * (i + m + 1) + choose2(i + 1);
  const long e2 = -n * (k + m) - n * (n + 3) / 2 + choose2(n - i);
  RationalFunction c = q_binomial(n, i, Q) * (Q.pow(e1) - Q.pow(e2));
  return (n - i) % 2 ? -c : c;
}

GenCombination bigcomrel_rhs(unsigned k, unsigned l, unsigned m, unsigned n, const QValue &q) {
  const RationalFunction Q = q.as_rf();
  GenCombination c;
  if (l > n) {
    const RationalFunction pre = (Q - 1).pow(-static_cast<long>(n));
    for (unsigned i = 0; i <= n; ++i)
      add(c, GenBasisVector::alpha_bar(i + k + m + 1, l - n), pre * ci_coefficient(k, l, m, n, i, q));
  } else if (l < n) {
    const RationalFunction pre = (Q - 1).pow(-static_cast<long>(l));
    for (unsigned i = 0; i <= l; ++i)
      add(c, GenBasisVector::beta_bar(i + k + m + 1, n - l), pre * ci_coefficient(m, n, k, l, i, q));
  } else {
    const RationalFunction pre = (Q - 1).pow(-static_cast<long>(l));
    for (unsigned i = 0; i <= l; ++i)
      add(c, GenBasisVector::gamma_bar(i + k + m), pre * ci_coefficient(k, l, m, l, i, q));
  }
  return c;
}

Comparison bigcomrel_check(unsigned k, unsigned l, unsigned m, unsigned n, const QValue &q) {
  return table1_check(GenBasisVector::alpha_bar(k, l), GenBasisVector::beta_bar(m, n), q);
}

std::optional<GenCombination> table2_closed_form(char row, unsigned p, const GenBasisVector &col,
                                                 const QValue &q) {
  const RationalFunction Q = q.as_rf();
  const long P = p, k = col.k;
  using V = GenBasisVector;
  if (row != 'A' && row != 'B')
    throw std::invalid_argument("ideal table rows are A^n and B^m");
  switch (col.kind) {
  case GenKind::BrBA:
    return row == 'A' ? single(V::alpha_bar(0, p), 1 - Q.pow(P)) : single(V::beta_bar(0, p), Q.pow(P) - 1);
  case GenKind::GammaBar:
    return row == 'A' ? single(V::alpha_bar(col.k + 1, p), Q.pow(P * (k + 2)) - 1)
                      : single(V::beta_bar(col.k + 1, p), 1 - Q.pow(P * (k + 2)));
  case GenKind::BetaBar:
    if (row == 'B')
      return single(V::beta_bar(col.k, col.l + p), 1 - Q.pow(P * (k + 1)));
    return std::nullopt;
  case GenKind::AlphaBar:
    return std::nullopt;
  default:
    throw std::invalid_argument("ideal table columns are <BA>, Abar, Bbar, Gbar");
  }
}

GenCombination table2_rederived_cell(unsigned n, unsigned k, unsigned l, const QValue &q) {
  const long N = n, K = k;
  return single(GenBasisVector::alpha_bar(k, l + n), q.as_rf().pow(N * (K + 1)) - 1);
}

bool nilpotent_span_holds(unsigned m, unsigned n, const QValue &q) {
  NormalElement x = h_commutator(NormalElement::monomial(q, m, 0), NormalElement::monomial(q, 0, n));
  for (const auto &[v, c] : decompose_generic(x)) {
    bool ok = false;
    if (m > n)
      ok = v.kind == GenKind::BrBA || (v.kind == GenKind::BetaBar && v.l == m - n);
    else if (m < n)
      ok = v.kind == GenKind::AlphaBar && v.l == n - m;
    else
      ok = v.kind == GenKind::BrBA || v.kind == GenKind::GammaBar;
    if (!ok)
      return false;
  }
  return true;
}

std::vector<GenBasisVector> generic_basis_within(unsigned bound) {
  using V = GenBasisVector;
  std::vector<V> out{V::identity()};
  if (bound >= 1) {
    out.push_back(V::br_ba());
    out.push_back(V::gen_a());
    out.push_back(V::gen_b());
  }
  for (unsigned p = 2; p <= bound; ++p) {
    out.push_back(V::pow_a(p));
    out.push_back(V::pow_b(p));
  }
  for (unsigned k = 0; k + 2 <= bound; ++k)
    for (unsigned l = 1; k + 1 + l <= bound; ++l) {
      out.push_back(V::alpha_bar(k, l));
      out.push_back(V::beta_bar(k, l));
    }
  for (unsigned k = 0; k + 2 <= bound; ++k)
    out.push_back(V::gamma_bar(k));
  return out;
}

} // namespace qheis
