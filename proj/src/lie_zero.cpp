#include "qheis/lie.hpp"

#include <iterator>
#include <stdexcept>

namespace qheis {

namespace {

const QValue &zero_q() {
  static const QValue q = QValue::rational(0);
  return q;
}

void require_zero(const QValue &q, const char *what) {
  if (!q.is_zero())
    throw DomainError(std::string(what) + " requires q = 0");
}

void add(ZeroCombination &c, const ZeroBasisVector &v, const RationalFunction &coef) {
  if (coef.is_zero())
    return;
  auto [it, inserted] = c.try_emplace(v, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero())
      c.erase(it);
  }
}

} // namespace

bool ZeroBasisVector::in_lie() const {
  return kind == ZeroKind::GenA || kind == ZeroKind::GenB || kind == ZeroKind::BrMN;
}

std::string ZeroBasisVector::to_string() const {
  auto power = [](char letter, unsigned e) {
    std::string s(1, letter);
    return e == 1 ? s : s + "^" + std::to_string(e);
  };
  switch (kind) {
  case ZeroKind::Identity:
    return "I";
  case ZeroKind::GenA:
    return "A";
  case ZeroKind::GenB:
    return "B";
  case ZeroKind::BBAj:
  case ZeroKind::BiAA:
    return power('B', m) + "*" + power('A', n);
  case ZeroKind::BrMN:
    return "<" + power('B', m) + power('A', n) + ">";
  case ZeroKind::PowA:
    return power('A', n);
  case ZeroKind::PowB:
    return power('B', m);
  }
  return "?";
}

std::string to_string(const ZeroCombination &c) {
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

NormalElement expand_zero_basis(const ZeroBasisVector &v) {
  if (v.kind == ZeroKind::BrMN)
    return bracket_bm_an(v.m, v.n, zero_q());
  return NormalElement::monomial(zero_q(), v.m, v.n);
}

NormalElement expand(const ZeroCombination &c) {
  NormalElement out(zero_q());
  for (const auto &[v, coef] : c)
    out += expand_zero_basis(v) * coef;
  return out;
}

ZeroCombination decompose_zero_free(const NormalElement &x) {
  require_zero(x.q(), "the q = 0 basis");
  ZeroCombination out;
  NormalElement rest = x;
  for (;;) {
    // <B^mA^n> = B^mA^n + terms of smaller m in the same grade.
    auto top = rest.terms().end();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (it->first.m > 0 && it->first.n > 0)
        top = it;
    if (top == rest.terms().end())
      break;
    const Mono mono = top->first;
    const RationalFunction c = top->second;
    add(out, ZeroBasisVector::br_mn(mono.m, mono.n), c);
    rest -= bracket_bm_an(mono.m, mono.n, zero_q()) * c;
  }
  for (const auto &[mono, c] : rest.terms()) {
    if (mono.m == 0 && mono.n == 0)
      add(out, ZeroBasisVector::identity(), c);
    else if (mono.m == 0)
      add(out, mono.n == 1 ? ZeroBasisVector::gen_a() : ZeroBasisVector::pow_a(mono.n), c);
    else
      add(out, mono.m == 1 ? ZeroBasisVector::gen_b() : ZeroBasisVector::pow_b(mono.m), c);
  }
  return out;
}

ZeroCombination decompose_zero(const NormalElement &x) {
  ZeroCombination out;
  for (const auto &[v, c] : decompose_zero_free(x)) {
    // A^k = B^2A^{k+2} - <B^2A^{k+2}> - 2<BA^{k+1}>
    // B^l = B^{l+2}A^2 - <B^{l+2}A^2> - (l+2)<B^{l+1}A>
    if (v.kind == ZeroKind::PowA) {
      add(out, ZeroBasisVector::bb_aj(v.n + 2), c);
      add(out, ZeroBasisVector::br_mn(2, v.n + 2), -c);
      add(out, ZeroBasisVector::br_mn(1, v.n + 1), c * -2);
    } else if (v.kind == ZeroKind::PowB) {
      add(out, ZeroBasisVector::bi_aa(v.m + 2), c);
      add(out, ZeroBasisVector::br_mn(v.m + 2, 2), -c);
      add(out, ZeroBasisVector::br_mn(v.m + 1, 1), c * -static_cast<long>(v.m + 2));
    } else {
      add(out, v, c);
    }
  }
  return out;
}

bool membership_zero(const NormalElement &x) {
  for (const auto &[v, c] : decompose_zero(x))
    if (!v.in_lie())
      return false;
  return true;
}

NormalElement bm_an_printed(unsigned m, unsigned n) {
  const unsigned h = std::min(m, n);
  NormalElement out(zero_q());
  for (unsigned i = 0; i <= h; ++i) {
    RationalFunction c(binomial(h, i));
    out.add_term(Mono{m - i, n - i}, i % 2 ? -c : c);
  }
  return out;
}

NormalElement bm_an_rederived(unsigned m, unsigned n) {
  const unsigned h = std::min(m, n);
  NormalElement out(zero_q());
  for (unsigned i = 0; i < h; ++i) {
    RationalFunction c(binomial(m, i));
    out.add_term(Mono{m - i, n - i}, i % 2 ? -c : c);
  }
  RationalFunction last(binomial(m - 1, h - 1));
  out.add_term(Mono{m - h, n - h}, h % 2 ? -last : last);
  return out;
}

std::vector<ZeroBasisVector> zero_basis_within(ZeroFamily family, unsigned bound) {
  using V = ZeroBasisVector;
  std::vector<V> out;
  if (family != ZeroFamily::FreeLie)
    out.push_back(V::identity());
  if (bound >= 1) {
    out.push_back(V::gen_a());
    out.push_back(V::gen_b());
  }
  if (family == ZeroFamily::FreeIndep)
    for (unsigned p = 2; p <= bound; ++p) {
      out.push_back(V::pow_a(p));
      out.push_back(V::pow_b(p));
    }
  if (family == ZeroFamily::Extended)
    for (unsigned p = 4; p <= bound; ++p) {
      out.push_back(V::bb_aj(p));
      out.push_back(V::bi_aa(p));
    }
  for (unsigned m = 1; m <= bound; ++m)
    for (unsigned n = 1; n <= bound; ++n)
      out.push_back(V::br_mn(m, n));
  return out;
}

} // namespace qheis
