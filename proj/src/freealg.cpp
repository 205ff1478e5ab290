#include "qheis/freealg.hpp"

namespace qheis {

FreeElement::FreeElement(const Word &w, RationalFunction c) { add_term(w, c); }

RationalFunction FreeElement::coeff(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void FreeElement::add_term(const Word &w, const RationalFunction &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

FreeElement FreeElement::operator-() const {
  FreeElement r = *this;
  for (auto &[w, c] : r.terms_)
    c = -c;
  return r;
}

FreeElement &FreeElement::operator+=(const FreeElement &o) {
  for (const auto &[w, c] : o.terms_)
    add_term(w, c);
  return *this;
}

FreeElement &FreeElement::operator-=(const FreeElement &o) {
  for (const auto &[w, c] : o.terms_)
    add_term(w, -c);
  return *this;
}

FreeElement &FreeElement::operator*=(const RationalFunction &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[w, x] : terms_)
    x *= c;
  return *this;
}

FreeElement operator*(const FreeElement &a, const FreeElement &b) {
  FreeElement r;
  for (const auto &[v, c] : a.terms_)
    for (const auto &[w, d] : b.terms_)
      r.add_term(v + w, c * d);
  return r;
}

std::string render_term(const RationalFunction &c, const std::string &basis, bool first) {
  std::string cs = c.to_string();
  bool negative = !cs.empty() && cs[0] == '-' && (c.is_constant() || cs.find(' ') == std::string::npos);
  std::string mag = negative ? cs.substr(1) : cs;
  bool compound = mag.find_first_of(" /") != std::string::npos;
  std::string out = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
  if (mag == "1")
    return out + basis;
  return out + (compound ? "(" + mag + ")" : mag) + "*" + basis;
}

std::string FreeElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[w, c] : terms_) {
    out += render_term(c, w.to_string(), first);
    first = false;
  }
  return out;
}

FreeElement commutator(const FreeElement &x, const FreeElement &y) { return x * y - y * x; }

FreeElement eval_monomial(const LieMonomial &m) {
  if (m.is_leaf())
    return FreeElement::letter(m.letter());
  return commutator(eval_monomial(m.left()), eval_monomial(m.right()));
}

FreeElement theta(const FreeElement &x) {
  FreeElement r;
  for (const auto &[w, c] : x.terms())
    r.add_term(w.reversed(), w.size() % 2 ? -c : c);
  return r;
}

bool passes_lie_necessary(const FreeElement &x) { return theta(x) == -x; }

} // namespace qheis
