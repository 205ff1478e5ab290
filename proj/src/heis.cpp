#include "qheis/heis.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace qheis {

namespace {

RationalFunction q_pow(const QValue &q, long e) { return q.as_rf().pow(e); }

void require_generic_pbw(const QValue &q, const char *what) {
  if (q.is_zero() || q.is_one())
    throw DomainError(std::string(what) + " requires q not in {0, 1}");
}

/// Thread-safe memo keyed by (q, a, b).
template <class Value> class Memo {
public:
  using Key = std::tuple<std::string, unsigned, unsigned>;

  template <class Compute> std::shared_ptr<const Value> get(const QValue &q, unsigned a, unsigned b, Compute compute) {
    Key key{q.to_string(), a, b};
    {
      std::lock_guard lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end())
        return it->second;
    }
    auto value = std::make_shared<const Value>(compute());
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

private:
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> table_;
};

using TermList = std::vector<std::pair<Mono, RationalFunction>>;

/// Normal form of A^b B^c, filled by A^bB^c = q^c (A^{b-1}B^c) A + {c}_q A^{b-1}B^{c-1}.
std::shared_ptr<const TermList> a_then_b(unsigned b, unsigned c, const QValue &q) {
  static Memo<TermList> memo;
  return memo.get(q, b, c, [&] {
    if (b == 0 || c == 0)
      return TermList{{Mono{c, b}, RationalFunction(1)}};
    NormalElement acc(q);
    const RationalFunction qc = q_pow(q, c);
    if (!qc.is_zero())
      for (const auto &[mono, coef] : *a_then_b(b - 1, c, q))
        acc.add_term(Mono{mono.m, mono.n + 1}, coef * qc);
    const RationalFunction ic = q_int(c, q.as_rf());
    for (const auto &[mono, coef] : *a_then_b(b - 1, c - 1, q))
      acc.add_term(mono, coef * ic);
    return TermList(acc.terms().begin(), acc.terms().end());
  });
}

} // namespace

RationalFunction coerce(const RationalFunction &c, const QValue &q) {
  if (q.is_symbolic() || c.is_constant())
    return c;
  return RationalFunction(specialize(c, *q.value()));
}

// ---- NormalElement ----

NormalElement NormalElement::monomial(const QValue &q, unsigned m, unsigned n, RationalFunction c) {
  NormalElement e(q);
  e.add_term(Mono{m, n}, c);
  return e;
}

RationalFunction NormalElement::coeff(unsigned m, unsigned n) const {
  auto it = terms_.find(Mono{m, n});
  return it == terms_.end() ? RationalFunction() : it->second;
}

void NormalElement::add_term(Mono mono, const RationalFunction &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(mono, coerce(c, q_));
  if (!inserted) {
    it->second += coerce(c, q_);
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

void NormalElement::require_same_q(const NormalElement &o) const {
  if (!(q_ == o.q_))
    throw std::invalid_argument("cannot combine elements over q = " + q_.to_string() + " and q = " +
                                o.q_.to_string());
}

NormalElement NormalElement::operator-() const {
  NormalElement r = *this;
  for (auto &[mono, c] : r.terms_)
    c = -c;
  return r;
}

NormalElement &NormalElement::operator+=(const NormalElement &o) {
  require_same_q(o);
  for (const auto &[mono, c] : o.terms_)
    add_term(mono, c);
  return *this;
}

NormalElement &NormalElement::operator-=(const NormalElement &o) {
  require_same_q(o);
  for (const auto &[mono, c] : o.terms_)
    add_term(mono, -c);
  return *this;
}

NormalElement &NormalElement::operator*=(const RationalFunction &c) {
  RationalFunction k = coerce(c, q_);
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[mono, x] : terms_)
    x *= k;
  return *this;
}

NormalElement operator*(const NormalElement &a, const NormalElement &b) {
  a.require_same_q(b);
  NormalElement r(a.q_);
  for (const auto &[x, c] : a.terms_)
    for (const auto &[y, d] : b.terms_) {
      const RationalFunction cd = c * d;
      for (const auto &[mid, e] : *a_then_b(x.n, y.m, a.q_))
        r.add_term(Mono{x.m + mid.m, mid.n + y.n}, cd * e);
    }
  return r;
}

NormalElement NormalElement::pow(unsigned k) const {
  NormalElement r = identity(q_);
  for (unsigned i = 0; i < k; ++i)
    r = r * *this;
  return r;
}

FreeElement NormalElement::embed() const {
  FreeElement f;
  for (const auto &[mono, c] : terms_)
    f.add_term(Word::power('B', mono.m) + Word::power('A', mono.n), c);
  return f;
}

std::string NormalElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[mono, c] : terms_) {
    std::string basis;
    auto factor = [&](char letter, unsigned e) {
      if (e == 0)
        return;
      if (!basis.empty())
        basis += "*";
      basis += letter;
      if (e > 1)
        basis += "^" + std::to_string(e);
    };
    factor('B', mono.m);
    factor('A', mono.n);
    out += render_term(c, basis.empty() ? "I" : basis, first);
    first = false;
  }
  return out;
}

NormalElement h_commutator(const NormalElement &x, const NormalElement &y) { return x * y - y * x; }

// ---- rewriting ----

namespace {

struct PendingKey {
  std::size_t len;
  std::size_t inversions;
  Word word;
  // Longer words first, then more inversions: every rewrite step lands on a
  // key that sorts later, so each word is rewritten exactly once.
  bool operator<(const PendingKey &o) const {
    if (len != o.len)
      return len > o.len;
    if (inversions != o.inversions)
      return inversions > o.inversions;
    return word < o.word;
  }
};

void push_pending(std::map<PendingKey, RationalFunction> &pending, Word w, const RationalFunction &c) {
  if (c.is_zero())
    return;
  PendingKey key{w.size(), w.inversions(), std::move(w)};
  auto [it, inserted] = pending.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      pending.erase(it);
  }
}

} // namespace

NormalElement normal_form(const FreeElement &x, const QValue &q, RewriteStrategy strategy) {
  std::map<PendingKey, RationalFunction> pending;
  for (const auto &[w, c] : x.terms())
    push_pending(pending, w, coerce(c, q));

  const RationalFunction qq = q.as_rf();
  NormalElement result(q);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string &s = node.key().word.letters();
    const RationalFunction &c = node.mapped();
    std::size_t pos = std::string::npos;
    if (strategy == RewriteStrategy::Leftmost)
      pos = s.find("AB");
    else
      pos = s.rfind("AB");
    if (pos == std::string::npos) {
      const auto m = static_cast<unsigned>(node.key().word.count('B'));
      result.add_term(Mono{m, static_cast<unsigned>(s.size()) - m}, c);
      continue;
    }
    std::string swapped = s;
    swapped[pos] = 'B';
    swapped[pos + 1] = 'A';
    push_pending(pending, Word(std::move(swapped)), c * qq);
    push_pending(pending, Word(s.substr(0, pos) + s.substr(pos + 2)), c);
  }
  return result;
}

NormalElement normal_form(const Word &w, const QValue &q, RewriteStrategy strategy) {
  return normal_form(FreeElement(w), q, strategy);
}

// ---- reordering formulae ----

const char *to_string(ReorderKind kind) {
  switch (kind) {
  case ReorderKind::ABn:
    return "AB^n";
  case ReorderKind::AnB:
    return "A^nB";
  case ReorderKind::BAn:
    return "BA^n";
  case ReorderKind::BnA:
    return "B^nA";
  }
  return "?";
}

Comparison reorder_check(ReorderKind kind, long n, const QValue &q) {
  if (n < 1)
    throw std::invalid_argument("reordering formulae need n >= 1");
  if ((kind == ReorderKind::BAn || kind == ReorderKind::BnA) && q.is_zero())
    throw DomainError(std::string(to_string(kind)) + " reordering requires q != 0");
  const RationalFunction Q = q.as_rf();
  const auto un = static_cast<unsigned>(n);
  auto w = [](char x, unsigned a, char y, unsigned b) { return Word::power(x, a) + Word::power(y, b); };
  switch (kind) {
  case ReorderKind::ABn: {
    NormalElement rhs = NormalElement::monomial(q, un, 1, Q.pow(n)) +
                        NormalElement::monomial(q, un - 1, 0, q_int(n, Q));
    return {normal_form(w('A', 1, 'B', un), q), rhs};
  }
  case ReorderKind::AnB: {
    NormalElement rhs = NormalElement::monomial(q, 1, un, Q.pow(n)) +
                        NormalElement::monomial(q, 0, un - 1, q_int(n, Q));
    return {normal_form(w('A', un, 'B', 1), q), rhs};
  }
  case ReorderKind::BAn: {
    const RationalFunction qinv = Q.inverse();
    FreeElement rhs = FreeElement(w('A', un, 'B', 1), Q.pow(-n)) -
                      FreeElement(Word::power('A', un - 1), qinv * q_int(n, qinv));
    return {normal_form(w('B', 1, 'A', un), q), normal_form(rhs, q)};
  }
  case ReorderKind::BnA: {
    const RationalFunction qinv = Q.inverse();
    FreeElement rhs = FreeElement(w('A', 1, 'B', un), Q.pow(-n)) -
                      FreeElement(Word::power('B', un - 1), qinv * q_int(n, qinv));
    return {normal_form(w('B', un, 'A', 1), q), normal_form(rhs, q)};
  }
  }
  throw std::logic_error("unknown reorder kind");
}

bool reorder_holds(ReorderKind kind, long n, const QValue &q) { return reorder_check(kind, n, q).holds(); }

// ---- grading ----

GradedParts grade(const NormalElement &x) {
  GradedParts parts;
  for (const auto &[mono, c] : x.terms())
    parts.try_emplace(mono.degree(), x.q()).first->second.add_term(mono, c);
  return parts;
}

NormalElement comm_power(unsigned k, const QValue &q) {
  static Memo<NormalElement> memo;
  return *memo.get(q, k, 0, [&] {
    if (k == 0)
      return NormalElement::identity(q);
    NormalElement ab = NormalElement::gen_a(q) * NormalElement::gen_b(q) -
                       NormalElement::gen_b(q) * NormalElement::gen_a(q);
    return comm_power(k - 1, q) * ab;
  });
}

Comparison shift_poly_check(const FreeElement &p, long n, const QValue &q) {
  if (q.is_zero())
    throw DomainError("the [A,B]^n shift identity requires q != 0");
  if (n < 0)
    throw std::invalid_argument("shift identity needs n >= 0");
  const RationalFunction Q = q.as_rf();
  FreeElement shifted;
  for (const auto &[w, c] : p.terms())
    shifted.add_term(w, c * Q.pow(-n * w.bdeg()));
  const NormalElement power = comm_power(static_cast<unsigned>(n), q);
  return {normal_form(p, q) * power, power * normal_form(shifted, q)};
}

NormalElement bnan_expand(long n, const QValue &q) {
  require_generic_pbw(q, "the B^nA^n expansion");
  const RationalFunction Q = q.as_rf();
  const RationalFunction pre = Q.pow(-choose2(n)) * (Q - 1).pow(-n);
  NormalElement sum(q);
  for (long i = 0; i <= n; ++i) {
    RationalFunction c = pre * Q.pow(choose2(n - i)) * q_binomial(n, i, Q);
    if ((n - i) % 2)
      c = -c;
    sum += comm_power(static_cast<unsigned>(i), q) * c;
  }
  return sum;
}

NormalElement anbn_expand(long n, const QValue &q) {
  require_generic_pbw(q, "the A^nB^n expansion");
  const RationalFunction Q = q.as_rf();
  const RationalFunction pre = (Q - 1).pow(-n);
  NormalElement sum(q);
  for (long i = 0; i <= n; ++i) {
    RationalFunction c = pre * Q.pow(choose2(i + 1)) * q_binomial(n, i, Q);
    if ((n - i) % 2)
      c = -c;
    sum += comm_power(static_cast<unsigned>(i), q) * c;
  }
  return sum;
}

NormalElement gauss_polynomial(long n, const NormalElement &x, const RationalFunction &z) {
  if (n < 0)
    throw std::invalid_argument("Gauss polynomial needs n >= 0");
  NormalElement sum(x.q());
  NormalElement power = NormalElement::identity(x.q());
  for (long i = 0; i <= n; ++i) {
    RationalFunction c = z.pow(choose2(n - i)) * q_binomial(n, i, z);
    if ((n - i) % 2)
      c = -c;
    sum += power * c;
    power = power * x;
  }
  return sum;
}

NormalElement gauss_product(long n, const NormalElement &x, const RationalFunction &z) {
  NormalElement prod = NormalElement::identity(x.q());
  for (long i = 0; i < n; ++i)
    prod = prod * (x - NormalElement::scalar(x.q(), z.pow(i)));
  return prod;
}

// ---- [A,B]-power basis ----

RationalFunction LiePowerCoords::at(long d, unsigned k) const {
  auto it = coords.find({d, k});
  return it == coords.end() ? RationalFunction() : it->second;
}

std::string LiePowerCoords::to_string() const {
  if (coords.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[key, c] : coords) {
    auto [d, k] = key;
    std::vector<std::string> factors;
    if (d > 0)
      factors.push_back("B" + (d > 1 ? "^" + std::to_string(d) : std::string()));
    if (k > 0)
      factors.push_back("[A,B]" + (k > 1 ? "^" + std::to_string(k) : std::string()));
    if (d < 0)
      factors.push_back("A" + (d < -1 ? "^" + std::to_string(-d) : std::string()));
    std::string basis = factors.empty() ? "I" : factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
      basis += "*" + factors[i];
    out += render_term(c, basis, first);
    first = false;
  }
  return out;
}

NormalElement lie_power_vector(long d, unsigned k, const QValue &q) {
  const NormalElement power = comm_power(k, q);
  NormalElement out(q);
  const auto shift = static_cast<unsigned>(d >= 0 ? d : -d);
  for (const auto &[mono, c] : power.terms()) {
    // B^d (B^jA^j) and (B^jA^j) A^d are already normal.
    if (d >= 0)
      out.add_term(Mono{mono.m + shift, mono.n}, c);
    else
      out.add_term(Mono{mono.m, mono.n + shift}, c);
  }
  return out;
}

LiePowerCoords to_lie_power_basis(const NormalElement &x) {
  require_generic_pbw(x.q(), "the [A,B]-power basis");
  LiePowerCoords out{x.q(), {}};
  for (auto &[d, part] : grade(x)) {
    NormalElement rest = part;
    while (!rest.is_zero()) {
      // The top monomial of the component has the largest min(m, n); the
      // basis vector with that k is the only one reaching it.
      const auto &[mono, c] = *std::prev(rest.terms().end());
      const unsigned k = std::min(mono.m, mono.n);
      NormalElement v = lie_power_vector(d, k, x.q());
      RationalFunction coef = c / v.coeff(mono.m, mono.n);
      out.coords[{d, k}] = coef;
      rest -= v * coef;
    }
  }
  return out;
}

NormalElement from_lie_power_basis(const LiePowerCoords &c) {
  require_generic_pbw(c.q, "the [A,B]-power basis");
  NormalElement out(c.q);
  for (const auto &[key, coef] : c.coords)
    out += lie_power_vector(key.first, key.second, c.q) * coef;
  return out;
}

// ---- brackets and their closed forms ----

NormalElement bracket_word(const Word &w, const QValue &q) { return normal_form(eval_monomial(bracketing(w)), q); }

NormalElement bracket_bm_an(unsigned m, unsigned n, const QValue &q) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("<B^mA^n> needs m, n >= 1");
  static Memo<NormalElement> memo;
  return *memo.get(q, m, n, [&] {
    if (m == 1 && n == 1)
      return bracket_word(Word("BA"), q);
    if (m == 1)
      return h_commutator(bracket_bm_an(1, n - 1, q), NormalElement::gen_a(q));
    return h_commutator(NormalElement::gen_b(q), bracket_bm_an(m - 1, n, q));
  });
}

Comparison adad_ba_check(long m, long n, const QValue &q) {
  const RationalFunction Q = q.as_rf();
  const auto um = static_cast<unsigned>(m), un = static_cast<unsigned>(n);
  const RationalFunction diff = Q.pow(n) - Q.pow(m);
  NormalElement lhs = h_commutator(bracket_word(Word("BA"), q), NormalElement::monomial(q, um, un));
  NormalElement rhs = NormalElement::monomial(q, um + 1, un + 1, (Q - 1) * diff) +
                      NormalElement::monomial(q, um, un, diff);
  return {lhs, rhs};
}

Comparison adad_b_check(long m, long n, const QValue &q) {
  const RationalFunction Q = q.as_rf();
  const auto um = static_cast<unsigned>(m), un = static_cast<unsigned>(n);
  NormalElement lhs = h_commutator(NormalElement::gen_b(q), NormalElement::monomial(q, um, un));
  NormalElement rhs = NormalElement::monomial(q, um + 1, un, 1 - Q.pow(n));
  if (n > 0)
    rhs -= NormalElement::monomial(q, um, un - 1, q_int(n, Q));
  return {lhs, rhs};
}

Comparison fban_check(long n, const QValue &q) {
  if (n < 1)
    throw std::invalid_argument("<BA^n> needs n >= 1");
  const RationalFunction one_minus_q = 1 - q.as_rf();
  const auto un = static_cast<unsigned>(n);
  NormalElement rhs = NormalElement::monomial(q, 1, un, one_minus_q.pow(n)) -
                      NormalElement::monomial(q, 0, un - 1, one_minus_q.pow(n - 1));
  return {bracket_word(Word("B") + Word::power('A', un), q), rhs};
}

Comparison fbna_check(long n, const QValue &q) {
  if (n < 1)
    throw std::invalid_argument("<B^nA> needs n >= 1");
  const RationalFunction one_minus_q = 1 - q.as_rf();
  const auto un = static_cast<unsigned>(n);
  NormalElement rhs = NormalElement::monomial(q, un, 1, one_minus_q.pow(n)) -
                      NormalElement::monomial(q, un - 1, 0, one_minus_q.pow(n - 1));
  return {bracket_word(Word::power('B', un) + Word("A"), q), rhs};
}

} // namespace qheis
