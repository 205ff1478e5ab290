#pragma once

// Test-side oracles, independent of the rewriter: H(q) acts on Q(q)[x]
// by B = multiplication by x and A = the q-derivative x^n -> {n}_q x^{n-1}.

#include "qheis/heis.hpp"

#include <functional>
#include <map>
#include <random>

namespace oracle {

using qheis::NormalElement;
using qheis::QValue;
using qheis::RationalFunction;
using qheis::Word;

using Poly = std::map<long, RationalFunction>;

inline void add(Poly &p, long e, const RationalFunction &c) {
  RationalFunction &slot = p[e];
  slot += c;
  if (slot.is_zero())
    p.erase(e);
}

inline Poly apply_letter(char letter, const Poly &p, const RationalFunction &q) {
  Poly out;
  for (const auto &[e, c] : p) {
    if (letter == 'B')
      add(out, e + 1, c);
    else if (e > 0)
      add(out, e - 1, c * qheis::q_int(e, q));
  }
  return out;
}

/// Image of x^j under the word, letters acting right to left.
inline Poly apply_word(const Word &w, long j, const RationalFunction &q) {
  Poly p{{j, RationalFunction(1)}};
  for (std::size_t i = w.size(); i-- > 0;)
    p = apply_letter(w[i], p, q);
  return p;
}

inline Poly apply(const NormalElement &x, long j) {
  const RationalFunction q = x.q().as_rf();
  Poly out;
  for (const auto &[mono, c] : x.terms()) {
    const Word w = Word::power('B', mono.m) + Word::power('A', mono.n);
    for (const auto &[e, d] : apply_word(w, j, q))
      add(out, e, c * d);
  }
  return out;
}

/// The two operators agree on x^0 .. x^N.
template <class F, class G> bool same_action(F &&f, G &&g, long N) {
  for (long j = 0; j <= N; ++j)
    if (f(j) != g(j))
      return false;
  return true;
}

/// Linear operator on Q(q)[x], composed from letters without the rewriter.
using Op = std::function<Poly(const Poly &)>;

inline Op letter_op(char letter, const RationalFunction &q) {
  return [letter, q](const Poly &p) { return apply_letter(letter, p, q); };
}
inline Op compose(Op f, Op g) {
  return [f, g](const Poly &p) { return f(g(p)); };
}
inline Op minus(Op f, Op g) {
  return [f, g](const Poly &p) {
    Poly out = f(p);
    for (const auto &[e, c] : g(p))
      add(out, e, -c);
    return out;
  };
}
inline Op scaled(Op f, RationalFunction c) {
  return [f, c](const Poly &p) {
    Poly out;
    for (const auto &[e, d] : f(p))
      add(out, e, c * d);
    return out;
  };
}
inline Op identity_op() {
  return [](const Poly &p) { return p; };
}
inline Op power(Op f, unsigned k) {
  Op out = identity_op();
  for (unsigned i = 0; i < k; ++i)
    out = compose(f, out);
  return out;
}
inline Op bracket(Op f, Op g) { return minus(compose(f, g), compose(g, f)); }
inline Poly monomial(long j) { return Poly{{j, RationalFunction(1)}}; }

/// Random element of Q(q) with small integer coefficients.
inline RationalFunction random_rf(std::mt19937_64 &rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 2);
  for (;;) {
    auto poly = [&] {
      RationalFunction p;
      const int d = deg(rng);
      for (int i = 0; i <= d; ++i)
        p += RationalFunction(coef(rng)) * RationalFunction::q().pow(i);
      return p;
    };
    RationalFunction den = poly();
    if (den.is_zero())
      continue;
    RationalFunction r = poly() / den;
    if (allow_zero || !r.is_zero())
      return r;
  }
}

inline NormalElement random_element(std::mt19937_64 &rng, const QValue &q, unsigned max_exp, int max_terms = 4) {
  std::uniform_int_distribution<int> terms(1, max_terms), ex(0, static_cast<int>(max_exp)), coef(-3, 3);
  NormalElement x(q);
  for (int i = terms(rng); i > 0; --i) {
    RationalFunction c = q.is_symbolic() ? random_rf(rng) : RationalFunction(coef(rng));
    x.add_term(qheis::Mono{static_cast<unsigned>(ex(rng)), static_cast<unsigned>(ex(rng))}, c);
  }
  return x;
}

} // namespace oracle
