#include "oracle.hpp"

#include "qheis/heis.hpp"

#include <doctest.h>

using namespace qheis;

namespace {

const QValue sym = QValue::symbolic();
const RF q = RF::q();

NormalElement mono(unsigned m, unsigned n, const QValue &qv = sym) { return NormalElement::monomial(qv, m, n); }

std::vector<Word> words_up_to(std::size_t len) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= len; ++n)
    for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
      std::string s(n, 'A');
      for (std::size_t i = 0; i < n; ++i)
        if (bits & (1UL << i))
          s[i] = 'B';
      out.emplace_back(s);
    }
  return out;
}

} // namespace

TEST_CASE("defining relation and small normal forms") {
  CHECK(normal_form(Word("AB"), sym).to_string() == "I + q*B*A");
  CHECK(normal_form(Word("AB"), sym) == mono(0, 0) + mono(1, 1) * q);
  CHECK(normal_form(Word("BA"), sym) == mono(1, 1));
  CHECK(normal_form(Word(), sym) == NormalElement::identity(sym));
  CHECK(comm_power(1, sym) == mono(0, 0) + mono(1, 1) * (q - 1));
  CHECK(comm_power(2, sym).to_string() == "I + (-1 + q^2)*B*A + (q - 2*q^2 + q^3)*B^2*A^2");
  // At q = 0, A is a left inverse of B.
  const QValue zero = QValue::rational(0);
  CHECK(normal_form(Word("AB"), zero) == NormalElement::identity(zero));
  CHECK(normal_form(Word("AABBB"), zero) == mono(1, 0, zero));
}

TEST_CASE("normal forms agree with the q-derivative representation") {
  for (const QValue &qv : {sym, QValue::rational(0), QValue::rational(Rational(3, 2)), QValue::rational(-1)}) {
    const RF Q = qv.as_rf();
    for (const Word &w : words_up_to(7)) {
      const NormalElement x = normal_form(w, qv);
      CHECK(oracle::same_action([&](long j) { return oracle::apply(x, j); },
                                [&](long j) { return oracle::apply_word(w, j, Q); }, 9));
    }
  }
}

TEST_CASE("rewriting strategies are confluent") {
  for (const Word &w : words_up_to(8))
    CHECK(normal_form(w, sym, RewriteStrategy::Leftmost) == normal_form(w, sym, RewriteStrategy::Rightmost));
}

TEST_CASE("normal form is a homomorphism onto the PBW product") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const NormalElement x = oracle::random_element(rng, sym, 3), y = oracle::random_element(rng, sym, 3);
    CHECK(normal_form(x.embed() * y.embed(), sym) == x * y);
    CHECK(normal_form(x.embed(), sym) == x);
    CHECK(normal_form(normal_form(x.embed() * y.embed(), sym).embed(), sym) == x * y);
  }
}

TEST_CASE("associativity, antisymmetry and Jacobi in H(q)") {
  std::mt19937_64 rng(22);
  for (const QValue &qv : {sym, QValue::rational(0), QValue::rational(2)}) {
    for (int trial = 0; trial < 15; ++trial) {
      const NormalElement x = oracle::random_element(rng, qv, 2), y = oracle::random_element(rng, qv, 2),
                          z = oracle::random_element(rng, qv, 2);
      CHECK((x * y) * z == x * (y * z));
      CHECK(h_commutator(x, y) == -h_commutator(y, x));
      CHECK((h_commutator(x, h_commutator(y, z)) + h_commutator(y, h_commutator(z, x)) +
             h_commutator(z, h_commutator(x, y)))
                .is_zero());
    }
  }
}

TEST_CASE("mixing elements over different q is rejected") {
  CHECK_THROWS_AS(mono(1, 0) + mono(1, 0, QValue::rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(mono(1, 0) * mono(1, 0, QValue::rational(2)), std::invalid_argument);
}

TEST_CASE("grading is multiplicative") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const NormalElement x = oracle::random_element(rng, sym, 3), y = oracle::random_element(rng, sym, 3);
    NormalElement sum(sym);
    for (const auto &[d, part] : grade(x)) {
      sum += part;
      for (const auto &[mono, c] : part.terms())
        CHECK(mono.degree() == d);
    }
    CHECK(sum == x);
    for (const auto &[dx, px] : grade(x))
      for (const auto &[dy, py] : grade(y))
        for (const auto &[d, part] : grade(px * py))
          CHECK(d == dx + dy);
  }
}

TEST_CASE("reordering formulas") {
  for (ReorderKind kind : {ReorderKind::ABn, ReorderKind::AnB, ReorderKind::BAn, ReorderKind::BnA})
    for (long n = 1; n <= 6; ++n) {
      CHECK(reorder_check(kind, n, sym).holds());
      CHECK(reorder_holds(kind, n, QValue::rational(Rational(2, 3))));
    }
  CHECK(reorder_holds(ReorderKind::ABn, 3, QValue::rational(0)));
  CHECK_THROWS_AS(reorder_check(ReorderKind::BAn, 2, QValue::rational(0)), DomainError);
  CHECK_THROWS_AS(reorder_check(ReorderKind::ABn, 0, sym), std::invalid_argument);
}

TEST_CASE("[A,B] q-commutes past A and B") {
  const NormalElement c = comm_power(1, sym);
  CHECK(mono(0, 1) * c == c * mono(0, 1) * q);
  CHECK(c * mono(1, 0) == mono(1, 0) * c * q);
  for (unsigned k = 0; k <= 5; ++k)
    CHECK(comm_power(k, sym) == c.pow(k));
}

TEST_CASE("shift identity for polynomials in A and B") {
  for (const char *w : {"", "A", "B", "AB", "BBA", "ABAB"})
    for (long n = 0; n <= 3; ++n)
      CHECK(shift_poly_check(FreeElement(Word(w)), n, sym).holds());
  const FreeElement p = FreeElement(Word("AB"), q) + FreeElement(Word("B"), RF(3));
  CHECK(shift_poly_check(p, 2, sym).holds());
  CHECK_THROWS_AS(shift_poly_check(p, 1, QValue::rational(0)), DomainError);
}

TEST_CASE("B^nA^n and A^nB^n in powers of [A,B]") {
  for (long n = 0; n <= 6; ++n) {
    const auto un = static_cast<unsigned>(n);
    CHECK(bnan_expand(n, sym) == mono(un, un));
    CHECK(anbn_expand(n, sym) == normal_form(Word::power('A', un) + Word::power('B', un), sym));
    const NormalElement x = comm_power(1, sym) * q;
    CHECK(gauss_polynomial(n, x, q.inverse()) == gauss_product(n, x, q.inverse()));
  }
  CHECK_THROWS_AS(bnan_expand(2, QValue::rational(1)), DomainError);
}

TEST_CASE("[A,B]-power basis round trip") {
  std::mt19937_64 rng(24);
  for (const QValue &qv : {sym, QValue::rational(2), QValue::rational(Rational(-3, 5))})
    for (int trial = 0; trial < 25; ++trial) {
      const NormalElement x = oracle::random_element(rng, qv, 4);
      const LiePowerCoords c = to_lie_power_basis(x);
      CHECK(from_lie_power_basis(c) == x);
      NormalElement sum(qv);
      for (const auto &[key, coeff] : c.coords)
        sum += lie_power_vector(key.first, key.second, qv) * coeff;
      CHECK(sum == x);
    }
  const LiePowerCoords ab = to_lie_power_basis(normal_form(Word("AB"), sym));
  CHECK(ab.at(0, 1) == q / (q - 1));
  CHECK(ab.at(0, 0) == RF(-1) / (q - 1));
  CHECK(ab.at(3, 0).is_zero());
  CHECK_THROWS_AS(to_lie_power_basis(mono(1, 1, QValue::rational(1))), DomainError);
  CHECK_THROWS_AS(to_lie_power_basis(mono(1, 1, QValue::rational(0))), DomainError);
}

TEST_CASE("bracketed words and iterated commutators") {
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 1; n <= 4; ++n)
      CHECK(bracket_bm_an(m, n, sym) == bracket_word(Word::power('B', m) + Word::power('A', n), sym));
  CHECK(bracket_word(Word("BA"), sym) == mono(1, 1) - normal_form(Word("AB"), sym));
  for (long m = 0; m <= 5; ++m)
    for (long n = 0; n <= 5; ++n) {
      CHECK(adad_ba_check(m, n, sym).holds());
      CHECK(adad_b_check(m, n, sym).holds());
    }
  for (long n = 1; n <= 5; ++n) {
    CHECK(fban_check(n, sym).holds());
    CHECK(fbna_check(n, sym).holds());
  }
}
