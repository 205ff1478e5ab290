#include "oracle.hpp"

#include "qheis/lie.hpp"
#include "qheis/linalg.hpp"

#include <doctest.h>

using namespace qheis;

namespace {

const QValue zero = QValue::rational(0);
using Z = ZeroBasisVector;

NormalElement mono(unsigned m, unsigned n) { return NormalElement::monomial(zero, m, n); }

} // namespace

TEST_CASE("A is a left inverse of B at q = 0") {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned m = 1; m <= 6; ++m) {
      const NormalElement expected = n >= m ? mono(0, n - m) : mono(m - n, 0);
      CHECK(normal_form(Word::power('A', n) + Word::power('B', m), zero) == expected);
    }
}

TEST_CASE("bracket expansions at q = 0") {
  // <B^2A^2> = B^2A^2 - 2BA + I
  CHECK(bracket_bm_an(2, 2, zero) == mono(2, 2) - mono(1, 1) * RF(2) + mono(0, 0));
  // <B^3A^2> = B^3A^2 - 3B^2A + 2B, by direct expansion on Q[x].
  const NormalElement b3a2 = mono(3, 2) - mono(2, 1) * RF(3) + mono(1, 0) * RF(2);
  CHECK(bracket_bm_an(3, 2, zero) == b3a2);
  const FreeElement word = eval_monomial(bracketing(Word("BBBAA")));
  CHECK(oracle::same_action(
      [&](long j) {
        oracle::Poly out;
        for (const auto &[w, c] : word.terms())
          for (const auto &[e, d] : oracle::apply_word(w, j, RF(0)))
            oracle::add(out, e, c * d);
        return out;
      },
      [&](long j) { return oracle::apply(b3a2, j); }, 10));
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned n = 1; n <= 5; ++n) {
      CHECK(bm_an_rederived(m, n) == bracket_bm_an(m, n, zero));
      if (n >= m || n == 1)
        CHECK(bm_an_printed(m, n) == bracket_bm_an(m, n, zero));
    }
  CHECK_FALSE(bm_an_printed(3, 2) == bracket_bm_an(3, 2, zero));
}

TEST_CASE("q = 0 decompositions round-trip") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const NormalElement x = oracle::random_element(rng, zero, 5);
    CHECK(expand(decompose_zero_free(x)) == x);
    CHECK(expand(decompose_zero(x)) == x);
  }
  for (unsigned l = 2; l <= 5; ++l) {
    CHECK(expand(decompose_zero(mono(l, 0))) == mono(l, 0));
    CHECK(expand(decompose_zero(mono(0, l))) == mono(0, l));
  }
  CHECK_THROWS_AS(membership_zero(NormalElement::identity(QValue::symbolic())), DomainError);
}

TEST_CASE("q = 0 membership") {
  CHECK(membership_zero(mono(0, 1)));
  CHECK(membership_zero(mono(1, 0)));
  CHECK(membership_zero(mono(1, 1) - mono(0, 0)));
  CHECK_FALSE(membership_zero(mono(0, 0)));
  CHECK_FALSE(membership_zero(mono(2, 5)));
  CHECK_FALSE(membership_zero(mono(5, 2)));
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 1; n <= 4; ++n)
      CHECK(membership_zero(bracket_bm_an(m, n, zero)));
  for (unsigned r = 1; r <= 3; ++r)
    CHECK(membership_zero(mono(r, r) - mono(0, 0)));
  for (unsigned i = 4; i <= 6; ++i)
    for (unsigned k = 4; k <= 6; ++k)
      CHECK(membership_zero(h_commutator(mono(i, 2), mono(2, k))));
}

TEST_CASE("q = 0 basis families are independent") {
  for (unsigned bound : {3u, 5u}) {
    for (ZeroFamily family : {ZeroFamily::FreeLie, ZeroFamily::FreeIndep, ZeroFamily::Extended}) {
      std::vector<NormalElement> vs;
      for (const Z &v : zero_basis_within(family, bound))
        vs.push_back(expand_zero_basis(v));
      CHECK(rank(vs) == vs.size());
    }
    CHECK(zero_basis_within(ZeroFamily::FreeIndep, bound).size() == (bound + 1) * (bound + 1));
  }
  CHECK(Z::br_mn(2, 3).in_lie());
  CHECK_FALSE(Z::bb_aj(4).in_lie());
  CHECK_FALSE(Z::identity().in_lie());
}
