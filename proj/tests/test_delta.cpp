#include <doctest.h>

#include <stdexcept>

#include "test_support.hpp"
#include "umbral/acceptance.hpp"
#include "umbral/delta.hpp"

using namespace umbral;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

const AbTriple kCarlitz(1, q(1, 2), 1);

// e^x - 1 truncated at the given order.
Series exp_minus_one(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 1; k <= order; ++k) c[k] = Rational(Integer(1), factorial(k));
  return Series(std::move(c));
}

}  // namespace

TEST_CASE("delta operator construction") {
  CHECK_THROWS_AS(DeltaOperator(Series::monomial(1, 2, 4)), std::invalid_argument);
  CHECK_THROWS_AS(DeltaOperator(Series::constant(1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(AbTriple(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(AbTriple(1, 1, 0), std::invalid_argument);
}

TEST_CASE("apply_delta") {
  const DeltaOperator q1 = kCarlitz.delta(6);
  CHECK(apply_delta(q1, Poly{5}).is_zero());
  CHECK(apply_delta(q1, Poly{0, 0, 1}) == Poly{-1, 2});

  const BinomialSequence w = basic_sequence_closed(AbTriple(q(3, 2), q(-2, 5), 3), 12);
  const DeltaOperator q2 = AbTriple(q(3, 2), q(-2, 5), 3).delta(12);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(apply_delta(q2, w[n]) == Rational(static_cast<long>(n)) * w[n - 1]);

  // A truncated symbol cannot act on higher degrees.
  CHECK_THROWS_AS(apply_delta(DeltaOperator(exp_minus_one(3)), Poly::monomial(1, 5)), std::domain_error);
}

TEST_CASE("basic_sequence_generic") {
  SUBCASE("Q = D gives monomials") {
    const BinomialSequence w = basic_sequence_generic(DeltaOperator(Series::identity(8)), 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(w[n] == Poly::monomial(1, n));
  }
  SUBCASE("D - D^2/2 up to n = 3") {
    const BinomialSequence w = basic_sequence_generic(kCarlitz.delta(3), 3);
    CHECK(w[0] == Poly{1});
    CHECK(w[1] == Poly{0, 1});
    CHECK(w[2] == Poly{0, 1, 1});
    CHECK(w[3] == Poly{0, 3, 3, 1});
  }
  SUBCASE("e^D - 1 gives falling factorials") {
    constexpr std::size_t kN = 10;
    const DeltaOperator fwd(exp_minus_one(kN + 1));
    const BinomialSequence w = basic_sequence_generic(fwd, kN);
    Poly falling{1};
    for (std::size_t n = 0; n <= kN; ++n) {
      CHECK(w[n] == falling);
      if (n >= 1) CHECK(apply_delta(fwd, w[n]) == Rational(static_cast<long>(n)) * w[n - 1]);
      falling = falling * Poly{-static_cast<long>(n), 1};
    }
  }
  CHECK_THROWS_AS(basic_sequence_generic(kCarlitz.delta(2), 5), std::domain_error);
}

TEST_CASE("basic_sequence_closed") {
  const AbTriple abp(q(-3, 4), q(5, 2), 2);
  const BinomialSequence w = basic_sequence_closed(abp, 10);
  CHECK(w[0] == Poly{1});
  CHECK(w[1] == Poly{0, 1 / abp.a});

  const AbTriple pure(q(2, 3), 0, 3);
  const BinomialSequence m = basic_sequence_closed(pure, 8);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(m[n] == Poly::monomial(pow(1 / pure.a, static_cast<long>(n)), n));

  const BinomialSequence c = basic_sequence_closed(kCarlitz, 4);
  const BinomialSequence g = basic_sequence_generic(kCarlitz.delta(4), 4);
  const long at_one[] = {1, 1, 2, 7, 37};
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(eval(g[n], 1) == at_one[n]);
    CHECK(eval(c[n], 1) == at_one[n]);
  }
}

TEST_CASE("basic sequence invariants over seeded triples") {
  for (const AbTriple& abp : acceptance::seeded_triples(12, 99)) {
    CAPTURE(to_string(abp.a));
    CAPTURE(to_string(abp.b));
    CAPTURE(abp.p);
    constexpr std::size_t kN = 14;
    const BinomialSequence closed = basic_sequence_closed(abp, kN);
    const BinomialSequence generic = basic_sequence_generic(abp.delta(kN), kN);
    const Series f = f_series(abp, kN);
    const BinomialSequence egf = basic_sequence_egf(f, kN);
    for (std::size_t n = 0; n <= kN; ++n) {
      CHECK(closed[n] == generic[n]);
      CHECK(closed[n] == egf[n]);
      CHECK(closed[n].degree() == static_cast<long>(n));
      if (n >= 1) {
        CHECK(eval(closed[n], 0) == 0);
        // a_n = w_n'(0) = n! [x^n] f
        CHECK(closed[n][1] == f[n] * Rational(factorial(n)));
      }
    }
    // n! [x^n] exp(t0 f) = w_n(t0)
    for (const Rational& t0 : {q(1), q(-2, 3), q(5, 2)}) {
      const Series e = fps::exp(t0 * f);
      for (std::size_t n = 0; n <= kN; ++n) CHECK(e[n] * Rational(factorial(n)) == eval(closed[n], t0));
    }
  }
}

TEST_CASE("f_series") {
  const AbTriple pure(q(-5, 2), 0, 2);
  CHECK(f_series(pure, 10) == Series::monomial(1 / pure.a, 1, 10));

  const Series f = f_series(kCarlitz, 10);
  CHECK(f == fps::reverse(kCarlitz.symbol(10)));
  CHECK(f[4] == q(5, 8));

  for (const AbTriple& abp : acceptance::seeded_triples(8, 5)) {
    const Series fs = f_series(abp, 16);
    CHECK(fps::compose(fs, abp.symbol(16)) == Series::identity(16));
    CHECK(fps::compose(abp.symbol(16), fs) == Series::identity(16));
  }
  CHECK_THROWS_AS(f_series(kCarlitz, 0), std::invalid_argument);
}

TEST_CASE("binomial_identity_check") {
  const BinomialSequence w = basic_sequence_closed(AbTriple(2, -3, 2), 20);
  CHECK(binomial_identity_check(w, 0));
  CHECK(binomial_identity_check(w, 1));
  for (std::size_t n = 0; n <= 20; ++n) CHECK(binomial_identity_check(w, n));

  // A linear perturbation of w_2 would stay additive; a quadratic one does not.
  BinomialSequence broken = w;
  broken.polys[2] = broken.polys[2] + Poly{0, 0, 1};
  CHECK_FALSE(binomial_identity_check(broken, 2));
  CHECK_FALSE(binomial_identity_check(broken, 4));

  CHECK_THROWS_AS(binomial_identity_check(w, 21), std::out_of_range);
}
