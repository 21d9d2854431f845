#include <doctest.h>

#include <stdexcept>

#include "umbral/bessel_poly.hpp"

using namespace umbral;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// y_n = (2n - 1) t y_{n-1} + y_{n-2}, independent of the explicit sum.
std::vector<Poly> bessel_by_recurrence(std::size_t nmax) {
  std::vector<Poly> y{Poly{1}, Poly{1, 1}};
  for (std::size_t n = 2; n <= nmax; ++n)
    y.push_back(Poly{0, static_cast<long>(2 * n - 1)} * y[n - 1] + y[n - 2]);
  y.resize(nmax + 1);
  return y;
}

}  // namespace

TEST_CASE("bessel_poly") {
  const BesselPolySeq y = bessel_poly(20);
  CHECK(y[0] == Poly{1});
  CHECK(y[1] == Poly{1, 1});
  const long at_one[] = {1, 2, 7, 37, 266};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(eval(y[n], 1) == at_one[n]);

  const auto rec = bessel_by_recurrence(20);
  for (std::size_t n = 0; n <= 20; ++n) {
    CHECK(y[n] == rec[n]);
    CHECK(eval(y[n], 0) == 1);
    CHECK(y[n].degree() == static_cast<long>(n));
    CHECK(y[n][n] == Rational(factorial(2 * n)) / Rational(Integer(factorial(n) * (Integer(1) << n))));
  }
}

TEST_CASE("carlitz_w") {
  const BinomialSequence w = carlitz_w(30);
  CHECK(w[0] == Poly{1});
  CHECK(w[1] == Poly{0, 1});
  CHECK(w[2] == Poly{0, 1, 1});
  const long at_two[] = {1, 2, 6, 26};
  for (std::size_t n = 0; n <= 3; ++n) CHECK(eval(w[n], 2) == at_two[n]);

  // The k-sum used here and the j-sum of the general closed form agree.
  const BinomialSequence closed = basic_sequence_closed(carlitz_triple(), 30);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(w[n] == closed[n]);
  const BinomialSequence generic = basic_sequence_generic(carlitz_triple().delta(6), 6);
  CHECK(w[2] == generic[2]);
}

TEST_CASE("w_bessel_relation_check") {
  const BinomialSequence w = carlitz_w(3);
  const BesselPolySeq y = bessel_poly(2);
  CHECK(reflect(y[0], 1) == w[1]);
  CHECK(eval(y[2], 1) == 7);
  CHECK(eval(w[3], 1) == 7);
  CHECK(w_bessel_relation_check(25));
  CHECK_THROWS_AS(w_bessel_relation_check(0), std::invalid_argument);
}

TEST_CASE("bessel_egf_check") {
  const EgfSides s = bessel_egf_sides(q(1), 4);
  CHECK(s.lhs[0] == 1);
  CHECK(s.rhs[0] == 1);
  CHECK(bessel_egf_check(q(1), 12));
  CHECK(bessel_egf_check(q(2, 3), 12));
  for (const Rational& t0 : {q(1), q(2), q(1, 2), q(2, 3), q(-1)}) {
    CHECK(bessel_egf_check(t0, 12));
    CHECK(bessel_egf_derivative_check(t0, 12));
  }
  CHECK_THROWS_AS(bessel_egf_check(q(0), 12), std::invalid_argument);

  // Sensitive to the parameter: the y_n(2) series is not the t0 = 1 right-hand side.
  CHECK_FALSE(bessel_egf_sides(q(2), 6).lhs == bessel_egf_sides(q(1), 6).rhs);
}
