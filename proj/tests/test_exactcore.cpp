#include <doctest.h>

#include <stdexcept>

#include "test_support.hpp"
#include "umbral/poly.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"

using namespace umbral;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-6/3")) == "-2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK(to_string(parse_rational("+5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(7, 2) == 21);
  CHECK(binomial(40, 20) == Integer("137846528820"));
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(pow(q(2, 3), -2) == q(9, 4));
}

TEST_CASE("poly_diff") {
  CHECK(diff(Poly{1}).is_zero());
  CHECK(diff(Poly::monomial(1, 5)) == Poly::monomial(5, 4));
  CHECK(diff(Poly{0, 2, 0, 1}) == Poly{2, 0, 3});

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Poly p = testing::random_poly(rng, 8);
    if (p.degree() >= 1) CHECK(diff(p).degree() == p.degree() - 1);
  }
}

TEST_CASE("poly_eval") {
  CHECK(eval(Poly{0, 1, 1}, 1) == 2);
  CHECK(eval(Poly{q(7, 3), 4, -1}, 0) == q(7, 3));
  CHECK(eval(Poly{0, 3, 3, 1}, 1) == 7);
  CHECK(eval(Poly{}, 5) == 0);
}

TEST_CASE("taylor_shift") {
  CHECK(taylor_shift(Poly::monomial(1, 2), 1) == Poly{1, 2, 1});
  const Poly p{3, q(-1, 2), 0, 4};
  CHECK(taylor_shift(p, 0) == p);
  CHECK(taylor_shift(taylor_shift(Poly::monomial(1, 3), -1), 1) == Poly::monomial(1, 3));

  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const Poly r = testing::random_poly(rng, 10);
    const Rational s = testing::random_rational(rng);
    CHECK(taylor_shift(taylor_shift(r, s), -s) == r);
    // pointwise meaning of the shift
    const Rational x = testing::random_rational(rng);
    CHECK(eval(taylor_shift(r, s), x) == eval(r, x + s));
  }
}

TEST_CASE("reflect") {
  CHECK(reflect(Poly{1, 2}, 3) == Poly{0, 0, 2, 1});
  CHECK_THROWS(reflect(Poly{1, 2, 3}, 1));
}

TEST_CASE("series arithmetic keeps the smaller order") {
  const Series a(std::vector<Rational>{1, 2, 3});
  const Series b(std::vector<Rational>{1, 1});
  CHECK((a * b).order() == 1);
  CHECK((a + b) == Series(std::vector<Rational>{2, 3}));
  CHECK_THROWS(a.shifted_down(1));
  CHECK(Series::monomial(1, 1, 3).shifted_down(1) == Series::constant(1, 2));
}

TEST_CASE("fps_compose") {
  std::mt19937_64 rng(21);
  const Series inner = testing::random_series(rng, 8, 0);
  CHECK(fps::compose(Series::identity(8), inner) == inner);

  const Series x2 = Series::monomial(1, 2, 4);
  const Series x_plus_x2(std::vector<Rational>{0, 1, 1, 0, 0});
  CHECK(fps::compose(x2, x_plus_x2) == Series(std::vector<Rational>{0, 0, 1, 2, 1}));

  CHECK_THROWS_AS(fps::compose(x2, Series::constant(1, 4)), std::domain_error);
}

TEST_CASE("fps_reverse") {
  CHECK(fps::reverse(Series::identity(10)) == Series::identity(10));
  CHECK(fps::reverse(Series::monomial(2, 1, 10)) == Series::monomial(q(1, 2), 1, 10));

  // reverse(x - x^2/2) = 1 - sqrt(1 - 2x); coefficient n is (2n-3)!!/n!.
  const Series g(std::vector<Rational>{0, 1, q(-1, 2), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  const Series f = fps::reverse(g);
  CHECK(f[1] == 1);
  CHECK(f[2] == q(1, 2));
  CHECK(f[3] == q(1, 2));
  CHECK(f[4] == q(5, 8));
  Integer dfact(1);
  for (unsigned long n = 1; n <= 12; ++n) {
    if (n >= 3) dfact *= 2 * n - 3;
    CHECK(f[n] == Rational(dfact) / Rational(factorial(n)));
  }

  CHECK_THROWS_AS(fps::reverse(Series::monomial(1, 2, 5)), std::domain_error);
  CHECK_THROWS_AS(fps::reverse(Series::constant(1, 5)), std::domain_error);
}

TEST_CASE("reverse is a two-sided compositional inverse") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 20; ++i) {
    const Series g = testing::random_series(rng, 12, 0);
    const Series f = fps::reverse(g);
    CHECK(fps::compose(f, g) == Series::identity(12));
    CHECK(fps::compose(g, f) == Series::identity(12));
  }
}

TEST_CASE("fps_exp") {
  CHECK(fps::exp(Series::zero(6)) == Series::constant(1, 6));
  const Series e = fps::exp(Series::identity(10));
  for (unsigned long n = 0; n <= 10; ++n) CHECK(e[n] == Rational(Integer(1), factorial(n)));

  // exp(1 - sqrt(1 - 2x)): n! [x^n] is w_n(1) with
  // w_n(1) = sum_j (n+j-1)! / (j! (n-j-1)! 2^j), evaluated here directly.
  const Series f = fps::reverse(Series(std::vector<Rational>{0, 1, q(-1, 2), 0, 0, 0, 0, 0}));
  const Series ef = fps::exp(f);
  const long frozen[] = {1, 1, 2, 7, 37, 266, 2431, 27007};
  for (unsigned long n = 0; n <= 7; ++n) {
    Rational direct(n == 0 ? 1 : 0);
    for (unsigned long j = 0; n >= 1 && j + 1 <= n; ++j)
      direct += Rational(factorial(n + j - 1)) /
                Rational(Integer(factorial(j) * factorial(n - j - 1) * (Integer(1) << j)));
    CHECK(direct == frozen[n]);
    CHECK(ef[n] * Rational(factorial(n)) == direct);
  }

  CHECK_THROWS_AS(fps::exp(Series::constant(1, 3)), std::domain_error);
}

TEST_CASE("fps_sqrt and fps_recip") {
  CHECK(fps::sqrt(Series::constant(1, 5)) == Series::constant(1, 5));

  const Series one_minus_4x(std::vector<Rational>{1, -4, 0, 0, 0, 0, 0});
  const Series s = fps::sqrt(one_minus_4x);
  CHECK(s * s == one_minus_4x);
  // frozen after squaring: -2 times shifted Catalan numbers
  CHECK(s == Series(std::vector<Rational>{1, -2, -2, -4, -10, -28, -84}));

  const Series r = fps::recip(Series(std::vector<Rational>{1, -1, 0, 0, 0, 0}));
  CHECK(r == Series(std::vector<Rational>{1, 1, 1, 1, 1, 1}));

  CHECK_THROWS_AS(fps::sqrt(Series::constant(4, 3)), std::domain_error);
  CHECK_THROWS_AS(fps::recip(Series::zero(3)), std::domain_error);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const Series f = testing::random_series(rng, 15, 1);
    const Series root = fps::sqrt(f);
    CHECK(root * root == f);
    CHECK(fps::recip(f) * f == Series::constant(1, 15));
  }
}
