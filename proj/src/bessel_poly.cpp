#include "umbral/bessel_poly.hpp"

#include <stdexcept>

namespace umbral {

BesselPolySeq bessel_poly(std::size_t nmax) {
  BesselPolySeq seq;
  seq.polys.reserve(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      Rational r{factorial(n + j), Integer(factorial(j) * factorial(n - j) * (Integer(1) << j))};
      r.canonicalize();
      c[j] = r;
    }
    seq.polys.emplace_back(std::move(c));
  }
  return seq;
}

BinomialSequence carlitz_w(std::size_t nmax) {
  BinomialSequence seq;
  seq.source = SequenceSource::ClosedForm;
  seq.polys.reserve(nmax + 1);
  seq.polys.push_back(Poly::constant(Rational(1)));
  for (std::size_t n = 1; n <= nmax; ++n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
      Rational r{factorial(2 * n - k - 1),
                 Integer(factorial(n - k) * factorial(k - 1) * (Integer(1) << (n - k)))};
      r.canonicalize();
      c[k] = r;
    }
    seq.polys.emplace_back(std::move(c));
  }
  return seq;
}

AbTriple carlitz_triple() { return AbTriple(Rational(1), Rational(1, 2), 1); }

bool w_bessel_relation_check(std::size_t nmax) {
  if (nmax < 1) throw std::invalid_argument("w_bessel_relation_check: nmax must be >= 1");
  const BinomialSequence w = carlitz_w(nmax);
  const BesselPolySeq y = bessel_poly(nmax - 1);
  for (std::size_t n = 1; n <= nmax; ++n)
    if (reflect(y[n - 1], n) != w[n]) return false;
  return true;
}

EgfSides bessel_egf_sides(const Rational& t0, std::size_t order) {
  if (t0 == 0) throw std::invalid_argument("bessel_egf_check: t0 must be nonzero");
  if (order < 1) throw std::invalid_argument("bessel_egf_check: order must be >= 1");
  const BesselPolySeq y = bessel_poly(order);
  std::vector<Rational> lhs(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational r = eval(y[n], t0) / Rational(factorial(n));
    lhs[n] = r;
  }

  std::vector<Rational> arg(order + 1);
  arg[0] = 1;
  arg[1] = -2 * t0;
  const Series root = fps::sqrt(Series(std::move(arg)));
  const Series exponent = (1 / t0) * (Series::constant(Rational(1), order) - root);
  Series rhs = fps::exp(exponent) * fps::recip(root);
  return {Series(std::move(lhs)), std::move(rhs)};
}

bool bessel_egf_check(const Rational& t0, std::size_t order) {
  const EgfSides sides = bessel_egf_sides(t0, order);
  return sides.lhs == sides.rhs;
}

bool bessel_egf_derivative_check(const Rational& t0, std::size_t order) {
  if (t0 == 0) throw std::invalid_argument("bessel_egf_derivative_check: t0 must be nonzero");
  std::vector<Rational> arg(order + 2);
  arg[0] = 1;
  arg[1] = -2 * t0;
  const Series root = fps::sqrt(Series(std::move(arg)));
  const Series exponent = (1 / t0) * (Series::constant(Rational(1), order + 1) - root);
  const Series lhs = fps::derivative(fps::exp(exponent));
  return lhs == bessel_egf_sides(t0, order).rhs;
}

}  // namespace umbral
