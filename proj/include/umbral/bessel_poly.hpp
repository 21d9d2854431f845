#pragma once

// Bessel polynomials y_n and the Carlitz basic sequence of D - D^2/2.

#include <cstddef>
#include <vector>

#include "umbral/delta.hpp"
#include "umbral/poly.hpp"
#include "umbral/series.hpp"

namespace umbral {

struct BesselPolySeq {
  std::vector<Poly> polys;  // polys[n] = y_n(t)

  std::size_t size() const { return polys.size(); }
  const Poly& operator[](std::size_t n) const { return polys.at(n); }
};

// y_n(t) = sum_{j=0}^{n} (n+j)! / (j! (n-j)!) (t/2)^j
BesselPolySeq bessel_poly(std::size_t nmax);

// w_n(t) = sum_{k=1}^{n} (2n-k-1)! t^k / ((n-k)! (k-1)! 2^{n-k}), w_0 = 1.
BinomialSequence carlitz_w(std::size_t nmax);

// The triple (1, 1/2, 1), i.e. Q = D - D^2/2.
AbTriple carlitz_triple();

// w_n(t) == t^n y_{n-1}(1/t) coefficient-wise for 1 <= n <= nmax.
bool w_bessel_relation_check(std::size_t nmax);

struct EgfSides {
  Series lhs;  // sum y_n(t0) x^n / n!
  Series rhs;  // exp((1 - sqrt(1 - 2 t0 x)) / t0) / sqrt(1 - 2 t0 x)
};

EgfSides bessel_egf_sides(const Rational& t0, std::size_t order);

// Throws std::invalid_argument for t0 == 0.
bool bessel_egf_check(const Rational& t0, std::size_t order);

// The EGF right-hand side equals d/dx exp((1 - sqrt(1 - 2 t0 x)) / t0).
bool bessel_egf_derivative_check(const Rational& t0, std::size_t order);

}  // namespace umbral
