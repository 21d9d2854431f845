#pragma once

// Seeded generators for property-style tests.

#include <cstdint>
#include <random>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/series.hpp"

namespace umbral::testing {

inline Rational random_rational(std::mt19937_64& rng, long bound = 5) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = random_rational(rng);
  return Poly(std::move(c));
}

// Random series with the given constant term and a nonzero linear term.
inline Series random_series(std::mt19937_64& rng, std::size_t order, const Rational& constant) {
  std::vector<Rational> c(order + 1);
  c[0] = constant;
  for (std::size_t k = 1; k <= order; ++k) c[k] = random_rational(rng);
  if (order >= 1 && c[1] == 0) c[1] = 1;
  return Series(std::move(c));
}

}  // namespace umbral::testing
