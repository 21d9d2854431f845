#include "umbral/fuss.hpp"

#include <stdexcept>

namespace umbral {

Rational fuss_number(long p, long n) {
  if (p < 1) throw std::invalid_argument("fuss_number: p must be >= 1");
  if (n < 0) throw std::invalid_argument("fuss_number: n must be >= 0");
  const auto top = static_cast<unsigned long>(n * p + 1);
  Rational r{binomial(top, static_cast<unsigned long>(n)), Integer(top)};
  r.canonicalize();
  return r;
}

FussSeries fuss_series(long p, std::size_t order) {
  if (p < 1) throw std::invalid_argument("fuss_series: p must be >= 1");
  std::vector<Rational> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) v[n] = fuss_number(p, static_cast<long>(n));
  return FussSeries{static_cast<unsigned>(p), Series(std::move(v))};
}

Series fuss_residual(const FussSeries& b) {
  const std::size_t n = b.series.order();
  const Series x_bp = fps::pow(b.series, b.p).shifted_up(1);
  return b.series - Series::constant(Rational(1), n) - x_bp;
}

Series catalan_closed_form(std::size_t order) {
  // sqrt(1 - 4x) is needed one order higher because of the division by x.
  std::vector<Rational> arg(order + 2);
  arg[0] = 1;
  arg[1] = -4;
  const Series root = fps::sqrt(Series(std::move(arg)));
  const Series numer = Series::constant(Rational(1), order + 1) - root;
  return Rational(1, 2) * numer.shifted_down(1);
}

}  // namespace umbral
