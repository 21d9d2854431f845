#include "umbral/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace umbral {

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
}

Series Series::zero(std::size_t order) { return Series(std::vector<Rational>(order + 1)); }

Series Series::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return Series(std::move(v));
}

Series Series::monomial(const Rational& c, std::size_t k, std::size_t order) {
  std::vector<Rational> v(order + 1);
  if (k <= order) v[k] = c;
  return Series(std::move(v));
}

Series Series::from_poly(const Poly& p, std::size_t order) {
  std::vector<Rational> v(order + 1);
  for (std::size_t k = 0; k <= order; ++k) v[k] = p[k];
  return Series(std::move(v));
}

Series Series::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot raise the order of a truncated series");
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

Series Series::shifted_up(std::size_t k) const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = k; i < v.size(); ++i) v[i] = coeffs_[i - k];
  return Series(std::move(v));
}

Series Series::shifted_down(std::size_t k) const {
  if (k > order()) throw std::invalid_argument("shift exceeds series order");
  for (std::size_t i = 0; i < k; ++i)
    if (coeffs_[i] != 0) throw std::domain_error("series is not divisible by the requested power of x");
  return Series(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

Series operator+(const Series& lhs, const Series& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = lhs.coeffs_[k] + rhs.coeffs_[k];
  return Series(std::move(v));
}

Series operator-(const Series& lhs, const Series& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = lhs.coeffs_[k] - rhs.coeffs_[k];
  return Series(std::move(v));
}

Series operator*(const Series& lhs, const Series& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Series(std::move(v));
}

Series operator*(const Rational& c, const Series& s) {
  std::vector<Rational> v(s.coeffs_);
  for (auto& x : v) x *= c;
  return Series(std::move(v));
}

namespace fps {

Series derivative(const Series& f) {
  if (f.order() == 0) return Series::zero(0);
  std::vector<Rational> v(f.order());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = Rational(static_cast<long>(k + 1)) * f[k + 1];
  return Series(std::move(v));
}

Series pow(const Series& f, unsigned k) {
  Series result = Series::constant(Rational(1), f.order());
  Series base = f;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

Series compose(const Series& outer, const Series& inner) {
  if (inner[0] != 0) throw std::domain_error("compose: inner series must have zero constant term");
  const std::size_t n = std::min(outer.order(), inner.order());
  Series acc = Series::constant(outer[n], n);
  const Series in = inner.truncated(n);
  for (std::size_t k = n; k-- > 0;) acc = acc * in + Series::constant(outer[k], n);
  return acc;
}

Series reverse(const Series& g) {
  if (g[0] != 0) throw std::domain_error("reverse: series must have zero constant term");
  if (g.order() < 1 || g[1] == 0) throw std::domain_error("reverse: linear coefficient must be nonzero");
  const std::size_t n = g.order();
  // h = x / g(x), known to order n - 1.
  const Series h = recip(g.shifted_down(1));
  std::vector<Rational> out(n + 1);
  Series h_pow = Series::constant(Rational(1), n - 1);
  for (std::size_t k = 1; k <= n; ++k) {
    h_pow = h_pow * h;
    out[k] = h_pow[k - 1] / Rational(static_cast<long>(k));
  }
  return Series(std::move(out));
}

Series exp(const Series& f) {
  if (f[0] != 0) throw std::domain_error("exp: series must have zero constant term");
  // e' = f' e  =>  n e_n = sum_{k=1}^{n} k f_k e_{n-k}.
  const std::size_t n = f.order();
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc(0);
    for (std::size_t k = 1; k <= m; ++k)
      if (f[k] != 0) acc += Rational(static_cast<long>(k)) * f[k] * e[m - k];
    e[m] = acc / Rational(static_cast<long>(m));
  }
  return Series(std::move(e));
}

Series sqrt(const Series& f) {
  if (f[0] != 1) throw std::domain_error("sqrt: series must have constant term 1");
  // s^2 = f  =>  2 s_n = f_n - sum_{k=1}^{n-1} s_k s_{n-k}.
  const std::size_t n = f.order();
  std::vector<Rational> s(n + 1);
  s[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = f[m];
    for (std::size_t k = 1; k < m; ++k) acc -= s[k] * s[m - k];
    s[m] = acc / 2;
  }
  return Series(std::move(s));
}

Series recip(const Series& f) {
  if (f[0] == 0) throw std::domain_error("recip: series must have nonzero constant term");
  const std::size_t n = f.order();
  const Rational inv0 = 1 / f[0];
  std::vector<Rational> r(n + 1);
  r[0] = inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc(0);
    for (std::size_t k = 1; k <= m; ++k)
      if (f[k] != 0) acc += f[k] * r[m - k];
    r[m] = -acc * inv0;
  }
  return Series(std::move(r));
}

}  // namespace fps
}  // namespace umbral
