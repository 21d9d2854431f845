#include "umbral/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace umbral {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Rational Poly::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly operator+(const Poly& lhs, const Poly& rhs) {
  std::vector<Rational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = lhs[k] + rhs[k];
  return Poly(std::move(out));
}

Poly operator-(const Poly& lhs, const Poly& rhs) {
  std::vector<Rational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = lhs[k] - rhs[k];
  return Poly(std::move(out));
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Poly(std::move(out));
}

Poly operator*(const Rational& c, const Poly& p) {
  std::vector<Rational> out(p.coeffs_.begin(), p.coeffs_.end());
  for (auto& x : out) x *= c;
  return Poly(std::move(out));
}

Poly diff(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = Rational(static_cast<long>(k + 1)) * p[k + 1];
  return Poly(std::move(out));
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc(0);
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly taylor_shift(const Poly& p, const Rational& s) {
  // Horner in the basis (t + s): acc <- acc * (t + s) + c_k.
  const auto c = p.coeffs();
  std::vector<Rational> acc;
  acc.reserve(c.size());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc.emplace_back(0);
    for (std::size_t k = acc.size() - 1; k > 0; --k) acc[k] = acc[k - 1] + s * acc[k];
    acc[0] = s * acc[0] + *it;
  }
  return Poly(std::move(acc));
}

Poly reflect(const Poly& p, std::size_t n) {
  if (p.degree() > static_cast<long>(n)) throw std::invalid_argument("reflect: degree exceeds n");
  std::vector<Rational> out(n + 1);
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) out[n - k] = c[k];
  return Poly(std::move(out));
}

}  // namespace umbral
