#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Dense univariate polynomial over the rationals. coeffs()[k] is the
/// coefficient of t^k; trailing zeros are never stored, so the zero
/// polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  // Coefficient of t^k, zero beyond the degree.
  Rational operator[](std::size_t k) const;

  friend Poly operator+(const Poly& lhs, const Poly& rhs);
  friend Poly operator-(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly diff(const Poly& p);

// Exact Horner evaluation.
Rational eval(const Poly& p, const Rational& x);

// q(t) = p(t + s).
Poly taylor_shift(const Poly& p, const Rational& s);

// t^n * p(1/t) for n >= deg p.
Poly reflect(const Poly& p, std::size_t n);

}  // namespace umbral
