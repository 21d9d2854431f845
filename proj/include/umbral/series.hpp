#pragma once

// Truncated formal power series over the rationals.

#include <cstddef>
#include <span>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

inline constexpr std::size_t kDefaultOrder = 32;

/// Coefficients of x^0 .. x^order. Binary arithmetic truncates to the
/// smaller operand order.
class Series {
 public:
  // coeffs must be non-empty; order = coeffs.size() - 1.
  explicit Series(std::vector<Rational> coeffs);

  static Series zero(std::size_t order);
  static Series constant(const Rational& c, std::size_t order);
  static Series monomial(const Rational& c, std::size_t k, std::size_t order);
  static Series identity(std::size_t order) { return monomial(Rational(1), 1, order); }
  // Terms of p beyond order are dropped.
  static Series from_poly(const Poly& p, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }

  Series truncated(std::size_t order) const;
  // Multiply by x^k; the order is preserved, top k coefficients fall off.
  Series shifted_up(std::size_t k) const;
  // Divide by x^k; requires the first k coefficients to vanish. Order drops by k.
  Series shifted_down(std::size_t k) const;

  friend Series operator+(const Series& lhs, const Series& rhs);
  friend Series operator-(const Series& lhs, const Series& rhs);
  friend Series operator*(const Series& lhs, const Series& rhs);
  friend Series operator*(const Rational& c, const Series& s);
  friend bool operator==(const Series& lhs, const Series& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

namespace fps {

Series derivative(const Series& f);
Series pow(const Series& f, unsigned k);

// outer(inner(x)); inner must have zero constant term. Horner over series.
Series compose(const Series& outer, const Series& inner);

// Compositional inverse by Lagrange inversion: [x^n] f = (1/n) [x^{n-1}] (x/g)^n.
// Requires g(0) = 0 and g'(0) != 0.
Series reverse(const Series& g);

// Requires f(0) = 0.
Series exp(const Series& f);

// Requires f(0) = 1.
Series sqrt(const Series& f);

// Requires f(0) != 0.
Series recip(const Series& f);

}  // namespace fps
}  // namespace umbral
