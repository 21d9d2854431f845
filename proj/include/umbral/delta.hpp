#pragma once

// Delta operators Q = g(D) acting on polynomials, and their basic
// (binomial-type) polynomial sequences.

#include <cstddef>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/series.hpp"

namespace umbral {

/// Q = sum_k g_k D^k where g_k = c_k / k!. g(0) = 0 and g_1 != 0 are
/// enforced on construction. Terms of g beyond its order are treated as
/// absent, so Q may only be applied to polynomials of degree <= order.
class DeltaOperator {
 public:
  explicit DeltaOperator(Series g);
  const Series& symbol() const { return g_; }
  std::size_t order() const { return g_.order(); }

 private:
  Series g_;
};

/// Parameters of Q = aD - bD^{p+1}.
struct AbTriple {
  Rational a;
  Rational b;
  unsigned p = 1;

  AbTriple(Rational a_, Rational b_, unsigned p_);
  // g(x) = a x - b x^{p+1}, padded or truncated to the given order.
  Series symbol(std::size_t order) const;
  DeltaOperator delta(std::size_t order) const;
};

enum class SequenceSource { ClosedForm, Generic, Egf };

struct BinomialSequence {
  std::vector<Poly> polys;  // polys[n] = w_n(t)
  SequenceSource source = SequenceSource::Generic;

  std::size_t size() const { return polys.size(); }
  const Poly& operator[](std::size_t n) const { return polys.at(n); }
};

const char* to_string(SequenceSource s);

Poly apply_delta(const DeltaOperator& q, const Poly& p);

// Triangular solve of Q w_n = n w_{n-1}, w_n(0) = 0, highest degree first.
// Requires q.order() >= nmax.
BinomialSequence basic_sequence_generic(const DeltaOperator& q, std::size_t nmax);

// Closed form for aD - bD^{p+1}:
//   w_n(t) = sum_{j=0}^{floor((n-1)/p)} (n+j-1)! b^j / (j! (n-jp-1)! a^{n+j}) t^{n-jp}.
BinomialSequence basic_sequence_closed(const AbTriple& abp, std::size_t nmax);

// Expansion of exp(t f(x)) = sum_n w_n(t) x^n / n!, i.e.
// w_n(t) = sum_k t^k n! [x^n] f^k / k!. Requires f(0) = 0; nmax <= f.order().
BinomialSequence basic_sequence_egf(const Series& f, std::size_t nmax);

// f(x) = (x/a) B_{p+1}(b x^p / a^{p+1}), the compositional inverse of ax - bx^{p+1}.
Series f_series(const AbTriple& abp, std::size_t order = kDefaultOrder);

// w_n(s+t) == sum_k C(n,k) w_k(s) w_{n-k}(t) on the grid s, t in {0..n}.
// Both sides have degree <= n in each variable, so the grid check is exact.
bool binomial_identity_check(const BinomialSequence& seq, std::size_t n);

}  // namespace umbral
