#pragma once

// Fuss numbers C(np+1, n)/(np+1) and their generating function B_p,
// which satisfies B_p(x) = 1 + x B_p(x)^p.

#include <cstddef>

#include "umbral/rational.hpp"
#include "umbral/series.hpp"

namespace umbral {

struct FussSeries {
  unsigned p;
  Series series;
};

Rational fuss_number(long p, long n);

// Built from the explicit binomial formula; the functional equation is
// left for verification.
FussSeries fuss_series(long p, std::size_t order);

// B_p - 1 - x B_p^p, truncated to the series order. Zero iff the
// functional equation holds to that order.
Series fuss_residual(const FussSeries& b);

// (1 - sqrt(1 - 4x)) / (2x) expanded to the given order.
Series catalan_closed_form(std::size_t order);

}  // namespace umbral
