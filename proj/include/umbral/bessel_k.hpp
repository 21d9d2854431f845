#pragma once

#include "umbral/quadrature.hpp"

namespace umbral {

/// K_{m+1/2}(z) for integer m and z > 0.
///
/// Starts from K_{1/2}(z) = sqrt(pi/(2z)) e^{-z} and K_{3/2} = K_{1/2} (1 + 1/z),
/// then runs K_{v+1} = K_{v-1} + (2v/z) K_v upward, which is stable for K.
/// Negative orders use K_{-v} = K_v.
double bessel_k_half(int m, double z);

/// K_nu(z) for any real nu from
///   K_nu(z) = (1/2) (z/2)^nu  int_0^inf exp(-v - z^2/(4v)) v^{-nu-1} dv.
/// Used as an independent oracle for bessel_k_half.
QuadResult bessel_k_quadrature(double nu, double z, const QuadratureConfig& cfg = {});

}  // namespace umbral
