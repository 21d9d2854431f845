#include "umbral/bessel_k.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace umbral {

double bessel_k_half(int m, double z) {
  if (!(z > 0)) throw std::domain_error("bessel_k_half: z must be positive");
  // K_{m+1/2} = K_{-m-1/2} = K_{(-m-1)+1/2}
  const int k = m >= 0 ? m : -m - 1;
  double prev = std::sqrt(std::numbers::pi / (2 * z)) * std::exp(-z);  // K_{1/2}
  if (k == 0) return prev;
  double cur = prev * (1 + 1 / z);  // K_{3/2}
  for (int j = 1; j < k; ++j) {
    const double nu = j + 0.5;
    const double next = prev + (2 * nu / z) * cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

QuadResult bessel_k_quadrature(double nu, double z, const QuadratureConfig& cfg) {
  if (!(z > 0)) throw std::domain_error("bessel_k_quadrature: z must be positive");
  const double c = z * z / 4;
  QuadResult r = integrate_half_line(
      [nu, c](double v) { return std::exp(-v - c / v - (nu + 1) * std::log(v)); }, cfg);
  const double scale = 0.5 * std::pow(z / 2, nu);
  r.value *= scale;
  r.error_estimate *= scale;
  r.l1_norm *= scale;
  return r;
}

}  // namespace umbral
