#pragma once

// Densities on (0, inf) tied to the Carlitz and Bessel polynomials:
//   inverse Gaussian  mu_t:  t exp(-(u-t)^2/(2u)) / sqrt(2 pi u^3)
//   gamma (shape 1/2, scale 2t)  gamma_t:  exp(-u/(2t)) / sqrt(2 pi t u)
//   Bessel measure  nu_t:  exp(-(u-1)^2/(2tu)) / sqrt(2 pi t u)
// plus dilations and size-biased versions. Every density vanishes for u <= 0.

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "umbral/quadrature.hpp"

namespace umbral {

class DistSpec {
 public:
  struct InverseGaussian {
    double t;
  };
  struct GammaHalf {
    double t;
  };
  struct BesselMeasure {
    double t;
  };
  // Law of c X: density (1/c) base(u/c).
  struct Dilated {
    std::shared_ptr<const DistSpec> base;
    double factor;
  };
  // Density u base(u) / divisor; divisor is the mean of base for a probability law.
  struct SizeBiased {
    std::shared_ptr<const DistSpec> base;
    double divisor;
  };
  using Kind = std::variant<InverseGaussian, GammaHalf, BesselMeasure, Dilated, SizeBiased>;

  static DistSpec inverse_gaussian(double t);
  static DistSpec gamma_half(double t);
  static DistSpec bessel_measure(double t);
  static DistSpec dilated(DistSpec base, double factor);
  static DistSpec size_biased(DistSpec base, double divisor);

  const Kind& kind() const { return kind_; }
  std::string describe() const;

 private:
  explicit DistSpec(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

// -inf for u <= 0.
double log_density(const DistSpec& d, double u);
double density(const DistSpec& d, double u);

// int_0^inf u^n density(d, u) du. Throws QuadratureError when the
// tolerance is not met within cfg.max_levels.
QuadResult moment(const DistSpec& d, unsigned n, const QuadratureConfig& cfg = {});

// Closed forms with the principal square root:
//   mu_t:     exp(t - t sqrt(1 - 2xi))
//   gamma_t:  (1 - 2txi)^{-1/2}
//   nu_t:     exp((1 - sqrt(1 - 2txi))/t) / sqrt(1 - 2txi)
// A size-biased law needs the derivative of its base, so it cannot be
// nested inside another size-biased law.
std::complex<double> char_fun(const DistSpec& d, double x);

struct ComplexQuad {
  std::complex<double> value;
  double error_estimate;
};

// int_0^inf e^{iux} density(d, u) du by direct quadrature (real and
// imaginary parts separately). Intended for |x| <= 1.
ComplexQuad char_fun_quadrature(const DistSpec& d, double x, const QuadratureConfig& cfg = {});

/// Diagnostics shared by every numerical check.
struct CheckReport {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  double quad_error = 0.0;

  static CheckReport compare(std::complex<double> lhs, std::complex<double> rhs, double quad_error);
};

struct PointCheck {
  double at;
  CheckReport report;
};

struct PointwiseReport {
  std::vector<PointCheck> points;

  double max_abs_dev() const;
  double max_rel_dev() const;
  double max_quad_error() const;
};

// (rho_s * rho_t)(u) against rho_{s+t}(u) at each point.
PointwiseReport semigroup_check(double s, double t, const std::vector<double>& points,
                                const QuadratureConfig& cfg = {});

struct KolmogorovReport {
  // 1 - sqrt(1 - 2xi)  vs  xi + int (e^{iux} - 1 - iux) e^{-u/2} / sqrt(2 pi u^3) du
  CheckReport identity;
  // int sqrt(u) e^{-u/2} / sqrt(2 pi) du  vs  1
  CheckReport normalization;
};

KolmogorovReport kolmogorov_check(double x, const QuadratureConfig& cfg = {});

struct FactorizationReport {
  // psi_t(x) vs char_fun(gamma_t) * char_fun(D_t mu_{1/t})
  PointwiseReport char_fun;
  // nu_t(u) vs (gamma_t * D_t mu_{1/t})(u) by quadrature
  PointwiseReport density;
};

inline const std::vector<double> kDefaultFactorizationDensityPoints{0.5, 1.0, 2.0};

FactorizationReport convolution_factorization_check(
    double t, const std::vector<double>& x_points,
    const std::vector<double>& density_points = kDefaultFactorizationDensityPoints,
    const QuadratureConfig& cfg = {});

// Convolution density (a * b)(u) = int_0^u a(v) b(u - v) dv.
QuadResult convolution_density(const DistSpec& a, const DistSpec& b, double u, const QuadratureConfig& cfg = {});

// Draws from mu_t, i.e. the inverse Gaussian with mean t and shape t^2,
// by the Michael-Schucany-Haas transformation method (Amer. Statist. 30, 1976).
// Deterministic for a given seed.
std::vector<double> ig_sample(double t, std::uint64_t seed, std::size_t count);

}  // namespace umbral
