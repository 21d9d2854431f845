#include "umbral/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace umbral {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi)
constexpr std::complex<double> kI{0.0, 1.0};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be a positive finite real");
}

// v * exp(log_w) without forming exp(log_w) on its own; the Levy density
// overflows near u = 0 where its partner vanishes.
double times_exp(double v, double log_w) {
  if (v == 0.0) return 0.0;
  return std::copysign(std::exp(std::log(std::abs(v)) + log_w), v);
}

bool contains_size_biased(const DistSpec& d) {
  return std::visit(overloaded{
                        [](const DistSpec::Dilated& k) { return contains_size_biased(*k.base); },
                        [](const DistSpec::SizeBiased&) { return true; },
                        [](const auto&) { return false; },
                    },
                    d.kind());
}

// Densities with a u^{-1/2} endpoint get the extra substitution u = w^2.
bool has_root_singularity(const DistSpec& d) {
  return std::visit(overloaded{
                        [](const DistSpec::GammaHalf&) { return true; },
                        [](const DistSpec::Dilated& k) { return has_root_singularity(*k.base); },
                        [](const DistSpec::SizeBiased& k) { return has_root_singularity(*k.base); },
                        [](const auto&) { return false; },
                    },
                    d.kind());
}

// int_0^inf g(u) density(d, u) du with the substitution policy above.
// g receives u and log u.
template <class G>
QuadResult integrate_against(const DistSpec& d, G g, const QuadratureConfig& cfg) {
  if (has_root_singularity(d)) {
    return integrate_half_line(
        [&](double w) {
          const double u = w * w;
          const double ld = log_density(d, u);
          if (ld == -std::numeric_limits<double>::infinity()) return 0.0;
          return 2 * w * g(u, 2 * std::log(w), ld);
        },
        cfg);
  }
  return integrate_half_line(
      [&](double u) {
        const double ld = log_density(d, u);
        if (ld == -std::numeric_limits<double>::infinity()) return 0.0;
        return g(u, std::log(u), ld);
      },
      cfg);
}

// Characteristic function and its first derivative.
struct Jet {
  std::complex<double> value;
  std::complex<double> deriv;
};

Jet char_jet(const DistSpec& d, double x) {
  return std::visit(
      overloaded{
          [x](const DistSpec::InverseGaussian& k) {
            const std::complex<double> r = std::sqrt(1.0 - 2.0 * x * kI);
            const std::complex<double> phi = std::exp(k.t - k.t * r);
            return Jet{phi, phi * k.t * kI / r};
          },
          [x](const DistSpec::GammaHalf& k) {
            const std::complex<double> q = 1.0 - 2.0 * k.t * x * kI;
            const std::complex<double> phi = 1.0 / std::sqrt(q);
            return Jet{phi, phi * k.t * kI / q};
          },
          [x](const DistSpec::BesselMeasure& k) {
            const std::complex<double> r = std::sqrt(1.0 - 2.0 * k.t * x * kI);
            const std::complex<double> phi = std::exp((1.0 - r) / k.t) / r;
            return Jet{phi, phi * (kI / r + k.t * kI / (r * r))};
          },
          [x](const DistSpec::Dilated& k) {
            const Jet b = char_jet(*k.base, k.factor * x);
            return Jet{b.value, k.factor * b.deriv};
          },
          [x](const DistSpec::SizeBiased& k) {
            const Jet b = char_jet(*k.base, x);
            return Jet{b.deriv / (kI * k.divisor), std::complex<double>{std::numeric_limits<double>::quiet_NaN(), 0.0}};
          },
      },
      d.kind());
}

}  // namespace

DistSpec DistSpec::inverse_gaussian(double t) {
  require_positive(t, "inverse Gaussian parameter t");
  return DistSpec(InverseGaussian{t});
}

DistSpec DistSpec::gamma_half(double t) {
  require_positive(t, "gamma parameter t");
  return DistSpec(GammaHalf{t});
}

DistSpec DistSpec::bessel_measure(double t) {
  require_positive(t, "Bessel measure parameter t");
  return DistSpec(BesselMeasure{t});
}

DistSpec DistSpec::dilated(DistSpec base, double factor) {
  require_positive(factor, "dilation factor");
  return DistSpec(Dilated{std::make_shared<const DistSpec>(std::move(base)), factor});
}

DistSpec DistSpec::size_biased(DistSpec base, double divisor) {
  require_positive(divisor, "size-bias divisor");
  if (contains_size_biased(base)) throw std::invalid_argument("nested size-biased laws are not supported");
  return DistSpec(SizeBiased{std::make_shared<const DistSpec>(std::move(base)), divisor});
}

std::string DistSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const InverseGaussian& k) { os << "InverseGaussian(" << k.t << ")"; },
                 [&](const GammaHalf& k) { os << "GammaHalf(" << k.t << ")"; },
                 [&](const BesselMeasure& k) { os << "BesselMeasure(" << k.t << ")"; },
                 [&](const Dilated& k) { os << "Dilated(" << k.base->describe() << ", " << k.factor << ")"; },
                 [&](const SizeBiased& k) { os << "SizeBiased(" << k.base->describe() << ", " << k.divisor << ")"; },
             },
             kind_);
  return os.str();
}

double log_density(const DistSpec& d, double u) {
  if (!(u > 0)) return -std::numeric_limits<double>::infinity();
  return std::visit(
      overloaded{
          [u](const DistSpec::InverseGaussian& k) {
            const double diff = u - k.t;
            return std::log(k.t) - diff * diff / (2 * u) - 0.5 * kLog2Pi - 1.5 * std::log(u);
          },
          [u](const DistSpec::GammaHalf& k) {
            return -u / (2 * k.t) - 0.5 * (kLog2Pi + std::log(k.t) + std::log(u));
          },
          [u](const DistSpec::BesselMeasure& k) {
            const double diff = u - 1;
            return -diff * diff / (2 * k.t * u) - 0.5 * (kLog2Pi + std::log(k.t) + std::log(u));
          },
          [u](const DistSpec::Dilated& k) { return log_density(*k.base, u / k.factor) - std::log(k.factor); },
          [u](const DistSpec::SizeBiased& k) {
            return std::log(u) + log_density(*k.base, u) - std::log(k.divisor);
          },
      },
      d.kind());
}

double density(const DistSpec& d, double u) { return std::exp(log_density(d, u)); }

QuadResult moment(const DistSpec& d, unsigned n, const QuadratureConfig& cfg) {
  const double dn = n;
  QuadResult r = integrate_against(
      d, [dn](double, double log_u, double ld) { return std::exp(dn * log_u + ld); }, cfg);
  return require_converged(r, "moment " + std::to_string(n) + " of " + d.describe());
}

std::complex<double> char_fun(const DistSpec& d, double x) { return char_jet(d, x).value; }

ComplexQuad char_fun_quadrature(const DistSpec& d, double x, const QuadratureConfig& cfg) {
  const QuadResult re = require_converged(
      integrate_against(d, [x](double u, double, double ld) { return std::cos(u * x) * std::exp(ld); }, cfg),
      "real part of characteristic function of " + d.describe());
  const QuadResult im = require_converged(
      integrate_against(d, [x](double u, double, double ld) { return std::sin(u * x) * std::exp(ld); }, cfg),
      "imaginary part of characteristic function of " + d.describe());
  return {{re.value, im.value}, re.error_estimate + im.error_estimate};
}

CheckReport CheckReport::compare(std::complex<double> lhs, std::complex<double> rhs, double quad_error) {
  CheckReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_dev = std::abs(lhs - rhs);
  const double scale = std::abs(rhs);
  if (scale > 0)
    r.rel_dev = r.abs_dev / scale;
  else
    r.rel_dev = r.abs_dev == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  r.quad_error = quad_error;
  return r;
}

double PointwiseReport::max_abs_dev() const {
  double m = 0;
  for (const auto& p : points) m = std::max(m, p.report.abs_dev);
  return m;
}

double PointwiseReport::max_rel_dev() const {
  double m = 0;
  for (const auto& p : points) m = std::max(m, p.report.rel_dev);
  return m;
}

double PointwiseReport::max_quad_error() const {
  double m = 0;
  for (const auto& p : points) m = std::max(m, p.report.quad_error);
  return m;
}

QuadResult convolution_density(const DistSpec& a, const DistSpec& b, double u, const QuadratureConfig& cfg) {
  if (!(u > 0)) return QuadResult{0.0, 0.0, 0.0, 0, true};
  QuadResult r = integrate_interval(
      [&](double v) {
        const double l = log_density(a, v) + log_density(b, u - v);
        return l == -std::numeric_limits<double>::infinity() ? 0.0 : std::exp(l);
      },
      0.0, u, cfg);
  return require_converged(r, "convolution of " + a.describe() + " and " + b.describe());
}

PointwiseReport semigroup_check(double s, double t, const std::vector<double>& points, const QuadratureConfig& cfg) {
  const DistSpec mu_s = DistSpec::inverse_gaussian(s);
  const DistSpec mu_t = DistSpec::inverse_gaussian(t);
  const DistSpec mu_st = DistSpec::inverse_gaussian(s + t);
  PointwiseReport report;
  for (double u : points) {
    const QuadResult conv = convolution_density(mu_s, mu_t, u, cfg);
    report.points.push_back({u, CheckReport::compare(conv.value, density(mu_st, u), conv.error_estimate)});
  }
  return report;
}

KolmogorovReport kolmogorov_check(double x, const QuadratureConfig& cfg) {
  // Levy density e^{-u/2} / sqrt(2 pi u^3), in log form.
  auto log_levy = [](double u) { return -u / 2 - 0.5 * kLog2Pi - 1.5 * std::log(u); };

  const QuadResult re = require_converged(
      integrate_half_line(
          [&](double u) {
            const double s = std::sin(u * x / 2);
            return -2 * times_exp(s * s, log_levy(u));
          },
          cfg),
      "Kolmogorov integral, real part");
  const QuadResult im = require_converged(
      integrate_half_line(
          [&](double u) {
            const double z = u * x;
            // sin z - z without cancellation for small z
            const double z2 = z * z;
            const double odd = std::abs(z) < 1e-2 ? z * z2 * (-1.0 / 6 + z2 * (1.0 / 120 - z2 / 5040)) : std::sin(z) - z;
            return times_exp(odd, log_levy(u));
          },
          cfg),
      "Kolmogorov integral, imaginary part");

  KolmogorovReport out;
  const std::complex<double> lhs = 1.0 - std::sqrt(1.0 - 2.0 * x * kI);
  const std::complex<double> rhs = x * kI + std::complex<double>{re.value, im.value};
  out.identity = CheckReport::compare(lhs, rhs, re.error_estimate + im.error_estimate);

  const QuadResult norm = require_converged(
      integrate_half_line([](double u) { return std::exp(0.5 * std::log(u) - u / 2 - 0.5 * kLog2Pi); }, cfg),
      "Kolmogorov measure normalization");
  out.normalization = CheckReport::compare(norm.value, 1.0, norm.error_estimate);
  return out;
}

FactorizationReport convolution_factorization_check(double t, const std::vector<double>& x_points,
                                                    const std::vector<double>& density_points,
                                                    const QuadratureConfig& cfg) {
  const DistSpec nu = DistSpec::bessel_measure(t);
  const DistSpec gamma = DistSpec::gamma_half(t);
  const DistSpec dilated_ig = DistSpec::dilated(DistSpec::inverse_gaussian(1 / t), t);

  FactorizationReport report;
  for (double x : x_points)
    report.char_fun.points.push_back(
        {x, CheckReport::compare(char_fun(nu, x), char_fun(gamma, x) * char_fun(dilated_ig, x), 0.0)});
  for (double u : density_points) {
    const QuadResult conv = convolution_density(gamma, dilated_ig, u, cfg);
    report.density.points.push_back({u, CheckReport::compare(density(nu, u), conv.value, conv.error_estimate)});
  }
  return report;
}

std::vector<double> ig_sample(double t, std::uint64_t seed, std::size_t count) {
  require_positive(t, "sampler parameter t");
  if (count < 1) throw std::invalid_argument("ig_sample: count must be >= 1");
  // mu_t is the inverse Gaussian with mean m = t and shape l = t^2.
  const double m = t;
  const double l = t * t;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double n = normal(rng);
    const double y = n * n;
    // Smaller root of the chi-square transform, written without cancellation.
    const double x = m - 2 * m * m * y / (m * y + std::sqrt(4 * m * l * y + m * m * y * y));
    out.push_back(uniform(rng) <= m / (m + x) ? x : m * m / x);
  }
  return out;
}

}  // namespace umbral
