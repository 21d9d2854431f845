#include "umbral/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace umbral {

void QuadratureConfig::validate() const {
  if (!(tolerance > std::numeric_limits<double>::epsilon()))
    throw std::invalid_argument("quadrature tolerance must exceed machine epsilon");
  if (max_levels < 1) throw std::invalid_argument("quadrature needs at least one refinement level");
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kInitialStep = 0.5;

// Node and weight for the abscissa tau.
struct Node {
  double x;
  double w;
};

// Trapezoid sums over tau in [-tau_max, tau_max], halving the step each
// level and only evaluating the new (odd) nodes.
template <class Map>
QuadResult de_driver(const Integrand& f, const QuadratureConfig& cfg, double tau_max, Map map) {
  cfg.validate();
  double sum = 0.0;
  double abs_sum = 0.0;
  auto accumulate = [&](double tau) {
    const Node n = map(tau);
    if (n.w == 0.0 || !std::isfinite(n.x)) return;
    const double fx = f(n.x);
    if (fx == 0.0) return;
    const double term = fx * n.w;
    sum += term;
    abs_sum += std::abs(term);
  };

  double h = kInitialStep;
  const long kmax = static_cast<long>(std::floor(tau_max / h));
  for (long k = -kmax; k <= kmax; ++k) accumulate(static_cast<double>(k) * h);

  QuadResult r;
  r.value = sum * h;
  r.l1_norm = abs_sum * h;
  r.error_estimate = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= cfg.max_levels; ++level) {
    h /= 2;
    const long kodd = static_cast<long>(std::floor(tau_max / h));
    for (long k = -kodd; k <= kodd; ++k)
      if (k % 2 != 0) accumulate(static_cast<double>(k) * h);
    const double value = sum * h;
    r.error_estimate = std::abs(value - r.value);
    r.value = value;
    r.l1_norm = abs_sum * h;
    r.levels = level;
    if (!std::isfinite(value)) break;
    if (level >= 3 && r.error_estimate <= cfg.tolerance * r.l1_norm) {
      r.converged = true;
      break;
    }
    if (r.l1_norm == 0.0 && level >= 3) {
      r.converged = true;
      break;
    }
  }
  return r;
}

}  // namespace

QuadResult integrate_half_line(const Integrand& f, const QuadratureConfig& cfg) {
  // Keep exp(+-(pi/2) sinh tau) inside the double range.
  const double tau_max = std::asinh(700.0 / kHalfPi);
  return de_driver(f, cfg, tau_max, [](double tau) {
    const double s = kHalfPi * std::sinh(tau);
    const double x = std::exp(s);
    return Node{x, x * kHalfPi * std::cosh(tau)};
  });
}

QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  if (!(b > a)) {
    if (a == b) return QuadResult{0.0, 0.0, 0.0, 0, true};
    QuadResult r = integrate_interval(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }
  const double len = b - a;
  // Beyond this the node coincides with an endpoint in double precision.
  const double tau_max = std::asinh(2.0 * 355.0 / std::numbers::pi);
  return de_driver(f, cfg, tau_max, [a, b, len](double tau) {
    const double s = kHalfPi * std::sinh(tau);
    const double as = std::abs(s);
    // Distance from the nearer endpoint, computed without cancellation.
    const double d = len / (1.0 + std::exp(2.0 * as));
    const double x = s >= 0 ? b - d : a + d;
    const double ch = std::cosh(as);
    const double w = 0.5 * len * kHalfPi * std::cosh(tau) / (ch * ch);
    if (x <= a || x >= b) return Node{x, 0.0};
    return Node{x, w};
  });
}

const QuadResult& require_converged(const QuadResult& r, const std::string& what) {
  if (!r.converged) {
    std::ostringstream msg;
    msg << what << ": quadrature did not converge after " << r.levels << " levels (error estimate "
        << r.error_estimate << ", value " << r.value << ")";
    throw QuadratureError(msg.str(), r);
  }
  return r;
}

}  // namespace umbral
