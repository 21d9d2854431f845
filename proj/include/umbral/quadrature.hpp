#pragma once

// Double-exponential quadrature on (0, inf) and on finite intervals.
//
// Half line: u = exp((pi/2) sinh(tau)), so the map first sends (0, inf)
// to the real line by u = e^v and then spaces v double-exponentially.
// Interval: the classical tanh-sinh map. Both use the trapezoid rule in
// tau with step halving until successive estimates agree.

#include <functional>
#include <stdexcept>
#include <string>

namespace umbral {

struct QuadratureConfig {
  double tolerance = 1e-10;  // relative to the L1 norm of the integrand
  int max_levels = 12;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double l1_norm = 0.0;  // integral of |f|, the scale used for convergence
  int levels = 0;
  bool converged = false;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadResult& partial() const { return partial_; }

 private:
  QuadResult partial_;
};

using Integrand = std::function<double(double)>;

QuadResult integrate_half_line(const Integrand& f, const QuadratureConfig& cfg = {});
QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadratureConfig& cfg = {});

// Returns r unchanged when converged, otherwise throws QuadratureError.
const QuadResult& require_converged(const QuadResult& r, const std::string& what);

}  // namespace umbral
