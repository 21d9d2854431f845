#include <doctest.h>

#include <cmath>
#include <numbers>

#include "umbral/quadrature.hpp"

using namespace umbral;

TEST_CASE("half line") {
  const QuadResult e = integrate_half_line([](double u) { return std::exp(-u); });
  CHECK(e.converged);
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-13));

  // Algebraic endpoint singularity and slow algebraic decay.
  const QuadResult g = integrate_half_line([](double u) { return std::exp(-u) / std::sqrt(u); });
  CHECK(g.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
  const QuadResult c = integrate_half_line([](double u) { return 1.0 / (1.0 + u * u); });
  CHECK(c.value == doctest::Approx(std::numbers::pi / 2).epsilon(1e-11));
}

TEST_CASE("finite interval") {
  CHECK(integrate_interval([](double x) { return 1 / std::sqrt(x); }, 0, 1).value == doctest::Approx(2).epsilon(1e-12));
  CHECK(integrate_interval([](double x) { return std::log(x); }, 0, 1).value == doctest::Approx(-1).epsilon(1e-12));
  CHECK(integrate_interval([](double x) { return x * x; }, 1, 3).value == doctest::Approx(26.0 / 3).epsilon(1e-13));
  CHECK(integrate_interval([](double x) { return x; }, 3, 1).value == doctest::Approx(-4).epsilon(1e-13));
  CHECK(integrate_interval([](double) { return 1.0; }, 2, 2).value == 0);
}

TEST_CASE("non-convergence is reported") {
  QuadratureConfig cfg;
  cfg.max_levels = 2;
  cfg.tolerance = 1e-15;
  const QuadResult r = integrate_half_line([](double u) { return std::sin(40 * u) * std::exp(-u / 50); }, cfg);
  CHECK_FALSE(r.converged);
  CHECK_THROWS_AS(require_converged(r, "oscillatory"), QuadratureError);
  try {
    require_converged(r, "oscillatory");
  } catch (const QuadratureError& e) {
    CHECK(e.partial().levels == 2);
  }
}

TEST_CASE("config validation") {
  QuadratureConfig cfg;
  cfg.tolerance = 1e-17;
  CHECK_THROWS_AS(integrate_half_line([](double) { return 0.0; }, cfg), std::invalid_argument);
  cfg.tolerance = 1e-10;
  cfg.max_levels = 0;
  CHECK_THROWS_AS(integrate_interval([](double) { return 0.0; }, 0, 1, cfg), std::invalid_argument);
}
