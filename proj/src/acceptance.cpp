#include "umbral/acceptance.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "umbral/bessel_k.hpp"
#include "umbral/bessel_poly.hpp"
#include "umbral/distributions.hpp"
#include "umbral/fuss.hpp"
#include "umbral/sequences.hpp"
#include "umbral/series.hpp"

namespace umbral::acceptance {

std::vector<AbTriple> seeded_triples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_int_distribution<unsigned> pdist(1, 4);
  std::vector<AbTriple> out;
  out.reserve(count);
  while (out.size() < count) {
    const long an = num(rng);
    const long ad = den(rng);
    const long bn = num(rng);
    const long bd = den(rng);
    const unsigned p = pdist(rng);
    if (an == 0) continue;
    Rational a(an, ad);
    Rational b(bn, bd);
    a.canonicalize();
    b.canonicalize();
    out.emplace_back(a, b, p);
  }
  return out;
}

namespace {

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

std::string triple_str(const AbTriple& t) {
  return "(" + to_string(t.a) + ", " + to_string(t.b) + ", " + std::to_string(t.p) + ")";
}

CriterionResult result(int number, bool passed, std::string detail) {
  return {number, "", passed, std::move(detail)};
}

// 1
CriterionResult theorem1_identity() {
  constexpr std::size_t kN = 25;
  std::size_t checks = 0;
  for (const AbTriple& abp : seeded_triples(20)) {
    const DeltaOperator q = abp.delta(kN);
    const BinomialSequence w = basic_sequence_closed(abp, kN);
    if (!apply_delta(q, w[0]).is_zero()) return result(1, false, "Q w_0 != 0 for " + triple_str(abp));
    for (std::size_t n = 1; n <= kN; ++n, ++checks)
      if (apply_delta(q, w[n]) != Rational(static_cast<long>(n)) * w[n - 1])
        return result(1, false, "Q w_n != n w_{n-1} at n=" + std::to_string(n) + " for " + triple_str(abp));
  }
  return result(1, true, std::to_string(checks) + " exact identities, 20 triples, n<=25");
}

// 2
CriterionResult oracle_equivalence() {
  constexpr std::size_t kN = 25;
  for (const AbTriple& abp : seeded_triples(20)) {
    const BinomialSequence closed = basic_sequence_closed(abp, kN);
    const BinomialSequence generic = basic_sequence_generic(abp.delta(kN), kN);
    for (std::size_t n = 0; n <= kN; ++n)
      if (closed[n] != generic[n])
        return result(2, false, "closed != generic at n=" + std::to_string(n) + " for " + triple_str(abp));
  }
  return result(2, true, "20 triples, n<=25, coefficient-exact");
}

// 3
CriterionResult binomial_type() {
  constexpr std::size_t kN = 20;
  for (const AbTriple& abp : seeded_triples(5)) {
    const BinomialSequence w = basic_sequence_closed(abp, kN);
    for (std::size_t n = 0; n <= kN; ++n)
      if (!binomial_identity_check(w, n))
        return result(3, false, "grid check failed at n=" + std::to_string(n) + " for " + triple_str(abp));
  }
  return result(3, true, "5 triples, n<=20, exact grid evaluation");
}

// 4
CriterionResult corollary2() {
  constexpr std::size_t kOrder = 30;
  for (const AbTriple& abp : seeded_triples(10)) {
    if (f_series(abp, kOrder) != fps::reverse(abp.symbol(kOrder)))
      return result(4, false, "f_series != reverse(g) for " + triple_str(abp));
  }
  const Series f = f_series(carlitz_triple(), 15);
  Integer dfact(1);  // (2n-3)!!
  for (std::size_t n = 1; n <= 15; ++n) {
    if (n >= 3) dfact *= static_cast<unsigned long>(2 * n - 3);
    const Rational expected{dfact, factorial(n)};
    Rational e = expected;
    e.canonicalize();
    if (f[n] != e) return result(4, false, "(2n-3)!!/n! mismatch at n=" + std::to_string(n));
  }
  return result(4, true, "10 triples to order 30; (2n-3)!!/n! for n<=15");
}

// 5
CriterionResult fuss_equation() {
  constexpr std::size_t kOrder = 40;
  for (long p = 1; p <= 6; ++p)
    if (fuss_residual(fuss_series(p, kOrder)) != Series::zero(kOrder))
      return result(5, false, "nonzero residual for p=" + std::to_string(p));
  if (fuss_series(2, kOrder).series != catalan_closed_form(kOrder))
    return result(5, false, "B_2 differs from (1 - sqrt(1 - 4x))/(2x)");
  return result(5, true, "p<=6 residual zero to order 40; B_2 closed form to order 40");
}

// 6
CriterionResult bessel_relation_and_egf() {
  if (!w_bessel_relation_check(25)) return result(6, false, "w_n != t^n y_{n-1}(1/t) for some n<=25");
  for (const Rational& t0 : {Rational(1), Rational(2), Rational(1, 2), Rational(2, 3), Rational(-1)})
    if (!bessel_egf_check(t0, 12)) return result(6, false, "EGF identity fails at t0=" + to_string(t0));
  return result(6, true, "relation n<=25; EGF order 12 at t0 in {1, 2, 1/2, 2/3, -1}");
}

// 7
CriterionResult moment_theorems() {
  constexpr double kTol = 1e-8;
  constexpr std::size_t kN = 8;
  const BinomialSequence w = carlitz_w(kN);
  const BesselPolySeq y = bessel_poly(kN);
  double worst = 0;
  for (const Rational& t : {Rational(1, 2), Rational(1), Rational(2)}) {
    const DistSpec mu = DistSpec::inverse_gaussian(t.get_d());
    for (std::size_t n = 0; n <= kN; ++n) {
      const double exact = eval(w[n], t).get_d();
      const double rel = std::abs(moment(mu, static_cast<unsigned>(n)).value - exact) / exact;
      worst = std::max(worst, rel);
      if (!(rel < kTol))
        return result(7, false, "mu_t moment n=" + std::to_string(n) + " t=" + to_string(t) + " rel " + sci(rel));
    }
  }
  for (long t : {1L, 2L, 3L, 4L}) {
    const DistSpec nu = DistSpec::bessel_measure(static_cast<double>(t));
    for (std::size_t n = 0; n <= kN; ++n) {
      const double exact = eval(y[n], Rational(t)).get_d();
      const double rel = std::abs(moment(nu, static_cast<unsigned>(n)).value - exact) / exact;
      worst = std::max(worst, rel);
      if (!(rel < kTol))
        return result(7, false, "nu_t moment n=" + std::to_string(n) + " t=" + std::to_string(t) + " rel " + sci(rel));
    }
  }
  return result(7, true, "max rel dev " + sci(worst) + " < 1e-8");
}

// 8
CriterionResult semigroup_and_factorization() {
  const std::vector<double> points{0.5, 1.0, 2.0, 4.0};
  double worst_semigroup = 0;
  for (auto [s, t] : {std::pair{0.5, 0.5}, std::pair{1.0, 2.0}}) {
    const double dev = semigroup_check(s, t, points).max_abs_dev();
    worst_semigroup = std::max(worst_semigroup, dev);
    if (!(dev < 1e-7)) return result(8, false, "semigroup deviation " + sci(dev));
  }
  const std::vector<double> xs{-1.0, -0.3, 0.2, 0.7, 1.5};
  double worst_cf = 0;
  double worst_density = 0;
  for (double t : {0.5, 1.0, 2.0}) {
    const FactorizationReport f = convolution_factorization_check(t, xs);
    worst_cf = std::max(worst_cf, f.char_fun.max_abs_dev());
    worst_density = std::max(worst_density, f.density.max_abs_dev());
  }
  if (!(worst_cf < 1e-12)) return result(8, false, "psi_t factorization deviation " + sci(worst_cf));
  if (!(worst_density < 1e-7)) return result(8, false, "nu_t density convolution deviation " + sci(worst_density));
  double worst_kolmogorov = 0;
  for (double x : {0.1, 0.3, 0.7}) {
    const KolmogorovReport k = kolmogorov_check(x);
    worst_kolmogorov = std::max({worst_kolmogorov, k.identity.abs_dev, k.normalization.abs_dev});
  }
  if (!(worst_kolmogorov < 1e-8)) return result(8, false, "Kolmogorov deviation " + sci(worst_kolmogorov));
  return result(8, true,
                "semigroup " + sci(worst_semigroup) + ", psi_t " + sci(worst_cf) + ", nu_t density " +
                    sci(worst_density) + ", Kolmogorov " + sci(worst_kolmogorov));
}

// 9
CriterionResult bessel_k() {
  double worst_rec = 0;
  for (int m = -11; m <= 10; ++m) {
    for (double z : {0.5, 1.0, 2.0, 5.0}) {
      const double rec = bessel_k_half(m, z);
      const QuadResult q = require_converged(bessel_k_quadrature(m + 0.5, z), "K oracle");
      const double rel = std::abs(rec - q.value) / std::abs(q.value);
      worst_rec = std::max(worst_rec, rel);
      if (!(rel < 1e-10))
        return result(9, false, "K_{" + std::to_string(m) + "+1/2}(" + sci(z) + ") rel " + sci(rel));
    }
  }
  constexpr std::size_t kN = 8;
  const BinomialSequence w = carlitz_w(kN);
  const BesselPolySeq y = bessel_poly(kN);
  double worst_closed = 0;
  for (const Rational& tr : {Rational(1, 2), Rational(1), Rational(2)}) {
    const double t = tr.get_d();
    for (std::size_t n = 0; n <= kN; ++n) {
      const int in = static_cast<int>(n);
      // t e^t 2^n (t/2)^{n-1/2} K_{1/2-n}(t) / sqrt(pi)
      const double w_k = t * std::exp(t) * std::ldexp(1.0, in) * std::pow(t / 2, in - 0.5) *
                         bessel_k_half(-in, t) / std::sqrt(std::numbers::pi);
      // e^{1/t} sqrt(2/(pi t)) K_{-n-1/2}(1/t)
      const double y_k = std::exp(1 / t) * std::sqrt(2 / (std::numbers::pi * t)) * bessel_k_half(-in - 1, 1 / t);
      const double w_exact = eval(w[n], tr).get_d();
      const double y_exact = eval(y[n], tr).get_d();
      const double rel = std::max(std::abs(w_k - w_exact) / w_exact, std::abs(y_k - y_exact) / y_exact);
      worst_closed = std::max(worst_closed, rel);
      if (!(rel < 1e-9))
        return result(9, false, "K closed form n=" + std::to_string(n) + " t=" + to_string(tr) + " rel " + sci(rel));
    }
  }
  return result(9, true, "recurrence vs quadrature " + sci(worst_rec) + "; closed forms " + sci(worst_closed));
}

// 10
CriterionResult sequences() {
  double worst = 0;
  for (const SequenceSpec& s : sequence_catalog()) {
    if (generate(s.id, 12, Construction::ClosedForm) != generate(s.id, 12, Construction::Generic))
      return result(10, false, s.id + ": closed form and generic solve disagree");
    const double dev = crosscheck(s.id, 9).max_rel_dev();
    worst = std::max(worst, dev);
    if (!(dev < 1e-8)) return result(10, false, s.id + ": moment crosscheck rel " + sci(dev));
  }
  return result(10, true, "8 sequences integral and two-way equal for 12 terms; crosscheck " + sci(worst));
}

// 11
CriterionResult sampler() {
  constexpr std::size_t kCount = 1'000'000;
  constexpr std::uint64_t kSeed = 20251019;
  const std::vector<double> draws = ig_sample(1.0, kSeed, kCount);
  double m1 = 0;
  double m2 = 0;
  for (double x : draws) {
    m1 += x;
    m2 += x * x;
  }
  m1 /= kCount;
  m2 /= kCount;
  // Exact moments of mu_1 from w_n(1): 1, 2, 7, 37.
  const BinomialSequence w = carlitz_w(4);
  const auto at1 = [&](std::size_t n) { return eval(w[n], Rational(1)).get_d(); };
  const double se1 = std::sqrt((at1(2) - at1(1) * at1(1)) / kCount);
  const double se2 = std::sqrt((at1(4) - at1(2) * at1(2)) / kCount);
  const double z1 = std::abs(m1 - at1(1)) / se1;
  const double z2 = std::abs(m2 - at1(2)) / se2;
  std::ostringstream detail;
  detail << std::setprecision(3) << "mean z=" << z1 << ", second moment z=" << z2 << " (limit 4)";
  return result(11, z1 < 4 && z2 < 4, detail.str());
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "Theorem-1 identity Q w_n = n w_{n-1}", theorem1_identity},
      {2, "closed form equals generic triangular solve", oracle_equivalence},
      {3, "binomial type on exact grids", binomial_type},
      {4, "f series equals compositional reverse", corollary2},
      {5, "Fuss functional equation and Catalan closed form", fuss_equation},
      {6, "Bessel relation and exponential generating function", bessel_relation_and_egf},
      {7, "moment theorems for mu_t and nu_t", moment_theorems},
      {8, "semigroup, factorization and Kolmogorov identity", semigroup_and_factorization},
      {9, "half-integer Bessel K", bessel_k},
      {10, "integer sequences", sequences},
      {11, "inverse Gaussian sampler moments", sampler},
  };
  return all;
}

CriterionResult run(const Criterion& c) {
  CriterionResult r;
  try {
    r = c.run();
  } catch (const std::exception& e) {
    r = CriterionResult{c.number, "", false, std::string("exception: ") + e.what()};
  }
  r.number = c.number;
  r.title = c.title;
  return r;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) out.push_back(run(c));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.number << "  " << r.title << "  (" << r.detail
     << ")";
  return os.str();
}

}  // namespace umbral::acceptance
