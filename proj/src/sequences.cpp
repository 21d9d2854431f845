#include "umbral/sequences.hpp"

#include <algorithm>
#include <stdexcept>

#include "umbral/bessel_poly.hpp"
#include "umbral/delta.hpp"

namespace umbral {

const std::vector<SequenceSpec>& sequence_catalog() {
  static const std::vector<SequenceSpec> catalog{
      {"A144301", "w_n(1)", "mu_1"},
      {"A107104", "w_n(2)", "mu_2"},
      {"A043301", "w_{n+1}(2)/2", "u rho_2(u) / 2"},
      {"A080893", "2^n w_n(1/2)", "rho_{1/2}(u/2) / 2"},
      {"A001515", "y_n(1)", "nu_1"},
      {"A001517", "y_n(2)", "nu_2"},
      {"A001518", "y_n(3)", "nu_3"},
      {"A065919", "y_n(4)", "nu_4"},
  };
  return catalog;
}

const SequenceSpec& find_sequence(std::string_view id) {
  const auto& cat = sequence_catalog();
  const auto it = std::find_if(cat.begin(), cat.end(), [id](const SequenceSpec& s) { return s.id == id; });
  if (it == cat.end()) throw std::invalid_argument("unknown sequence id: " + std::string(id));
  return *it;
}

namespace {

// w_0 .. w_nmax for D - D^2/2 by the chosen construction.
std::vector<Poly> carlitz_polys(std::size_t nmax, Construction c) {
  if (c == Construction::ClosedForm) return carlitz_w(nmax).polys;
  return basic_sequence_generic(carlitz_triple().delta(nmax + 1), nmax).polys;
}

// y_0 .. y_nmax. The generic route uses y_n(t) = t^{n+1} w_{n+1}(1/t).
std::vector<Poly> bessel_polys(std::size_t nmax, Construction c) {
  if (c == Construction::ClosedForm) return bessel_poly(nmax).polys;
  const std::vector<Poly> w = carlitz_polys(nmax + 1, Construction::Generic);
  std::vector<Poly> y;
  y.reserve(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) y.push_back(reflect(w[n + 1], n + 1));
  return y;
}

Integer require_integer(const Rational& r, std::string_view id, std::size_t n) {
  if (!is_integer(r))
    throw std::logic_error("non-integral term " + to_string(r) + " at n=" + std::to_string(n) + " of " +
                           std::string(id));
  return r.get_num();
}

}  // namespace

std::vector<Integer> generate(std::string_view id, std::size_t count, Construction construction) {
  const SequenceSpec& spec = find_sequence(id);
  if (count < 1) throw std::invalid_argument("generate: count must be >= 1");
  std::vector<Rational> terms;
  terms.reserve(count);
  const std::size_t last = count - 1;

  if (spec.id == "A144301" || spec.id == "A107104") {
    const Rational t(spec.id == "A144301" ? 1 : 2);
    for (const Poly& w : carlitz_polys(last, construction)) terms.push_back(eval(w, t));
  } else if (spec.id == "A043301") {
    const auto w = carlitz_polys(last + 1, construction);
    for (std::size_t n = 0; n <= last; ++n) terms.push_back(eval(w[n + 1], Rational(2)) / 2);
  } else if (spec.id == "A080893") {
    const auto w = carlitz_polys(last, construction);
    for (std::size_t n = 0; n <= last; ++n)
      terms.push_back(pow(Rational(2), static_cast<long>(n)) * eval(w[n], Rational(1, 2)));
  } else {
    const long t = spec.id == "A001515" ? 1 : spec.id == "A001517" ? 2 : spec.id == "A001518" ? 3 : 4;
    for (const Poly& y : bessel_polys(last, construction)) terms.push_back(eval(y, Rational(t)));
  }

  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t n = 0; n < terms.size(); ++n) out.push_back(require_integer(terms[n], id, n));
  return out;
}

DistSpec sequence_distribution(std::string_view id) {
  const SequenceSpec& spec = find_sequence(id);
  if (spec.id == "A144301") return DistSpec::inverse_gaussian(1);
  if (spec.id == "A107104") return DistSpec::inverse_gaussian(2);
  // u rho_2(u) / 2, the size-biased mu_2 (its mean is 2).
  if (spec.id == "A043301") return DistSpec::size_biased(DistSpec::inverse_gaussian(2), 2);
  // rho_{1/2}(u/2) / 2, the law of 2X for X ~ mu_{1/2}.
  if (spec.id == "A080893") return DistSpec::dilated(DistSpec::inverse_gaussian(0.5), 2);
  if (spec.id == "A001515") return DistSpec::bessel_measure(1);
  if (spec.id == "A001517") return DistSpec::bessel_measure(2);
  if (spec.id == "A001518") return DistSpec::bessel_measure(3);
  return DistSpec::bessel_measure(4);
}

double SequenceCrosscheck::max_rel_dev() const {
  double m = 0;
  for (const auto& r : terms) m = std::max(m, r.rel_dev);
  return m;
}

SequenceCrosscheck crosscheck(std::string_view id, std::size_t count, const QuadratureConfig& cfg) {
  const std::vector<Integer> exact = generate(id, count);
  const DistSpec d = sequence_distribution(id);
  SequenceCrosscheck out{std::string(id), {}};
  for (std::size_t n = 0; n < count; ++n) {
    const QuadResult m = moment(d, static_cast<unsigned>(n), cfg);
    out.terms.push_back(CheckReport::compare(exact[n].get_d(), m.value, m.error_estimate));
  }
  return out;
}

}  // namespace umbral
