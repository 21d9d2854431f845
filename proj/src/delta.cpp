#include "umbral/delta.hpp"

#include <algorithm>
#include <stdexcept>

#include "umbral/fuss.hpp"

namespace umbral {

DeltaOperator::DeltaOperator(Series g) : g_(std::move(g)) {
  if (g_[0] != 0) throw std::invalid_argument("delta operator symbol must have zero constant term");
  if (g_.order() < 1 || g_[1] == 0) throw std::invalid_argument("not a delta operator: c_1 = 0");
}

AbTriple::AbTriple(Rational a_, Rational b_, unsigned p_) : a(std::move(a_)), b(std::move(b_)), p(p_) {
  if (a == 0) throw std::invalid_argument("AbTriple: a must be nonzero");
  if (p < 1) throw std::invalid_argument("AbTriple: p must be >= 1");
}

Series AbTriple::symbol(std::size_t order) const {
  std::vector<Rational> v(order + 1);
  if (order >= 1) v[1] = a;
  if (order >= p + 1) v[p + 1] = -b;
  return Series(std::move(v));
}

DeltaOperator AbTriple::delta(std::size_t order) const {
  return DeltaOperator(symbol(std::max<std::size_t>(order, p + 1)));
}

const char* to_string(SequenceSource s) {
  switch (s) {
    case SequenceSource::ClosedForm: return "closed-form";
    case SequenceSource::Generic: return "generic";
    case SequenceSource::Egf: return "egf";
  }
  return "unknown";
}

Poly apply_delta(const DeltaOperator& q, const Poly& p) {
  if (p.degree() > static_cast<long>(q.order()))
    throw std::domain_error("apply_delta: operator symbol truncated below polynomial degree");
  Poly acc;
  Poly dk = p;
  const Series& g = q.symbol();
  for (std::size_t k = 1; static_cast<long>(k) <= p.degree(); ++k) {
    dk = diff(dk);
    if (g[k] != 0) acc = acc + g[k] * dk;
  }
  return acc;
}

BinomialSequence basic_sequence_generic(const DeltaOperator& q, std::size_t nmax) {
  if (q.order() < nmax) throw std::domain_error("basic_sequence_generic: operator order below nmax");
  const Series& g = q.symbol();
  BinomialSequence seq;
  seq.source = SequenceSource::Generic;
  seq.polys.reserve(nmax + 1);
  seq.polys.push_back(Poly::constant(Rational(1)));

  // Q t^k = sum_{m>=1} g_m k!/(k-m)! t^{k-m}. Matching t^j in Q w_n = n w_{n-1}:
  //   x_{j+1} g_1 (j+1) + sum_{m>=2} x_{j+m} g_m (j+m)!/j! = n [t^j] w_{n-1}.
  for (std::size_t n = 1; n <= nmax; ++n) {
    const Poly& prev = seq.polys.back();
    std::vector<Rational> x(n + 1);
    for (std::size_t j = n; j-- > 0;) {
      Rational rhs = Rational(static_cast<long>(n)) * prev[j];
      Rational falling(static_cast<long>(j + 1));  // (j+m)!/j! for m = 1
      for (std::size_t m = 2; j + m <= n; ++m) {
        falling *= static_cast<long>(j + m);
        if (g[m] != 0) rhs -= x[j + m] * g[m] * falling;
      }
      x[j + 1] = rhs / (g[1] * static_cast<long>(j + 1));
    }
    seq.polys.emplace_back(std::move(x));
  }
  return seq;
}

BinomialSequence basic_sequence_closed(const AbTriple& abp, std::size_t nmax) {
  BinomialSequence seq;
  seq.source = SequenceSource::ClosedForm;
  seq.polys.reserve(nmax + 1);
  seq.polys.push_back(Poly::constant(Rational(1)));
  const Rational inv_a = 1 / abp.a;
  for (std::size_t n = 1; n <= nmax; ++n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t j = 0; j * abp.p <= n - 1; ++j) {
      Rational term{Integer(factorial(n + j - 1)), Integer(factorial(j) * factorial(n - j * abp.p - 1))};
      term.canonicalize();
      term *= pow(abp.b, static_cast<long>(j)) * pow(inv_a, static_cast<long>(n + j));
      c[n - j * abp.p] = term;
    }
    seq.polys.emplace_back(std::move(c));
  }
  return seq;
}

BinomialSequence basic_sequence_egf(const Series& f, std::size_t nmax) {
  if (f[0] != 0) throw std::domain_error("basic_sequence_egf: f must have zero constant term");
  if (nmax > f.order()) throw std::domain_error("basic_sequence_egf: nmax exceeds series order");
  const Series fs = f.truncated(nmax);
  // coeff[n][k] = n!/k! [x^n] f^k
  std::vector<std::vector<Rational>> coeff(nmax + 1, std::vector<Rational>(nmax + 1));
  Series fk = Series::constant(Rational(1), nmax);
  for (std::size_t k = 0; k <= nmax; ++k) {
    if (k > 0) fk = fk * fs;
    const Rational inv_kfact(Integer(1), factorial(k));
    for (std::size_t n = k; n <= nmax; ++n) coeff[n][k] = fk[n] * factorial(n) * inv_kfact;
  }
  BinomialSequence seq;
  seq.source = SequenceSource::Egf;
  for (std::size_t n = 0; n <= nmax; ++n) seq.polys.emplace_back(std::move(coeff[n]));
  return seq;
}

Series f_series(const AbTriple& abp, std::size_t order) {
  if (order < 1) throw std::invalid_argument("f_series: order must be >= 1");
  // Substituting y = b x^p / a^{p+1} into B_{p+1}(y) = sum_j F_j y^j and
  // multiplying by x/a gives sum_j F_j b^j / a^{(p+1)j+1} x^{pj+1}.
  const std::size_t jmax = (order - 1) / abp.p;
  const FussSeries fuss = fuss_series(abp.p + 1, jmax);
  std::vector<Rational> v(order + 1);
  for (std::size_t j = 0; j <= jmax; ++j)
    v[abp.p * j + 1] = fuss.series[j] * pow(abp.b, static_cast<long>(j)) /
                       pow(abp.a, static_cast<long>((abp.p + 1) * j + 1));
  return Series(std::move(v));
}

bool binomial_identity_check(const BinomialSequence& seq, std::size_t n) {
  if (n >= seq.size()) throw std::out_of_range("binomial_identity_check: n beyond sequence range");
  // values[k][v] = w_k(v) for v in {0..n}
  std::vector<std::vector<Rational>> values(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t v = 0; v <= n; ++v) values[k][v] = eval(seq[k], Rational(static_cast<long>(v)));
  std::vector<Integer> binom(n + 1);
  for (std::size_t k = 0; k <= n; ++k) binom[k] = binomial(n, k);

  for (std::size_t s = 0; s <= n; ++s) {
    const Poly shifted = taylor_shift(seq[n], Rational(static_cast<long>(s)));
    for (std::size_t t = 0; t <= n; ++t) {
      Rational rhs(0);
      for (std::size_t k = 0; k <= n; ++k) rhs += binom[k] * values[k][s] * values[n - k][t];
      if (eval(shifted, Rational(static_cast<long>(t))) != rhs) return false;
    }
  }
  return true;
}

}  // namespace umbral
