#include "umbral/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace umbral {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool valid_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_literal(num, true) || !valid_integer_literal(den, false))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer zn(n, 10);
  Integer zd(std::string(den), 10);
  if (zd == 0) throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  Rational r(zn, zd);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Rational result(1);
  Rational b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

Integer factorial(unsigned long n) {
  Integer r(1);
  for (unsigned long i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer r(1);
  // r stays an exact integer: after step i it equals C(n - k + i, i).
  for (unsigned long i = 1; i <= k; ++i) {
    r *= n - k + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace umbral
