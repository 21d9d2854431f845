#pragma once

// JSON encodings. Rationals travel as "p/q" strings (or "p" when q == 1),
// polynomials and series as arrays of such strings indexed by power.

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "umbral/delta.hpp"
#include "umbral/distributions.hpp"
#include "umbral/poly.hpp"
#include "umbral/series.hpp"

namespace umbral {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Poly& p);
Json to_json(const Series& s);
Json to_json(const std::vector<Integer>& terms);

// { "n": n, "coeffs": [...] }
Json sequence_record(std::size_t n, const Poly& p);

// A real when the imaginary part is zero, else { "re": .., "im": .. }.
Json to_json(std::complex<double> z);

// { "value_lhs", "value_rhs", "abs_dev", "rel_dev", "quad_error" }
Json to_json(const CheckReport& r);
Json to_json(const PointwiseReport& r, const char* point_name);

Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);

}  // namespace umbral
