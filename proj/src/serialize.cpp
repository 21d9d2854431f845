#include "umbral/serialize.hpp"

#include <stdexcept>

namespace umbral {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

Json to_json(const Series& s) {
  Json arr = Json::array();
  for (const auto& c : s.coeffs()) arr.push_back(to_string(c));
  return arr;
}

Json to_json(const std::vector<Integer>& terms) {
  Json arr = Json::array();
  for (const auto& z : terms) arr.push_back(to_string(z));
  return arr;
}

Json sequence_record(std::size_t n, const Poly& p) {
  Json j;
  j["n"] = n;
  j["coeffs"] = to_json(p);
  return j;
}

Json to_json(std::complex<double> z) {
  if (z.imag() == 0.0) return z.real();
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["value_lhs"] = to_json(r.lhs);
  j["value_rhs"] = to_json(r.rhs);
  j["abs_dev"] = r.abs_dev;
  j["rel_dev"] = r.rel_dev;
  j["quad_error"] = r.quad_error;
  return j;
}

Json to_json(const PointwiseReport& r, const char* point_name) {
  Json points = Json::array();
  for (const auto& p : r.points) {
    Json entry;
    entry[point_name] = p.at;
    const Json fields = to_json(p.report);
    for (const auto& [k, v] : fields.items()) entry[k] = v;
    points.push_back(std::move(entry));
  }
  Json j;
  j["points"] = std::move(points);
  j["max_abs_dev"] = r.max_abs_dev();
  j["max_rel_dev"] = r.max_rel_dev();
  j["max_quad_error"] = r.max_quad_error();
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be encoded as a string");
  return parse_rational(j.get<std::string>());
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be encoded as an array");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Poly(std::move(c));
}

}  // namespace umbral
