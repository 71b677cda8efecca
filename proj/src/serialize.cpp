#include "charrig/serialize.hpp"

namespace charrig {

namespace {

Json values_object(const Complex& x, int degree, const RatVector& values) {
  Json obj = Json::object();
  const auto& cells = x.simplices(degree);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (sgn(values[i]) != 0) obj[simplex_key(cells[i])] = to_string(values[i]);
  return obj;
}

RatVector parse_values(const Complex& x, int degree, const Json& obj) {
  if (!obj.is_object()) throw ParseError("'values' must be an object keyed by simplex");
  RatVector v(x.count(degree));
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    Simplex s = parse_simplex_key(it.key());
    if (static_cast<int>(s.size()) != degree + 1)
      throw ParseError("simplex [" + it.key() + "] does not have degree " + std::to_string(degree));
    std::size_t idx = x.require_index(s);
    if (it.value().is_string())
      v[idx] = parse_rational(it.value().get<std::string>());
    else if (it.value().is_number_integer())
      v[idx] = Rational(Integer(std::to_string(it.value().get<long long>())));
    else
      throw ParseError("value for [" + it.key() + "] must be a \"p/q\" string or an integer");
  }
  return v;
}

}  // namespace

Json rationals_to_json(const RatVector& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(to_string(q));
  return arr;
}

Json integers_to_json(const IntVector& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(q.get_str());
  return arr;
}

Json cochain_to_json(const Complex& x, const Cochain& c) {
  return {{"ring", ring_name(c.ring)},
          {"degree", c.degree},
          {"values", values_object(x, c.degree, c.values)}};
}

Cochain cochain_from_json(const Complex& x, const Json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("cochain document must be an object");
    Cochain c;
    c.ring = doc.contains("ring") ? parse_ring(doc.at("ring").get<std::string>()) : Ring::kQ;
    c.degree = doc.at("degree").get<int>();
    if (c.degree < 0) throw DegreeError("negative cochain degree");
    c.values = parse_values(x, c.degree, doc.contains("values") ? doc.at("values") : Json::object());
    if (c.ring == Ring::kQmodZ) c = Cochain::mod_one(c.degree, c.values);
    require_shape(x, c);
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed cochain document: ") + e.what());
  }
}

Json chain_to_json(const Complex& x, int degree, const IntVector& chain) {
  return {{"ring", "Z"}, {"degree", degree}, {"values", values_object(x, degree, to_rational(chain))}};
}

IntVector chain_from_json(const Complex& x, const Json& doc, int* degree) {
  try {
    if (!doc.is_object()) throw ParseError("chain document must be an object");
    int d = doc.at("degree").get<int>();
    if (d < 0) throw DegreeError("negative chain degree");
    if (doc.contains("ring") && doc.at("ring").get<std::string>() != "Z")
      throw RingError("chains are integral");
    RatVector v = parse_values(x, d, doc.contains("values") ? doc.at("values") : Json::object());
    if (degree) *degree = d;
    try {
      return to_integer(v);
    } catch (const MismatchError&) {
      throw RingError("chain coefficients must be integers");
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed chain document: ") + e.what());
  }
}

Json class_to_json(const Complex& x, const CohomologyClass& u) {
  return {{"ring", ring_name(u.ring)},
          {"degree", u.degree},
          {"group", describe_cohomology(x, u.degree, u.ring)},
          {"coords", rationals_to_json(u.coords)}};
}

}  // namespace charrig
