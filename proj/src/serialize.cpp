#include "marangoni/serialize.hpp"

#include <stdexcept>

namespace marangoni {

nlohmann::json to_json(const ExpPoly& f) {
  auto out = nlohmann::json::array();
  for (const auto& [k, p] : f.terms()) {
    auto coeffs = nlohmann::json::array();
    for (const auto& c : p) coeffs.push_back(to_fraction_string(c));
    out.push_back({{"decay_index", k}, {"coefficients", std::move(coeffs)}});
  }
  return out;
}

ExpPoly exp_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("exp-polynomial must be a JSON array of records");
  ExpPoly::TermMap terms;
  for (const auto& rec : j) {
    const auto k = rec.at("decay_index").get<long long>();
    if (k < 0) throw std::invalid_argument("negative decay index");
    auto& poly = terms[static_cast<unsigned>(k)];
    if (!poly.empty()) throw std::invalid_argument("duplicate decay index " + std::to_string(k));
    for (const auto& c : rec.at("coefficients")) poly.push_back(parse_rational(c.get<std::string>()));
  }
  return ExpPoly(std::move(terms));
}

nlohmann::json to_json(const PadeApproximant& r) {
  auto render = [](const Vector<Rational>& v) {
    auto exact = nlohmann::json::array();
    auto value = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      exact.push_back(to_fraction_string(v(i)));
      value.push_back(to_double(v(i)));
    }
    return nlohmann::json{{"exact", exact}, {"value", value}};
  };
  return {{"order_l", r.order_l()},
          {"order_m", r.order_m()},
          {"numerator", render(r.numerator)},
          {"denominator", render(r.denominator)},
          {"farfield_limit", farfield_limit(r)}};
}

}  // namespace marangoni
