#include "cliffa/polyjson.hpp"

#include <json.hpp>

#include "cliffa/error.hpp"
#include "cliffa/textio.hpp"

namespace cliffa {

using nlohmann::ordered_json;

std::string polynomial_to_json(const PolynomialQ& p) {
  ordered_json j;
  j["schema"] = "poly-v1";
  j["dim"] = p.dim();
  j["kind"] = p.kind() == VariableKind::Vector ? "vector" : "unital";
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    ordered_json coef = ordered_json::object();
    for (const auto& [blade, s] : c.terms()) coef[blade_name(blade)] = s.get_str();
    terms.push_back({{"exponent", e}, {"coefficient", std::move(coef)}});
  }
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

PolynomialQ polynomial_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  }
  try {
    if (j.value("schema", std::string("poly-v1")) != "poly-v1") throw ParseError("polynomial: unsupported schema");
    int dim = j.at("dim").get<int>();
    std::string kind_name = j.value("kind", std::string("vector"));
    if (kind_name != "vector" && kind_name != "unital") throw ParseError("polynomial: bad kind '" + kind_name + "'");
    VariableKind kind = kind_name == "vector" ? VariableKind::Vector : VariableKind::Unital;
    PolynomialQ p(dim, kind);
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exponent").get<Exponent>();
      MultivectorQ c(dim);
      for (const auto& [name, value] : t.at("coefficient").items()) {
        Blade b = parse_blade(name);
        c += MultivectorQ::blade(dim, b, parse_rational(value.get<std::string>()));
      }
      p += PolynomialQ::monomial(e, c, kind);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  }
}

}  // namespace cliffa
