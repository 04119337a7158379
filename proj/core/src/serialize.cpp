#include "asai/serialize.hpp"

#include <stdexcept>

#include "json.hpp"

namespace asai {

namespace {

using nlohmann::ordered_json;

ordered_json coef_json(const Rational& c) { return to_string(c); }

ordered_json coef_json(const CyclotomicNumber& c) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(to_string(r));
  return ordered_json{{"level", c.level()}, {"coeffs", coeffs}};
}

Rational coef_from(const ordered_json& j, const Rational*) {
  if (!j.is_string()) throw std::invalid_argument("rational coefficient must be a string");
  return parse_rational(j.get<std::string>());
}

CyclotomicNumber coef_from(const ordered_json& j, const CyclotomicNumber*) {
  if (!j.is_object() || !j.contains("level") || !j.contains("coeffs") || !j["level"].is_number_integer() ||
      !j["coeffs"].is_array()) {
    throw std::invalid_argument("cyclotomic value needs integer \"level\" and array \"coeffs\"");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(coef_from(c, static_cast<const Rational*>(nullptr)));
  const long level = j["level"].get<long>();
  if (level < 1) throw std::invalid_argument("cyclotomic level must be positive");
  return CyclotomicNumber(level, std::move(coeffs));
}

template <Coefficient C>
ordered_json poly_json(const LaurentPoly<C>& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : p.terms()) {
    ordered_json exps = ordered_json::object();
    for (auto v : kAllVars) {
      if (t.mono[v] != 0) exps[std::string(var_name(v))] = t.mono[v];
    }
    terms.push_back(ordered_json{{"coef", coef_json(t.coef)}, {"exps", exps}});
  }
  return terms;
}

template <Coefficient C>
LaurentPoly<C> poly_from(const ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  std::vector<typename LaurentPoly<C>::Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coef") || !t.contains("exps") || !t["exps"].is_object()) {
      throw std::invalid_argument("term needs \"coef\" and \"exps\"");
    }
    Monomial::Exponents e{};
    for (const auto& [name, val] : t["exps"].items()) {
      auto v = parse_var(name);
      if (!v) throw std::invalid_argument("unknown variable " + name);
      if (!val.is_number_integer()) throw std::invalid_argument("exponent must be an integer");
      e[static_cast<std::size_t>(*v)] = val.template get<int>();
    }
    terms.push_back({Monomial(e), coef_from(t["coef"], static_cast<const C*>(nullptr))});
  }
  return LaurentPoly<C>::from_terms(std::move(terms));
}

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

template <Coefficient C>
ordered_json function_json(const LaurentRational<C>& f) {
  return ordered_json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

template <Coefficient C>
LaurentRational<C> function_from(const ordered_json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("rational function needs \"num\" and \"den\"");
  }
  try {
    return {poly_from<C>(j["num"]), poly_from<C>(j["den"])};
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace

std::string to_json(const RationalFunction& f) { return function_json(f).dump(); }
std::string to_json(const RationalPoly& p) { return poly_json(p).dump(); }
std::string to_json(const CyclotomicNumber& c) { return coef_json(c).dump(); }
std::string to_json(const CycloPoly& p) { return poly_json(p).dump(); }

RationalFunction rational_function_from_json(std::string_view text) { return function_from<Rational>(parse(text)); }
RationalPoly rational_poly_from_json(std::string_view text) { return poly_from<Rational>(parse(text)); }
CyclotomicNumber cyclotomic_from_json(std::string_view text) {
  return coef_from(parse(text), static_cast<const CyclotomicNumber*>(nullptr));
}
CycloPoly cyclo_poly_from_json(std::string_view text) { return poly_from<CyclotomicNumber>(parse(text)); }

}  // namespace asai
