#include "hurwitz/json_io.hpp"

#include <stdexcept>
#include <string>

namespace hurwitz {

namespace {

Json monomial_fields(const Monomial& mono) {
  Json j;
  j["u"] = mono.u;
  j["x"] = mono.x;
  Json p = Json::object();
  for (std::size_t i = 0; i < mono.p.size(); ++i)
    if (mono.p[i] != 0) p[std::to_string(i + 1)] = mono.p[i];
  j["p"] = std::move(p);
  return j;
}

std::string value_string(const Rational& q) { return is_integral(q) ? q.get_num().get_str() : to_fraction_string(q); }

}  // namespace

Json to_json(const Partition& alpha) {
  Json j = Json::array();
  for (int part : alpha.parts()) j.push_back(part);
  return j;
}

Json to_json(const Series& s) {
  Json j;
  j["var"] = var_name(s.var());
  j["order"] = s.order();
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) {
    Json terms = Json::array();
    for (const auto& [mono, q] : c.terms()) {
      Json t = monomial_fields(mono);
      t["q"] = to_fraction_string(q);
      terms.push_back(std::move(t));
    }
    coeffs.push_back(std::move(terms));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

Series series_from_json(const Json& j) {
  const std::string var = j.at("var").get<std::string>();
  Var v;
  if (var == "z")
    v = Var::z;
  else if (var == "lambda")
    v = Var::lambda;
  else
    throw std::invalid_argument("unknown series variable: " + var);
  const int order = j.at("order").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != order + 1) throw std::invalid_argument("series JSON: coeffs length != order+1");
  Series s(v, order);
  for (int n = 0; n <= order; ++n) {
    for (const auto& t : coeffs[n]) {
      Monomial mono;
      mono.u = t.at("u").get<int>();
      mono.x = t.at("x").get<int>();
      for (const auto& [key, e] : t.at("p").items()) mono.set_p_exponent(std::stoi(key), e.get<int>());
      s.coeff_ref(n).add_term(mono, parse_rational(t.at("q").get<std::string>()));
    }
  }
  return s;
}

Json to_json(const CountResult& r) {
  Json j;
  j["kind"] = count_kind_name(r.kind);
  j["alpha"] = to_json(r.alpha);
  if (r.m) j["m"] = *r.m;
  j["value"] = value_string(r.value);
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["identity"] = identity_name(r.identity);
  if (r.m) j["m"] = *r.m;
  j["order"] = r.order;
  j["status"] = r.passed ? "pass" : "fail";
  if (r.first_discrepancy) {
    const auto& d = *r.first_discrepancy;
    Json fd;
    fd["z_degree"] = d.degree;
    fd["monomial"] = monomial_fields(d.monomial);
    fd["lhs"] = to_fraction_string(d.lhs);
    fd["rhs"] = to_fraction_string(d.rhs);
    if (r.k) fd["k"] = *r.k;
    j["first_discrepancy"] = std::move(fd);
  }
  return j;
}

const char* factor_mode_name(FactorMode mode) {
  return mode == FactorMode::transpositions ? "transpositions" : "arbitrary";
}

}  // namespace hurwitz
