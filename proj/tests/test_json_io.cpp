#include <doctest.h>

#include "hurwitz/json_io.hpp"
#include "hurwitz/lagrange.hpp"

using namespace hurwitz;

TEST_CASE("series JSON layout") {
  Series s(Var::z, 2);
  s.coeff_ref(1).add_term(Monomial::one(), Rational(1));
  Monomial m;
  m.u = 1;
  m.x = 2;
  m.set_p_exponent(1, 1);
  m.set_p_exponent(3, 2);
  s.coeff_ref(2).add_term(m, frac(-3, 4));
  CHECK(to_json(s).dump() ==
        R"({"var":"z","order":2,"coeffs":[[],[{"u":0,"x":0,"p":{},"q":"1/1"}],)"
        R"([{"u":1,"x":2,"p":{"1":1,"3":2},"q":"-3/4"}]]})");
}

TEST_CASE("series round trip") {
  std::vector<Series> samples = {
      build_series({SeriesTag::G, 2, 4}), build_series({SeriesTag::H, std::nullopt, 5}),
      build_series({SeriesTag::Hhat, std::nullopt, 4}), build_series({SeriesTag::T, 3, 3}),
      build_series({SeriesTag::v, 2, 3}), build_series({SeriesTag::w, 2, 4}),
      build_series({SeriesTag::s, std::nullopt, 4}), build_series({SeriesTag::Aw, 3, 3}),
      build_series({SeriesTag::Bs, std::nullopt, 4}), kernel_series(PhiSpec::g_kernel(2, 3))};
  for (const auto& s : samples) {
    auto back = series_from_json(Json::parse(to_json(s).dump()));
    CHECK(back == s);
    CHECK(back.var() == s.var());
    CHECK(back.order() == s.order());
  }
}

TEST_CASE("series JSON rejects malformed input") {
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"var":"y","order":0,"coeffs":[[]]})")), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"var":"z","order":2,"coeffs":[[]]})")), std::invalid_argument);
  CHECK_THROWS(series_from_json(Json::parse(R"({"var":"z","order":0})")));
}

TEST_CASE("count results") {
  CHECK(to_json(h_alpha(Partition({3}))).dump() == R"({"kind":"H","alpha":[3],"value":"3"})");
  CHECK(to_json(g_alpha(Partition({3}), 2)).dump() == R"({"kind":"G","alpha":[3],"m":2,"value":"5"})");
  // Values past 64 bits stay exact.
  auto big = to_json(h_alpha(Partition({20})));
  CHECK(big["value"] == "262144000000000000000000");
}

TEST_CASE("verify reports") {
  VerifyReport pass{IdentityTag::KDV2, std::nullopt, 8, true, std::nullopt, std::nullopt};
  CHECK(to_json(pass).dump() == R"({"identity":"KDV2","order":8,"status":"pass"})");

  Monomial mono;
  mono.u = 2;
  mono.set_p_exponent(1, 2);
  VerifyReport fail{IdentityTag::PROP3, std::nullopt, 4, false, Discrepancy{2, mono, frac(1, 2), frac(7, 8)}, 3};
  CHECK(to_json(fail).dump() ==
        R"({"identity":"PROP3","order":4,"status":"fail","first_discrepancy":)"
        R"({"z_degree":2,"monomial":{"u":2,"x":0,"p":{"1":2}},"lhs":"1/2","rhs":"7/8","k":3}})");

  VerifyReport with_m{IdentityTag::MAIN1, 3, 5, true, std::nullopt, std::nullopt};
  CHECK(to_json(with_m)["m"] == 3);
}

TEST_CASE("factor mode names") {
  CHECK(std::string(factor_mode_name(FactorMode::transpositions)) == "transpositions");
  CHECK(std::string(factor_mode_name(FactorMode::arbitrary)) == "arbitrary");
}
