#include <doctest.h>

#include "hurwitz/closed_form.hpp"
#include "hurwitz/identity_verify.hpp"

using namespace hurwitz;

namespace {

Monomial mono(int u, int x, std::initializer_list<std::pair<int, int>> ps = {}) {
  Monomial m;
  m.u = u;
  m.x = x;
  for (auto [i, e] : ps) m.set_p_exponent(i, e);
  return m;
}

}  // namespace

TEST_CASE("series coefficients at low degree") {
  Series g = build_series({SeriesTag::G, 2, 3});
  CHECK(g.coeff(1) == PolyCoeff(mono(1, 2, {{1, 1}}), 1));

  Series h = build_series({SeriesTag::H, std::nullopt, 3});
  CHECK(h.coeff(1) == PolyCoeff::p(1));
  CHECK(h.coeff(2, mono(0, 0, {{2, 1}})) == frac(1, 2));
  CHECK(h.coeff(2, mono(0, 0, {{1, 2}})) == frac(1, 4));

  // Hhat(z, u, p) = H(z, u p).
  Series hh = build_series({SeriesTag::Hhat, std::nullopt, 3});
  CHECK(hh.coeff(2, mono(1, 0, {{2, 1}})) == frac(1, 2));
  CHECK(hh.coeff(2, mono(2, 0, {{1, 2}})) == frac(1, 4));

  for (auto tag : {SeriesTag::G, SeriesTag::H, SeriesTag::Hhat, SeriesTag::v, SeriesTag::w, SeriesTag::s,
                   SeriesTag::Aw, SeriesTag::Bs})
    CHECK(build_series({tag, 3, 4}).coeff(0).is_zero());

  CHECK_THROWS_AS(build_series({SeriesTag::G, std::nullopt, 3}), std::invalid_argument);
  CHECK_THROWS_AS(build_series({SeriesTag::w, 1, 3}), std::invalid_argument);
}

TEST_CASE("T carries the planted-tree normalisation") {
  // [z^2] T for m = 2: alpha = (3) has T = |C| G / (m (n-1)!) = 2*5/4.
  Series t = build_series({SeriesTag::T, 2, 3});
  CHECK(t.coeff(2, mono(1, 4, {{3, 1}})) == frac(5, 2));
  CHECK(t.coeff(0) == PolyCoeff(mono(1, 2, {{1, 1}}), frac(1, 2)));
}

TEST_CASE("the alternative Hhat weight breaks KDV2 at z^2") {
  Series hh = build_hhat_shifted_weight(3);
  CHECK(hh.coeff(2, mono(1, 0, {{2, 1}})) == frac(1, 12));
  Series d2 = z_ddz(z_ddz(hh));
  Series rhs = z_ddz(u_ddu(hh)) - d2 * d2 * PolyCoeff(frac(1, 2));
  auto diff = first_difference(z_ddz(hh), rhs);
  REQUIRE(diff);
  CHECK(diff->degree == 2);
  CHECK(diff->monomial == mono(2, 0, {{1, 2}}));
  CHECK(diff->lhs == frac(1, 2));
  CHECK(diff->rhs == frac(7, 8));
}

TEST_CASE("PROP1 at order 2 by hand expansion") {
  // (z d/dz)^2 H at z^2 is 4 (p2/2 + p1^2/4); B(s) at z^2 is p1*p1 + 2 p2.
  Series lhs = z_ddz(z_ddz(build_series({SeriesTag::H, std::nullopt, 2})));
  Series bs = build_series({SeriesTag::Bs, std::nullopt, 2});
  PolyCoeff expected = PolyCoeff::p(1) * PolyCoeff::p(1) + PolyCoeff::p(2) * PolyCoeff(2);
  CHECK(lhs.coeff(2) == expected);
  CHECK(bs.coeff(2) == expected);
  CHECK(verify(IdentityTag::PROP1, std::nullopt, 2).passed);
}

TEST_CASE("RECG at order 1 is trivially satisfied") {
  auto r = verify(IdentityTag::RECG, 2, 1);
  CHECK(r.passed);
  CHECK_FALSE(r.first_discrepancy);
  CHECK(r.m == 2);
}

TEST_CASE("every identity holds") {
  for (auto tag : h_family_identities()) {
    auto r = verify(tag, std::nullopt, 8);
    INFO(identity_name(tag));
    CHECK(r.passed);
    CHECK_FALSE(r.m);
  }
  for (int m = 2; m <= 4; ++m)
    for (auto tag : g_family_identities()) {
      auto r = verify(tag, m, 6);
      INFO(identity_name(tag), " m=", m);
      CHECK(r.passed);
    }
  // m = 5 is outside the acceptance grid; spot-check anyway.
  for (auto tag : g_family_identities()) CHECK(verify(tag, 5, 4).passed);
}

TEST_CASE("MAIN2 and GAW agree coefficientwise") {
  for (int m = 2; m <= 4; ++m) {
    GOverrides corrupt{{Partition({2, 1}), g_alpha(Partition({2, 1}), m).value + 1}};
    auto main2 = verify(IdentityTag::MAIN2, m, 5, corrupt);
    auto gaw = verify(IdentityTag::GAW, m, 5, corrupt);
    REQUIRE_FALSE(main2.passed);
    REQUIRE_FALSE(gaw.passed);
    CHECK(main2.first_discrepancy->degree == gaw.first_discrepancy->degree);
    CHECK(main2.first_discrepancy->monomial == gaw.first_discrepancy->monomial);
    CHECK(main2.first_discrepancy->rhs == gaw.first_discrepancy->rhs);
  }
}

TEST_CASE("a corrupted G value is localised to its own degree") {
  for (int m = 2; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& alpha : partitions_of(n)) {
        GOverrides corrupt{{alpha, g_alpha(alpha, m).value + 1}};
        auto r = verify(IdentityTag::RECG, m, 5, corrupt);
        INFO("alpha=", alpha.to_string(), " m=", m);
        REQUIRE_FALSE(r.passed);
        // With one part the left side carries the factor l - 1 = 0, so only
        // the quadratic side sees the change, one degree later.
        CHECK(r.first_discrepancy->degree == (alpha.length() == 1 ? n + 1 : n));
        // Every nonlinear identity notices. The linear ones hold termwise
        // whatever the values are.
        for (auto tag : {IdentityTag::MAIN1, IdentityTag::MAIN2, IdentityTag::GAW, IdentityTag::RECT,
                         IdentityTag::VAW, IdentityTag::WLISTS})
          CHECK_FALSE(verify(tag, m, 5, corrupt).passed);
      }
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(verify(IdentityTag::RECG, std::nullopt, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify(IdentityTag::RECG, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify(IdentityTag::KDV, std::nullopt, 0), std::invalid_argument);
  CHECK_FALSE(parse_identity("NOPE"));
  CHECK(parse_identity("EULER_H") == IdentityTag::EULER_H);
  for (auto tag : all_identities()) CHECK(parse_identity(identity_name(tag)) == tag);
  CHECK(all_identities().size() == 16);
  CHECK(parse_series_tag("Hhat") == SeriesTag::Hhat);
  CHECK_FALSE(parse_series_tag("Q"));
}
