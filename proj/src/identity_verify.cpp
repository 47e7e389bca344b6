#include "hurwitz/identity_verify.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "hurwitz/closed_form.hpp"
#include "hurwitz/lagrange.hpp"

namespace hurwitz {

namespace {

constexpr std::array kSeriesTags = {
    std::pair{SeriesTag::G, "G"},   std::pair{SeriesTag::H, "H"},   std::pair{SeriesTag::Hhat, "Hhat"},
    std::pair{SeriesTag::T, "T"},   std::pair{SeriesTag::v, "v"},   std::pair{SeriesTag::w, "w"},
    std::pair{SeriesTag::s, "s"},   std::pair{SeriesTag::Aw, "Aw"}, std::pair{SeriesTag::Bs, "Bs"},
};

constexpr std::array kIdentities = {
    IdentityTag::MAIN1, IdentityTag::MAIN2, IdentityTag::GAW,   IdentityTag::RECG,
    IdentityTag::EULER_G, IdentityTag::TTOG, IdentityTag::RECT, IdentityTag::DEFV,
    IdentityTag::VAW,   IdentityTag::WLISTS, IdentityTag::PROP1, IdentityTag::PROP2,
    IdentityTag::PROP3, IdentityTag::KDV,   IdentityTag::KDV2,  IdentityTag::EULER_H,
};

constexpr std::array kIdentityNames = {
    "MAIN1", "MAIN2", "GAW", "RECG", "EULER_G", "TTOG", "RECT", "DEFV",
    "VAW",   "WLISTS", "PROP1", "PROP2", "PROP3", "KDV", "KDV2", "EULER_H",
};

Monomial type_monomial(const Partition& alpha, int u_exp, long x_exp) {
  Monomial mono;
  mono.u = u_exp;
  mono.x = static_cast<int>(x_exp);
  for (auto [i, d] : alpha.multiplicities()) mono.set_p_exponent(i, d);
  return mono;
}

Rational g_value(const Partition& alpha, int m, const GOverrides& overrides) {
  if (auto it = overrides.find(alpha); it != overrides.end()) return it->second;
  return g_alpha(alpha, m).value;
}

int require_m(std::optional<int> m, const char* what) {
  if (!m) throw std::invalid_argument(std::string(what) + " requires m");
  if (*m < 2) throw std::invalid_argument(std::string(what) + " requires m >= 2");
  return *m;
}

Series build_g(int m, int order, const GOverrides& overrides) {
  Series out(Var::z, order);
  for (int n = 1; n <= order; ++n) {
    for (const auto& alpha : partitions_of(n)) {
      Rational weight = g_value(alpha, m, overrides) * frac(class_size(alpha), factorial(n));
      out.coeff_ref(n).add_term(type_monomial(alpha, alpha.length(), c_alpha(alpha, m)), weight);
    }
  }
  return out;
}

// T_alpha(m) = |C_alpha| G_alpha(m) / (m (n-1)!), placed at z^{n-1}.
Rational t_value(const Partition& alpha, int m, const GOverrides& overrides) {
  return g_value(alpha, m, overrides) * frac(class_size(alpha), m * factorial(alpha.size() - 1));
}

Series build_t(int m, int order, const GOverrides& overrides) {
  Series out(Var::z, order);
  for (int n = 1; n <= order + 1; ++n)
    for (const auto& alpha : partitions_of(n))
      out.coeff_ref(n - 1).add_term(type_monomial(alpha, alpha.length(), c_alpha(alpha, m)),
                                    t_value(alpha, m, overrides));
  return out;
}

// Pseudo-Eulerian trees: (m-1) root choices times c(alpha) planted roots.
Series build_v(int m, int order, const GOverrides& overrides) {
  Series out(Var::z, order);
  for (int n = 1; n <= order; ++n)
    for (const auto& alpha : partitions_of(n)) {
      const long c = c_alpha(alpha, m);
      out.coeff_ref(n).add_term(type_monomial(alpha, alpha.length(), c - 1),
                                Rational((m - 1) * c) * t_value(alpha, m, overrides));
    }
  return out;
}

enum class HWeight { n_plus_l_minus_2, n_minus_l_plus_2 };

Series build_h(int order, bool mark_cycles, HWeight weight) {
  Series out(Var::z, order);
  for (int n = 1; n <= order; ++n) {
    for (const auto& alpha : partitions_of(n)) {
      const long l = alpha.length();
      const long shift = weight == HWeight::n_plus_l_minus_2 ? n + l - 2 : n - l + 2;
      Rational coeff = h_alpha(alpha).value * frac(class_size(alpha), factorial(n) * factorial(shift));
      out.coeff_ref(n).add_term(type_monomial(alpha, mark_cycles ? alpha.length() : 0, 0), coeff);
    }
  }
  return out;
}

Series build_aw(int m, int order) {
  return compose_poly(build_branch_poly(BranchKind::A, m, order), solve_fixed_point(PhiSpec::g_kernel(m, order)));
}

Series build_bs(int order) {
  return compose_poly(build_branch_poly(BranchKind::B, 0, order), solve_fixed_point(PhiSpec::h_kernel(order)));
}

VerifyReport compare(IdentityTag id, std::optional<int> m, int order, const Series& lhs, const Series& rhs) {
  if (lhs.order() < order || rhs.order() < order)
    throw std::logic_error(std::string(identity_name(id)) + ": a side was built below the requested order");
  auto diff = first_difference(lhs.truncated(order), rhs.truncated(order));
  return {id, m, order, !diff.has_value(), diff, std::nullopt};
}

Series scaled(const Series& a, const Rational& q) { return a * PolyCoeff(q); }

}  // namespace

const char* series_tag_name(SeriesTag tag) {
  for (auto [t, name] : kSeriesTags)
    if (t == tag) return name;
  return "?";
}

std::optional<SeriesTag> parse_series_tag(std::string_view name) {
  for (auto [t, n] : kSeriesTags)
    if (name == n) return t;
  return std::nullopt;
}

bool series_needs_m(SeriesTag tag) {
  return tag == SeriesTag::G || tag == SeriesTag::T || tag == SeriesTag::v || tag == SeriesTag::w ||
         tag == SeriesTag::Aw;
}

const char* identity_name(IdentityTag tag) { return kIdentityNames[static_cast<std::size_t>(tag)]; }

std::optional<IdentityTag> parse_identity(std::string_view name) {
  for (std::size_t k = 0; k < kIdentityNames.size(); ++k)
    if (name == kIdentityNames[k]) return kIdentities[k];
  return std::nullopt;
}

bool identity_needs_m(IdentityTag tag) { return static_cast<int>(tag) <= static_cast<int>(IdentityTag::WLISTS); }

std::span<const IdentityTag> all_identities() { return kIdentities; }
std::span<const IdentityTag> g_family_identities() { return std::span(kIdentities).first(10); }
std::span<const IdentityTag> h_family_identities() { return std::span(kIdentities).subspan(10); }

Series build_series(const SeriesId& id, const GOverrides& overrides) {
  if (id.order < 0) throw std::invalid_argument("series order must be nonnegative");
  switch (id.tag) {
    case SeriesTag::G: return build_g(require_m(id.m, "G"), id.order, overrides);
    case SeriesTag::T: return build_t(require_m(id.m, "T"), id.order, overrides);
    case SeriesTag::v: return build_v(require_m(id.m, "v"), id.order, overrides);
    case SeriesTag::w: return solve_fixed_point(PhiSpec::g_kernel(require_m(id.m, "w"), id.order));
    case SeriesTag::Aw: return build_aw(require_m(id.m, "Aw"), id.order);
    case SeriesTag::H: return build_h(id.order, false, HWeight::n_plus_l_minus_2);
    case SeriesTag::Hhat: return build_h(id.order, true, HWeight::n_plus_l_minus_2);
    case SeriesTag::s: return solve_fixed_point(PhiSpec::h_kernel(id.order));
    case SeriesTag::Bs: return build_bs(id.order);
  }
  throw std::invalid_argument("unknown series tag");
}

Series build_hhat_shifted_weight(int order) { return build_h(order, true, HWeight::n_minus_l_plus_2); }

VerifyReport verify(IdentityTag id, std::optional<int> m_opt, int order, const GOverrides& overrides) {
  if (order < 1) throw std::invalid_argument("verify: order must be >= 1");
  if (!identity_needs_m(id)) m_opt.reset();
  const int N = order;

  if (identity_needs_m(id)) {
    const int m = require_m(m_opt, identity_name(id));
    const Rational ratio = frac(m, m - 1);
    auto G = [&](int o) { return build_g(m, o, overrides); };
    auto T = [&](int o) { return build_t(m, o, overrides); };

    switch (id) {
      case IdentityTag::MAIN1: {
        Series g = G(N);
        Series lhs = z_ddz(scaled(z_ddz(g), m - 1) + g);
        Series aw = build_aw(m, N);
        Series rhs = scaled(aw * PolyCoeff::x(), ratio) + scaled(aw * aw, ratio * frac(1, 2));
        return compare(id, m, N, lhs, rhs);
      }
      case IdentityTag::MAIN2:
        return compare(id, m, N, z_ddz(ddx(G(N))), scaled(build_aw(m, N), ratio));
      case IdentityTag::GAW: {
        // Coefficientwise through Lagrange's formula, not through the solved w.
        auto a = build_branch_poly(BranchKind::A, m, N);
        Series aprime = branch_derivative(a, N);
        Series rhs(Var::z, N);
        for (int n = 1; n <= N; ++n)
          rhs.coeff_ref(n) = lagrange_coeff(aprime, PhiSpec::g_kernel(m, N), n) * ratio;
        return compare(id, m, N, z_ddz(ddx(G(N))), rhs);
      }
      case IdentityTag::RECG: {
        Series g = G(N);
        Series lhs = scaled(z_ddz(u_ddu(g) - g), 2 * m);
        Series d = z_ddz(ddx(g));
        return compare(id, m, N, lhs, scaled(d * d, m - 1));
      }
      case IdentityTag::EULER_G: {
        Series g = G(N);
        Series rhs = scaled(z_ddz(g), m - 1) - u_ddu(g) + scaled(g, 2);
        return compare(id, m, N, x_ddx(g), rhs);
      }
      case IdentityTag::TTOG:
        return compare(id, m, N, scaled(T(N), m), ddz(G(N + 1)));
      case IdentityTag::RECT: {
        Series t = T(N);
        Series d = ddx(t);
        Series rhs = scaled(times_var(d * d), m - 1);
        return compare(id, m, N, scaled(u_ddu(t) - t, 2), rhs);
      }
      case IdentityTag::DEFV:
        return compare(id, m, N, build_v(m, N, overrides), scaled(times_var(ddx(T(N))), m - 1));
      case IdentityTag::VAW:
        return compare(id, m, N, build_v(m, N, overrides), build_aw(m, N));
      case IdentityTag::WLISTS: {
        Series base = build_v(m, N, overrides);
        base.coeff_ref(0) += PolyCoeff::x();
        Series lists = times_var(pow(base, m - 1));
        return compare(id, m, N, lists, solve_fixed_point(PhiSpec::g_kernel(m, N)));
      }
      default: break;
    }
  }

  switch (id) {
    case IdentityTag::PROP1:
      return compare(id, std::nullopt, N, z_ddz(z_ddz(build_h(N, false, HWeight::n_plus_l_minus_2))), build_bs(N));
    case IdentityTag::PROP2: {
      Series s = solve_fixed_point(PhiSpec::h_kernel(N));
      std::vector<PolyCoeff> c(N + 1);
      for (int i = 1; i <= N; ++i) c[i] = PolyCoeff(Monomial::p_power(i), frac(ipow(i, i - 1), factorial(i)));
      Series bs = build_bs(N);
      Series rhs = compose_poly(c, s) - scaled(bs * bs, frac(1, 2));
      return compare(id, std::nullopt, N, z_ddz(build_h(N, false, HWeight::n_plus_l_minus_2)), rhs);
    }
    case IdentityTag::PROP3: {
      Series h = build_h(N, false, HWeight::n_plus_l_minus_2);
      Series s = solve_fixed_point(PhiSpec::h_kernel(N));
      VerifyReport report{id, std::nullopt, N, true, std::nullopt, std::nullopt};
      Series s_power = s;
      for (int k = 1; k <= N; ++k) {
        if (k > 1) s_power = s_power * s;
        auto r = compare(id, std::nullopt, N, z_ddz(p_ddp(h, k)), scaled(s_power, frac(ipow(k, k - 1), factorial(k))));
        // Keep the failure at the least degree; ties go to the smaller k.
        if (!r.passed && (report.passed || r.first_discrepancy->degree < report.first_discrepancy->degree)) {
          report.passed = false;
          report.first_discrepancy = r.first_discrepancy;
          report.k = k;
        }
      }
      return report;
    }
    case IdentityTag::KDV: {
      Series h = build_h(N, false, HWeight::n_plus_l_minus_2);
      Series d2 = z_ddz(z_ddz(h));
      Series rhs = z_ddz(sum_p_ddp(h)) - scaled(d2 * d2, frac(1, 2));
      return compare(id, std::nullopt, N, z_ddz(h), rhs);
    }
    case IdentityTag::KDV2: {
      Series h = build_h(N, true, HWeight::n_plus_l_minus_2);
      Series d2 = z_ddz(z_ddz(h));
      Series rhs = z_ddz(u_ddu(h)) - scaled(d2 * d2, frac(1, 2));
      return compare(id, std::nullopt, N, z_ddz(h), rhs);
    }
    case IdentityTag::EULER_H: {
      Series h = build_h(N, true, HWeight::n_plus_l_minus_2);
      return compare(id, std::nullopt, N, u_ddu(h), sum_p_ddp(h));
    }
    default: break;
  }
  throw std::invalid_argument("unknown identity");
}

}  // namespace hurwitz
