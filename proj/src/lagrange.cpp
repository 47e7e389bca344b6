#include "hurwitz/lagrange.hpp"

#include <stdexcept>

namespace hurwitz {

std::vector<PolyCoeff> build_branch_poly(BranchKind kind, int m, int order) {
  if (order < 0) throw std::invalid_argument("build_branch_poly: negative order");
  std::vector<PolyCoeff> c(order + 1);
  if (kind == BranchKind::A) {
    if (m < 1) throw std::invalid_argument("build_branch_poly: A needs m >= 1");
    for (int i = 1; i <= order; ++i) {
      Monomial mono = Monomial::p_power(i);
      mono.u = 1;
      c[i] = PolyCoeff(mono, binomial(static_cast<long>(m) * i - 1, i));
    }
  } else {
    for (int i = 1; i <= order; ++i)
      c[i] = PolyCoeff(Monomial::p_power(i), frac(ipow(i, i), factorial(i)));
  }
  return c;
}

PhiSpec PhiSpec::g_kernel(int m, int order) {
  if (m < 2) throw std::invalid_argument("G kernel requires m >= 2");
  if (order < 0) throw std::invalid_argument("negative order");
  return {Kind::g_kernel, m, order};
}

PhiSpec PhiSpec::h_kernel(int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  return {Kind::h_kernel, 0, order};
}

Series phi_at(const PhiSpec& phi, const Series& arg) {
  if (phi.kind == PhiSpec::Kind::g_kernel) {
    auto a = build_branch_poly(BranchKind::A, phi.m, arg.order());
    Series inner = compose_poly(a, arg);
    inner.coeff_ref(0) += PolyCoeff::x();
    return pow(inner, phi.m - 1);
  }
  auto b = build_branch_poly(BranchKind::B, 0, arg.order());
  return exp_series(compose_poly(b, arg));
}

Series kernel_series(const PhiSpec& phi) { return phi_at(phi, Series::variable(Var::lambda, phi.order)); }

Series solve_fixed_point(const PhiSpec& phi) {
  const int order = phi.order;
  Series f(Var::z, order);
  for (int pass = 0; pass <= order + 1; ++pass) {
    Series next = times_var(phi_at(phi, f)).truncated(order);
    if (next == f) return f;
    f = std::move(next);
  }
  throw std::logic_error("fixed-point iteration did not stabilize; kernel is not of the form z*phi");
}

PolyCoeff lagrange_coeff(const Series& fprime, const PhiSpec& phi, int n) {
  if (n < 1) throw std::invalid_argument("lagrange_coeff: n must be >= 1");
  if (n > phi.order || fprime.order() < n - 1)
    throw TruncationOverflow("lagrange_coeff: n exceeds the build order");
  if (fprime.var() != Var::lambda) throw std::invalid_argument("lagrange_coeff: f' must be a lambda-series");
  PhiSpec low = phi;
  low.order = n - 1;
  Series integrand = fprime.truncated(n - 1) * pow(kernel_series(low), n);
  return integrand.coeff(n - 1) * frac(1, n);
}

Series branch_derivative(const std::vector<PolyCoeff>& c, int order) {
  Series out(Var::lambda, order);
  for (int i = 1; i < static_cast<int>(c.size()) && i - 1 <= order; ++i)
    out.coeff_ref(i - 1) = c[i] * Rational(i);
  return out;
}

}  // namespace hurwitz
