#pragma once

#include <vector>

#include "hurwitz/polyseries.hpp"

namespace hurwitz {

enum class BranchKind {
  A,  // c_i = C(mi-1, i) u p_i
  B,  // c_i = (i^i / i!) p_i
};

/// Coefficients c_0..c_order of the branch polynomial (c_0 = 0).
std::vector<PolyCoeff> build_branch_poly(BranchKind kind, int m, int order);

/// Kernel phi of an implicit equation f = z * phi(f).
///   g_kernel(m): phi(t) = (x + A(t))^{m-1}, m >= 2
///   h_kernel:    phi(t) = exp B(t)
struct PhiSpec {
  enum class Kind { g_kernel, h_kernel };

  Kind kind;
  int m = 0;
  int order = 0;

  static PhiSpec g_kernel(int m, int order);
  static PhiSpec h_kernel(int order);
};

/// phi(arg), truncated at arg's order. arg must have zero constant term.
Series phi_at(const PhiSpec& phi, const Series& arg);

/// phi(lambda) as a lambda-series at the spec's order.
Series kernel_series(const PhiSpec& phi);

/// The unique f with f = z phi(f), by iterating f <- z phi(f) from 0.
/// Each pass fixes one more coefficient; failure to stabilize within
/// order+1 passes is a logic error.
Series solve_fixed_point(const PhiSpec& phi);

/// (1/n) [lambda^{n-1}] fprime(lambda) phi(lambda)^n, which equals
/// [z^n] F(f) for the solved f when F' = fprime.
PolyCoeff lagrange_coeff(const Series& fprime, const PhiSpec& phi, int n);

/// Derivative in lambda of a branch polynomial, as a lambda-series.
Series branch_derivative(const std::vector<PolyCoeff>& c, int order);

}  // namespace hurwitz
