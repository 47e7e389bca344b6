#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/exact.hpp"

namespace hurwitz {

/// u^a x^b p_1^{e_1} ... p_N^{e_N}. p[i-1] holds e_i, trailing zeros trimmed
/// so that equality and ordering are structural.
struct Monomial {
  int u = 0;
  int x = 0;
  std::vector<int> p;

  static Monomial one() { return {}; }
  static Monomial p_power(int index, int exponent = 1);

  int p_exponent(int index) const;
  int p_degree() const;
  void set_p_exponent(int index, int exponent);

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic on (u, x, p).
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const;
};

/// Sparse polynomial in u, x, p_1, p_2, ... with exact rational coefficients.
/// Zero coefficients are never stored.
class PolyCoeff {
 public:
  using TermMap = std::map<Monomial, Rational>;

  PolyCoeff() = default;
  PolyCoeff(const Rational& constant);  // NOLINT: implicit scalar embedding
  PolyCoeff(long constant) : PolyCoeff(Rational(constant)) {}  // NOLINT
  PolyCoeff(const Monomial& mono, const Rational& coefficient);

  static PolyCoeff u() { return {Monomial{1, 0, {}}, 1}; }
  static PolyCoeff x() { return {Monomial{0, 1, {}}, 1}; }
  static PolyCoeff p(int index) { return {Monomial::p_power(index), 1}; }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& mono) const;

  void add_term(const Monomial& mono, const Rational& coefficient);

  PolyCoeff& operator+=(const PolyCoeff& other);
  PolyCoeff& operator-=(const PolyCoeff& other);
  PolyCoeff& operator*=(const Rational& scalar);
  friend PolyCoeff operator+(PolyCoeff a, const PolyCoeff& b) { return a += b; }
  friend PolyCoeff operator-(PolyCoeff a, const PolyCoeff& b) { return a -= b; }
  friend PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b);
  friend PolyCoeff operator*(PolyCoeff a, const Rational& q) { return a *= q; }
  friend PolyCoeff operator*(const Rational& q, PolyCoeff a) { return a *= q; }
  friend PolyCoeff operator-(PolyCoeff a) { return a *= Rational(-1); }
  friend bool operator==(const PolyCoeff&, const PolyCoeff&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

enum class Var { z, lambda };

const char* var_name(Var v);

/// Power series in one distinguished variable, truncated after degree
/// order(). Coefficients live in PolyCoeff.
///
/// Binary operations on series of different orders truncate to the smaller
/// order. Mixing variables is an error.
class Series {
 public:
  Series(Var var, int order);

  static Series constant(const PolyCoeff& c, Var var, int order);
  /// The distinguished variable itself (zero when order is 0).
  static Series variable(Var var, int order);
  /// c * var^degree.
  static Series term(const PolyCoeff& c, int degree, Var var, int order);

  Var var() const { return var_; }
  int order() const { return order_; }

  /// Coefficient of var^n. Throws TruncationOverflow for n > order().
  const PolyCoeff& coeff(int n) const;
  Rational coeff(int n, const Monomial& mono) const;
  PolyCoeff& coeff_ref(int n);
  const std::vector<PolyCoeff>& coeffs() const { return coeffs_; }

  Series truncated(int order) const;
  bool is_zero() const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const PolyCoeff& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const PolyCoeff& c) { return a *= c; }
  friend Series operator*(const PolyCoeff& c, Series a) { return a *= c; }
  friend Series operator-(Series a) { return a *= PolyCoeff(-1); }
  friend bool operator==(const Series&, const Series&) = default;

 private:
  void check_compatible(const Series& other) const;

  Var var_;
  int order_;
  std::vector<PolyCoeff> coeffs_;
};

/// Nonnegative integer power by repeated squaring, truncating after each
/// multiply.
Series pow(const Series& a, long k);

/// exp(a) for a with zero constant term.
Series exp_series(const Series& a);

/// sum_i c[i] * a^i, where c[i] multiplies the i-th power. a must have zero
/// constant term.
Series compose_poly(std::span<const PolyCoeff> c, const Series& a);

struct Operator {
  enum class Kind { z_ddz, ddz, ddx, x_ddx, u_ddu, p_ddp, sum_p_ddp };
  Kind kind;
  int k = 0;  // only for p_ddp
};

/// Exact action of a differential operator. ddz lowers the order by one
/// (the top coefficient would need an unknown term).
Series apply_operator(Operator op, const Series& a);

Series z_ddz(const Series& a);
Series ddz(const Series& a);
Series ddx(const Series& a);
Series x_ddx(const Series& a);
Series u_ddu(const Series& a);
Series p_ddp(const Series& a, int k);
Series sum_p_ddp(const Series& a);

/// a * var; raises the order by one.
Series times_var(const Series& a);

struct Discrepancy {
  int degree;
  Monomial monomial;
  Rational lhs;
  Rational rhs;
};

/// Least degree, then least monomial, where the two series differ, compared
/// up to the smaller of the two orders.
std::optional<Discrepancy> first_difference(const Series& lhs, const Series& rhs);

}  // namespace hurwitz
