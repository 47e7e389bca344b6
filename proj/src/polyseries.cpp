#include "hurwitz/polyseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz {

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::p_power(int index, int exponent) {
  Monomial m;
  m.set_p_exponent(index, exponent);
  return m;
}

int Monomial::p_exponent(int index) const {
  if (index < 1) throw std::invalid_argument("p index must be >= 1");
  return index <= static_cast<int>(p.size()) ? p[index - 1] : 0;
}

int Monomial::p_degree() const {
  int total = 0;
  for (int e : p) total += e;
  return total;
}

void Monomial::set_p_exponent(int index, int exponent) {
  if (index < 1) throw std::invalid_argument("p index must be >= 1");
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (index > static_cast<int>(p.size())) {
    if (exponent == 0) return;
    p.resize(index, 0);
  }
  p[index - 1] = exponent;
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Monomial& Monomial::operator*=(const Monomial& other) {
  u += other.u;
  x += other.x;
  if (other.p.size() > p.size()) p.resize(other.p.size(), 0);
  for (std::size_t i = 0; i < other.p.size(); ++i) p[i] += other.p[i];
  return *this;
}

std::string Monomial::to_string() const {
  std::string out;
  auto factor = [&out](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
  };
  factor("u", u);
  factor("x", x);
  for (std::size_t i = 0; i < p.size(); ++i) factor("p" + std::to_string(i + 1), p[i]);
  return out.empty() ? "1" : out;
}

// ---- PolyCoeff --------------------------------------------------------------

PolyCoeff::PolyCoeff(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial::one(), constant);
}

PolyCoeff::PolyCoeff(const Monomial& mono, const Rational& coefficient) {
  if (coefficient != 0) terms_.emplace(mono, coefficient);
}

Rational PolyCoeff::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PolyCoeff::add_term(const Monomial& mono, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyCoeff& PolyCoeff::operator+=(const PolyCoeff& other) {
  for (const auto& [mono, q] : other.terms_) add_term(mono, q);
  return *this;
}

PolyCoeff& PolyCoeff::operator-=(const PolyCoeff& other) {
  for (const auto& [mono, q] : other.terms_) add_term(mono, -q);
  return *this;
}

PolyCoeff& PolyCoeff::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, q] : terms_) q *= scalar;
  return *this;
}

PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b) {
  PolyCoeff out;
  for (const auto& [ma, qa] : a.terms_)
    for (const auto& [mb, qb] : b.terms_) out.add_term(ma * mb, qa * qb);
  return out;
}

std::string PolyCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, q] : terms_) {
    if (!out.empty()) out += " + ";
    out += q.get_str() + "*" + mono.to_string();
  }
  return out;
}

// ---- Series -----------------------------------------------------------------

const char* var_name(Var v) { return v == Var::z ? "z" : "lambda"; }

Series::Series(Var var, int order) : var_(var), order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(order + 1);
}

Series Series::constant(const PolyCoeff& c, Var var, int order) { return term(c, 0, var, order); }

Series Series::variable(Var var, int order) { return term(PolyCoeff(1), 1, var, order); }

Series Series::term(const PolyCoeff& c, int degree, Var var, int order) {
  Series out(var, order);
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (degree <= order) out.coeffs_[degree] = c;
  return out;
}

const PolyCoeff& Series::coeff(int n) const {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n > order_)
    throw TruncationOverflow("coefficient of " + std::string(var_name(var_)) + "^" + std::to_string(n) +
                             " requested from a series truncated at order " + std::to_string(order_));
  return coeffs_[n];
}

Rational Series::coeff(int n, const Monomial& mono) const { return coeff(n).coefficient(mono); }

PolyCoeff& Series::coeff_ref(int n) {
  if (n < 0 || n > order_) throw TruncationOverflow("coefficient index beyond truncation order");
  return coeffs_[n];
}

Series Series::truncated(int order) const {
  if (order > order_) throw TruncationOverflow("cannot extend a truncated series");
  Series out(var_, order);
  std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, out.coeffs_.begin());
  return out;
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const PolyCoeff& c) { return c.is_zero(); });
}

void Series::check_compatible(const Series& other) const {
  if (var_ != other.var_) throw std::invalid_argument("series in different variables");
}

Series& Series::operator+=(const Series& other) {
  check_compatible(other);
  if (other.order_ < order_) *this = truncated(other.order_);
  for (int n = 0; n <= order_; ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  check_compatible(other);
  if (other.order_ < order_) *this = truncated(other.order_);
  for (int n = 0; n <= order_; ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

Series& Series::operator*=(const PolyCoeff& c) {
  for (auto& coeff : coeffs_) coeff = coeff * c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.check_compatible(b);
  const int order = std::min(a.order_, b.order_);
  Series out(a.var_, order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

Series pow(const Series& a, long k) {
  if (k < 0) throw std::invalid_argument("negative power of a series (division is not supported)");
  Series result = Series::constant(PolyCoeff(1), a.var(), a.order());
  Series base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Series exp_series(const Series& a) {
  if (!a.coeff(0).is_zero()) throw std::invalid_argument("exp_series: nonzero constant term");
  // E' = a' E  =>  n e_n = sum_{k=1}^n k a_k e_{n-k}
  const int order = a.order();
  Series out(a.var(), order);
  out.coeff_ref(0) = PolyCoeff(1);
  for (int n = 1; n <= order; ++n) {
    PolyCoeff acc;
    for (int k = 1; k <= n; ++k) {
      if (a.coeff(k).is_zero()) continue;
      acc += (a.coeff(k) * out.coeff(n - k)) * Rational(k);
    }
    out.coeff_ref(n) = acc * frac(1, n);
  }
  return out;
}

Series compose_poly(std::span<const PolyCoeff> c, const Series& a) {
  if (!a.coeff(0).is_zero()) throw std::invalid_argument("compose_poly: inner series has nonzero constant term");
  // Horner; powers beyond the order vanish so the list may be cut there.
  const std::size_t top = std::min<std::size_t>(c.size(), static_cast<std::size_t>(a.order()) + 1);
  Series out(a.var(), a.order());
  for (std::size_t i = top; i-- > 0;) {
    out = out * a;
    out.coeff_ref(0) += c[i];
  }
  return out;
}

namespace {

template <typename F>
Series map_terms(const Series& a, F&& f) {
  Series out(a.var(), a.order());
  for (int n = 0; n <= a.order(); ++n) {
    PolyCoeff& target = out.coeff_ref(n);
    for (const auto& [mono, q] : a.coeff(n).terms()) f(n, mono, q, target);
  }
  return out;
}

}  // namespace

Series z_ddz(const Series& a) {
  return map_terms(a, [](int n, const Monomial& mono, const Rational& q, PolyCoeff& out) {
    out.add_term(mono, q * n);
  });
}

Series ddz(const Series& a) {
  if (a.order() == 0) throw TruncationOverflow("derivative of an order-0 series has no known coefficients");
  Series out(a.var(), a.order() - 1);
  for (int n = 1; n <= a.order(); ++n) out.coeff_ref(n - 1) = a.coeff(n) * Rational(n);
  return out;
}

Series ddx(const Series& a) {
  return map_terms(a, [](int, const Monomial& mono, const Rational& q, PolyCoeff& out) {
    if (mono.x == 0) return;
    Monomial lowered = mono;
    --lowered.x;
    out.add_term(lowered, q * mono.x);
  });
}

Series x_ddx(const Series& a) {
  return map_terms(a, [](int, const Monomial& mono, const Rational& q, PolyCoeff& out) {
    out.add_term(mono, q * mono.x);
  });
}

Series u_ddu(const Series& a) {
  return map_terms(a, [](int, const Monomial& mono, const Rational& q, PolyCoeff& out) {
    out.add_term(mono, q * mono.u);
  });
}

Series p_ddp(const Series& a, int k) {
  if (k < 1 || k > a.order()) throw std::invalid_argument("p_ddp: index outside 1..order");
  return map_terms(a, [k](int, const Monomial& mono, const Rational& q, PolyCoeff& out) {
    const int e = mono.p_exponent(k);
    if (e == 0) return;
    Monomial lowered = mono;
    lowered.set_p_exponent(k, e - 1);
    out.add_term(lowered, q * e);
  });
}

Series sum_p_ddp(const Series& a) {
  return map_terms(a, [](int, const Monomial& mono, const Rational& q, PolyCoeff& out) {
    out.add_term(mono, q * mono.p_degree());
  });
}

Series apply_operator(Operator op, const Series& a) {
  switch (op.kind) {
    case Operator::Kind::z_ddz: return z_ddz(a);
    case Operator::Kind::ddz: return ddz(a);
    case Operator::Kind::ddx: return ddx(a);
    case Operator::Kind::x_ddx: return x_ddx(a);
    case Operator::Kind::u_ddu: return u_ddu(a);
    case Operator::Kind::p_ddp: return p_ddp(a, op.k);
    case Operator::Kind::sum_p_ddp: return sum_p_ddp(a);
  }
  throw std::invalid_argument("unknown operator");
}

Series times_var(const Series& a) {
  Series out(a.var(), a.order() + 1);
  for (int n = 0; n <= a.order(); ++n) out.coeff_ref(n + 1) = a.coeff(n);
  return out;
}

std::optional<Discrepancy> first_difference(const Series& lhs, const Series& rhs) {
  if (lhs.var() != rhs.var()) throw std::invalid_argument("comparing series in different variables");
  const int order = std::min(lhs.order(), rhs.order());
  for (int n = 0; n <= order; ++n) {
    const auto& a = lhs.coeff(n).terms();
    const auto& b = rhs.coeff(n).terms();
    auto ia = a.begin();
    auto ib = b.begin();
    // Merge walk in monomial order; the first mismatch is the least monomial.
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first))
        return Discrepancy{n, ia->first, ia->second, 0};
      if (ia == a.end() || ib->first < ia->first) return Discrepancy{n, ib->first, 0, ib->second};
      if (ia->second != ib->second) return Discrepancy{n, ia->first, ia->second, ib->second};
      ++ia;
      ++ib;
    }
  }
  return std::nullopt;
}

}  // namespace hurwitz
