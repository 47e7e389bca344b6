#include "hurwitz/exact.hpp"

namespace hurwitz {

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial with negative upper index");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    Rational out(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw std::domain_error("zero to a negative power");
  Rational out(ipow(base.get_den(), -exponent), ipow(base.get_num(), -exponent));
  out.canonicalize();
  return out;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational out;
  if (out.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  out.canonicalize();
  return out;
}

}  // namespace hurwitz
