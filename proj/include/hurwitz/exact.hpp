#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a coefficient beyond the truncation order is requested.
class TruncationOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when an enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer factorial(long n);

// Zero when k < 0 or k > n; n must be nonnegative.
Integer binomial(long n, long k);

Integer ipow(const Integer& base, unsigned long exponent);

// Exact rational power; negative exponents require a nonzero base.
Rational rpow(const Rational& base, long exponent);

/// Canonicalized num/den.
inline Rational frac(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Always "num/den", including den = 1.
std::string to_fraction_string(const Rational& q);

// Accepts "num/den" or a plain integer; result is canonicalized.
Rational parse_rational(const std::string& text);

}  // namespace hurwitz
