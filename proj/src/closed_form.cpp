#include "hurwitz/closed_form.hpp"

#include <stdexcept>

namespace hurwitz {

namespace {

void require_integral(const Rational& value, const char* what, const Partition& alpha) {
  if (!is_integral(value) || value < 0)
    throw std::logic_error(std::string(what) + " for alpha=" + alpha.to_string() +
                           " is not a nonnegative integer: " + value.get_str());
}

}  // namespace

const char* count_kind_name(CountKind kind) {
  switch (kind) {
    case CountKind::H: return "H";
    case CountKind::G: return "G";
    case CountKind::BalancedTrees: return "BalancedTrees";
  }
  return "?";
}

CountResult h_alpha(const Partition& alpha) {
  const long n = alpha.size();
  const long l = alpha.length();
  if (n < 1) throw std::invalid_argument("h_alpha: empty partition");
  Rational value = rpow(Rational(n), l - 3) * Rational(factorial(n + l - 2));
  for (auto [i, d] : alpha.multiplicities())
    value *= rpow(frac(ipow(i, i), factorial(i - 1)), d);
  require_integral(value, "H", alpha);
  return {value, alpha, std::nullopt, CountKind::H};
}

CountResult g_alpha(const Partition& alpha, int m) {
  if (m < 2) throw std::invalid_argument("g_alpha: m must be >= 2");
  const long n = alpha.size();
  const long l = alpha.length();
  if (n < 1) throw std::invalid_argument("g_alpha: empty partition");
  Rational value = frac(m * factorial((m - 1) * n - 1), factorial((m - 1) * n - l + 2));
  for (auto [i, d] : alpha.multiplicities())
    value *= Rational(ipow(i * binomial(static_cast<long>(m) * i - 1, i), d));
  require_integral(value, "G", alpha);
  return {value, alpha, m, CountKind::G};
}

CountResult balanced_tree_prediction(const Partition& alpha, int m) {
  const auto g = g_alpha(alpha, m);
  Rational value = g.value * frac(class_size(alpha), factorial(alpha.size() - 1));
  require_integral(value, "balanced tree count", alpha);
  return {value, alpha, m, CountKind::BalancedTrees};
}

}  // namespace hurwitz
