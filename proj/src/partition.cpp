#include "hurwitz/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
    size_ += p;
    ++multiplicities_[p];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty partition");
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed partition part: '" + std::string(token) + "'");
    if (value < 1) throw std::invalid_argument("partition parts must be positive");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  auto it = multiplicities_.find(part);
  return it == multiplicities_.end() ? 0 : it->second;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(n, n, prefix, out);
  return out;
}

Integer class_size(const Partition& alpha) {
  Integer denom = 1;
  for (auto [part, count] : alpha.multiplicities())
    denom *= ipow(part, count) * factorial(count);
  return factorial(alpha.size()) / denom;
}

long c_alpha(const Partition& alpha, int m) {
  if (m < 1) throw std::invalid_argument("c_alpha: m must be >= 1");
  return static_cast<long>(m - 1) * alpha.size() - alpha.length() + 2;
}

int r_alpha(const Partition& alpha) { return alpha.size() + alpha.length() - 2; }

Rational genus_of(const Partition& alpha, std::span<const Partition> factor_types) {
  const int n = alpha.size();
  long total = n - alpha.length();
  for (const auto& f : factor_types) {
    if (f.size() != n) throw std::invalid_argument("genus_of: partitions of different n");
    total += n - f.length();
  }
  // total = 2n - 2 + 2g
  return frac(total - 2 * n + 2, 2);
}

}  // namespace hurwitz
