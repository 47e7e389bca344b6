#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of {1..n}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a == b || a < 1 || b < 1 || a > n || b > n)
    throw std::invalid_argument("transposition needs two distinct points in {1..n}");
  auto p = identity(n);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(n + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      if (from < 1 || from > n || used[from]) throw std::invalid_argument("cycles are not disjoint in {1..n}");
      used[from] = true;
      images[from - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<std::vector<int>> list;
  for (auto c : cycles) list.emplace_back(c);
  return from_cycles(n, list);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) inv[images_[j] - 1] = static_cast<int>(j) + 1;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = degree();
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int j = start; !seen[j]; j = images_[j - 1]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::cycle_count() const {
  const int n = degree();
  std::vector<bool> seen(n + 1, false);
  int count = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    ++count;
    for (int j = start; !seen[j]; j = images_[j - 1]) seen[j] = true;
  }
  return count;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[j] != static_cast<int>(j) + 1) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("composing permutations of different degree");
  Permutation out;
  out.images_.resize(b.images_.size());
  for (std::size_t j = 0; j < b.images_.size(); ++j) out.images_[j] = a.images_[b.images_[j] - 1];
  return out;
}

Partition cycle_type(const Permutation& pi) {
  std::vector<int> lengths;
  for (const auto& c : pi.cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

Permutation canonical_permutation(const Partition& alpha) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : alpha.parts()) {
    std::vector<int> cycle(part);
    std::iota(cycle.begin(), cycle.end(), next);
    next += part;
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(alpha.size(), cycles);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace hurwitz
