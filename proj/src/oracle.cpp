#include "hurwitz/oracle.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  int components;

  explicit DisjointSets(int n) : parent(n + 1), components(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
};

// Transposition DFS on raw image arrays. product holds tau_1 ... tau_k; a
// branch is cut once the remaining transpositions cannot reach the target:
// reaching it needs at least n - cycles(product^{-1} target) more.
class TranspositionSearch {
 public:
  TranspositionSearch(const Permutation& target, int factors)
      : n_(target.degree()), factors_(factors), target_(target.images().begin(), target.images().end()) {
    for (int a = 1; a <= n_; ++a)
      for (int b = a + 1; b <= n_; ++b) pairs_.emplace_back(a, b);
    product_.resize(n_);
    std::iota(product_.begin(), product_.end(), 1);
    chosen_.reserve(factors);
  }

  std::uint64_t run() {
    count_ = 0;
    descend(0);
    return count_;
  }

 private:
  // Cycles of product^{-1} * target.
  int remaining_distance() const {
    std::vector<int> inv(n_);
    for (int j = 0; j < n_; ++j) inv[product_[j] - 1] = j + 1;
    std::vector<bool> seen(n_ + 1, false);
    int cycles = 0;
    for (int s = 1; s <= n_; ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (int j = s; !seen[j]; j = inv[target_[j - 1] - 1]) seen[j] = true;
    }
    return n_ - cycles;
  }

  bool transitive() const {
    DisjointSets sets(n_);
    for (auto idx : chosen_) sets.unite(pairs_[idx].first, pairs_[idx].second);
    return sets.components == 1;
  }

  void descend(int depth) {
    const int distance = remaining_distance();
    const int left = factors_ - depth;
    if (distance > left || (left - distance) % 2 != 0) return;
    if (left == 0) {
      if (transitive()) ++count_;
      return;
    }
    for (std::size_t idx = 0; idx < pairs_.size(); ++idx) {
      auto [a, b] = pairs_[idx];
      // Right-multiplying by (a b) swaps the images of a and b.
      std::swap(product_[a - 1], product_[b - 1]);
      chosen_.push_back(idx);
      descend(depth + 1);
      chosen_.pop_back();
      std::swap(product_[a - 1], product_[b - 1]);
    }
  }

  int n_;
  int factors_;
  std::vector<int> target_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> product_;
  std::vector<std::size_t> chosen_;
  std::uint64_t count_ = 0;
};

double tuple_cost(int n, int m) { return std::pow(std::tgamma(n + 1.0), m - 1); }

void check_arbitrary_budget(int n, int m, const OracleBudget& budget) {
  if (m < 1) throw std::invalid_argument("number of factors must be >= 1");
  const double cost = tuple_cost(n, m);
  if (cost > budget.max_tuples) {
    std::ostringstream msg;
    msg << "arbitrary-factor enumeration refused: cost (n!)^(m-1) = (" << n << "!)^" << (m - 1) << " = " << cost
        << " exceeds budget " << budget.max_tuples;
    throw BudgetExceeded(msg.str());
  }
}

}  // namespace

bool is_transitive(std::span<const Permutation> perms, int n) {
  DisjointSets sets(n);
  for (const auto& p : perms) {
    if (p.degree() != n) throw std::invalid_argument("is_transitive: permutation of the wrong degree");
    for (int j = 1; j <= n; ++j) sets.unite(j, p(j));
  }
  return n <= 1 || sets.components == 1;
}

std::uint64_t count_transposition_factorizations_of(const Permutation& target, int factors,
                                                    const OracleBudget& budget) {
  const int n = target.degree();
  if (n > budget.max_n_transpositions) {
    std::ostringstream msg;
    msg << "transposition enumeration refused: n = " << n << " exceeds max-n " << budget.max_n_transpositions
        << " (cost bound (n(n-1)/2)^r = " << std::pow(n * (n - 1) / 2.0, factors) << ")";
    throw BudgetExceeded(msg.str());
  }
  if (factors < 0) throw std::invalid_argument("negative factor count");
  return TranspositionSearch(target, factors).run();
}

FactorizationCount count_factorizations_transpositions(const Partition& alpha, const OracleBudget& budget) {
  const int r = r_alpha(alpha);
  return {alpha, FactorMode::transpositions, r,
          count_transposition_factorizations_of(canonical_permutation(alpha), r, budget)};
}

void for_each_factorization(const Permutation& target, int m, const std::function<void(const FactorTuple&)>& visit,
                            const OracleBudget& budget) {
  const int n = target.degree();
  check_arbitrary_budget(n, m, budget);
  const auto group = all_permutations(n);
  std::vector<Permutation> factors(m);
  std::vector<std::size_t> index(m - 1, 0);
  std::vector<int> cycles(group.size());
  for (std::size_t g = 0; g < group.size(); ++g) cycles[g] = group[g].cycle_count();

  // Odometer over the first m-1 factors; the last is forced.
  while (true) {
    Permutation prefix = Permutation::identity(n);
    int total = 0;
    for (int k = 0; k < m - 1; ++k) {
      factors[k] = group[index[k]];
      prefix = prefix * factors[k];
      total += cycles[index[k]];
    }
    factors[m - 1] = prefix.inverse() * target;
    total += factors[m - 1].cycle_count();
    visit(FactorTuple{factors, total, is_transitive(factors, n)});

    int k = m - 2;
    while (k >= 0 && ++index[k] == group.size()) index[k--] = 0;
    if (k < 0) break;
  }
}

std::uint64_t count_arbitrary_factorizations_of(const Permutation& target, int m, const OracleBudget& budget) {
  const Partition alpha = cycle_type(target);
  const long wanted = c_alpha(alpha, m);
  std::uint64_t count = 0;
  for_each_factorization(
      target, m,
      [&](const FactorTuple& t) {
        if (t.total_cycles == wanted && t.transitive) ++count;
      },
      budget);
  return count;
}

FactorizationCount count_factorizations_arbitrary(const Partition& alpha, int m, const OracleBudget& budget) {
  return {alpha, FactorMode::arbitrary, m, count_arbitrary_factorizations_of(canonical_permutation(alpha), m, budget)};
}

std::vector<std::pair<Partition, FactorizationCount>> census(int n, FactorMode mode, std::optional<int> m,
                                                             const OracleBudget& budget) {
  if (n < 1) throw std::invalid_argument("census: n must be >= 1");
  if (mode == FactorMode::arbitrary && !m) throw std::invalid_argument("census: arbitrary mode needs m");
  std::vector<std::pair<Partition, FactorizationCount>> out;
  for (const auto& alpha : partitions_of(n)) {
    out.emplace_back(alpha, mode == FactorMode::transpositions ? count_factorizations_transpositions(alpha, budget)
                                                               : count_factorizations_arbitrary(alpha, *m, budget));
  }
  return out;
}

}  // namespace hurwitz
