#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

enum class FactorMode { transpositions, arbitrary };

struct OracleBudget {
  /// Largest n accepted for transposition factorizations.
  int max_n_transpositions = 6;
  /// Largest (n!)^{m-1} accepted for arbitrary factorizations.
  double max_tuples = 2.0e6;
};

struct FactorizationCount {
  Partition alpha;
  FactorMode mode;
  int factors;  // r = n+l-2 transpositions, or m arbitrary factors
  std::uint64_t count;
  int genus = 0;
};

/// True iff the group generated by perms acts transitively on {1..n}.
/// Union-find over the cycles of the generators; the group is never expanded.
bool is_transitive(std::span<const Permutation> perms, int n);

/// Ordered tuples of r = n+l-2 transpositions whose product is target and
/// which generate a transitive group. Defaults to canonical_permutation(alpha).
FactorizationCount count_factorizations_transpositions(const Partition& alpha, const OracleBudget& budget = {});
std::uint64_t count_transposition_factorizations_of(const Permutation& target, int factors,
                                                    const OracleBudget& budget = {});

/// Ordered tuples (pi_1..pi_m) with product target, total cycle count
/// c(alpha, m) and a transitive generated group.
FactorizationCount count_factorizations_arbitrary(const Partition& alpha, int m, const OracleBudget& budget = {});
std::uint64_t count_arbitrary_factorizations_of(const Permutation& target, int m, const OracleBudget& budget = {});

/// One factorization seen by for_each_factorization.
struct FactorTuple {
  std::span<const Permutation> factors;
  int total_cycles;
  bool transitive;
};

/// Visits every tuple (pi_1..pi_m) in S_n^m with product target, without any
/// cycle-count or transitivity filter.
void for_each_factorization(const Permutation& target, int m, const std::function<void(const FactorTuple&)>& visit,
                            const OracleBudget& budget = {});

/// Counts for every alpha |- n, in canonical order. For transpositions m is
/// ignored.
std::vector<std::pair<Partition, FactorizationCount>> census(int n, FactorMode mode, std::optional<int> m = {},
                                                             const OracleBudget& budget = {});

}  // namespace hurwitz
