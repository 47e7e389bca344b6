#pragma once

#include <optional>

#include "hurwitz/partition.hpp"

namespace hurwitz {

enum class CountKind { H, G, BalancedTrees };

const char* count_kind_name(CountKind kind);

struct CountResult {
  Rational value;
  Partition alpha;
  std::optional<int> m;
  CountKind kind;
};

/// Minimal transitive factorizations of a fixed permutation of type alpha
/// into n + l - 2 transpositions:
///   n^{l-3} (n+l-2)! prod_i (i^i / (i-1)!)^{d_i}.
CountResult h_alpha(const Partition& alpha);

/// Minimal transitive factorizations of a fixed permutation of type alpha
/// into m arbitrary factors:
///   m ((m-1)n-1)! / ((m-1)n-l+2)! prod_i (i C(mi-1, i))^{d_i}.
/// Requires m >= 2.
CountResult g_alpha(const Partition& alpha, int m);

/// Balanced planted m-Eulerian trees of type alpha, |C_alpha| G_alpha(m) / (n-1)!.
CountResult balanced_tree_prediction(const Partition& alpha, int m);

}  // namespace hurwitz
