#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/exact.hpp"

namespace hurwitz {

/// An integer partition, stored with parts weakly decreasing.
///
/// The multiplicity map (part size i -> d_i) is cached on construction.
/// Ordering is lexicographic on the decreasing parts, so a descending sort
/// gives the canonical reverse-lexicographic order used for output.
class Partition {
 public:
  Partition() = default;

  /// Parts may be given in any order; all must be >= 1.
  explicit Partition(std::vector<int> parts);

  /// Parses "3,1,1" (any order, whitespace tolerated).
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int multiplicity(int part) const;
  const std::map<int, int>& multiplicities() const { return multiplicities_; }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::map<int, int> multiplicities_;
  int size_ = 0;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...,
/// (1^n). n = 0 yields the single empty partition.
std::vector<Partition> partitions_of(int n);

/// Size of the conjugacy class of S_n with cycle type alpha,
/// n! / prod_i i^{d_i} d_i!.
Integer class_size(const Partition& alpha);

/// Total cycle count of the m arbitrary factors in a minimal factorization,
/// (m-1)n - l + 2.
long c_alpha(const Partition& alpha, int m);

/// Number of transpositions in a minimal factorization, n + l - 2.
int r_alpha(const Partition& alpha);

/// Genus g from sum_{i=0}^k (n - l(alpha_i)) = 2n - 2 + 2g. May be
/// fractional or negative; callers filter.
Rational genus_of(const Partition& alpha, std::span<const Partition> factor_types);

}  // namespace hurwitz
