#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// A permutation of {1..n}, stored 1-indexed: image(j) for j in 1..n.
class Permutation {
 public:
  Permutation() = default;

  /// images[j-1] is the image of j. Throws unless bijective on {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  /// Builds a permutation on {1..n} from disjoint cycles, e.g. {{1,2,3},{4,5}}.
  static Permutation from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j - 1]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  int cycle_count() const;
  std::vector<std::vector<int>> cycles() const;
  bool is_identity() const;

  /// (a * b)(j) = a(b(j)): the right factor acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Partition cycle_type(const Permutation& pi);

/// Fixed representative of the class C_alpha: cycles filled with consecutive
/// integers, largest part first. (3,2) -> (1 2 3)(4 5).
Permutation canonical_permutation(const Partition& alpha);

/// All n! permutations of {1..n} in lexicographic order of images.
std::vector<Permutation> all_permutations(int n);

}  // namespace hurwitz
