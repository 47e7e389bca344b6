#include <doctest.h>

#include "hurwitz/permutation.hpp"

using namespace hurwitz;

TEST_CASE("cycle_type") {
  CHECK(cycle_type(Permutation::identity(4)).parts() == std::vector<int>{1, 1, 1, 1});
  CHECK(cycle_type(Permutation({2, 1, 3})).parts() == std::vector<int>{2, 1});
  CHECK(cycle_type(Permutation({2, 3, 4, 1})).parts() == std::vector<int>{4});
}

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::transposition(3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("composition applies the right factor first") {
  auto a = Permutation::transposition(3, 1, 2);
  auto b = Permutation::transposition(3, 2, 3);
  auto ab = a * b;
  CHECK(ab(3) == a(b(3)));
  CHECK(ab(3) == 1);
  CHECK((ab * ab.inverse()).is_identity());
  CHECK(cycle_type(ab).parts() == std::vector<int>{3});
}

TEST_CASE("canonical representatives") {
  auto pi = canonical_permutation(Partition({3, 2}));
  CHECK(pi == Permutation::from_cycles(5, {{1, 2, 3}, {4, 5}}));
  for (int n = 1; n <= 7; ++n)
    for (const auto& alpha : partitions_of(n)) CHECK(cycle_type(canonical_permutation(alpha)) == alpha);
}

TEST_CASE("all_permutations") {
  auto s4 = all_permutations(4);
  CHECK(s4.size() == 24);
  CHECK(std::is_sorted(s4.begin(), s4.end()));
  CHECK(std::adjacent_find(s4.begin(), s4.end()) == s4.end());
}
