#include <doctest.h>

#include <map>

#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"

using namespace hurwitz;

namespace {

// Independent partition count via the standard coin-change recurrence.
long partition_count(int n) {
  std::vector<long> ways(n + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
  return ways[n];
}

// Class sizes by scanning all of S_n.
std::map<Partition, long> class_sizes_by_scan(int n) {
  std::map<Partition, long> sizes;
  for (const auto& p : all_permutations(n)) ++sizes[cycle_type(p)];
  return sizes;
}

}  // namespace

TEST_CASE("partitions_of in reverse lexicographic order") {
  auto one = partitions_of(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parts() == std::vector<int>{1});

  auto four = partitions_of(4);
  std::vector<std::vector<int>> expected = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  REQUIRE(four.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK(four[k].parts() == expected[k]);

  CHECK(partitions_of(8).size() == 22);
  for (int n = 1; n <= 15; ++n) CHECK(static_cast<long>(partitions_of(n).size()) == partition_count(n));

  auto empty = partitions_of(0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].length() == 0);
  CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}

TEST_CASE("partition invariants hold for every generated partition") {
  for (int n = 1; n <= 12; ++n) {
    auto list = partitions_of(n);
    for (std::size_t k = 0; k < list.size(); ++k) {
      const auto& a = list[k];
      int sum = 0, count = 0, weighted = 0;
      for (auto [i, d] : a.multiplicities()) {
        count += d;
        weighted += i * d;
      }
      for (std::size_t j = 0; j < a.parts().size(); ++j) {
        sum += a.parts()[j];
        CHECK(a.parts()[j] >= 1);
        if (j) CHECK(a.parts()[j - 1] >= a.parts()[j]);
      }
      CHECK(sum == n);
      CHECK(a.size() == n);
      CHECK(count == a.length());
      CHECK(weighted == n);
      if (k) CHECK(list[k - 1] > list[k]);
    }
  }
}

TEST_CASE("parse is lenient and output canonical") {
  auto a = Partition::parse(" 1, 3 ,1");
  CHECK(a.parts() == std::vector<int>{3, 1, 1});
  CHECK(a.to_string() == "3,1,1");
  CHECK(a.multiplicity(1) == 2);
  CHECK(a.multiplicity(2) == 0);
  CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,0"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("class_size matches a scan of the symmetric group") {
  CHECK(class_size(Partition({1, 1, 1, 1, 1})) == 1);
  CHECK(class_size(Partition({3})) == 2);
  CHECK(class_size(Partition({2, 2})) == 3);
  for (int n = 1; n <= 6; ++n)
    for (auto [alpha, size] : class_sizes_by_scan(n)) CHECK(class_size(alpha) == size);
}

TEST_CASE("class sizes sum to n!") {
  for (int n = 1; n <= 10; ++n) {
    Integer total = 0;
    for (const auto& a : partitions_of(n)) total += class_size(a);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("c_alpha and r_alpha") {
  CHECK(c_alpha(Partition({1}), 2) == 2);
  CHECK(c_alpha(Partition({2, 1}), 2) == 3);
  CHECK(c_alpha(Partition({3}), 3) == 7);
  CHECK(r_alpha(Partition({1})) == 0);
  CHECK(r_alpha(Partition({3})) == 2);
  CHECK(r_alpha(Partition({2, 2})) == 4);
}

TEST_CASE("genus_of") {
  std::vector<Partition> two_transpositions = {Partition({2, 1}), Partition({2, 1})};
  CHECK(genus_of(Partition({3}), two_transpositions) == 0);
  std::vector<Partition> swaps = {Partition({2}), Partition({2})};
  CHECK(genus_of(Partition({1, 1}), swaps) == 0);
  std::vector<Partition> six(6, Partition({2, 1, 1}));
  CHECK(genus_of(Partition({2, 2}), six) == 1);
  // Odd total gives a half-integer rather than an error.
  std::vector<Partition> one = {Partition({2, 1})};
  CHECK(genus_of(Partition({3}), one) == frac(-1, 2));
  std::vector<Partition> mixed = {Partition({2})};
  CHECK_THROWS_AS(genus_of(Partition({3}), mixed), std::invalid_argument);
}

TEST_CASE("genus 0 bookkeeping for transpositions and arbitrary factors") {
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> transposition(n - 1, 1);
    transposition[0] = 2;
    const Partition tau(transposition);
    for (const auto& alpha : partitions_of(n)) {
      std::vector<Partition> taus(r_alpha(alpha), tau);
      CHECK(genus_of(alpha, taus) == 0);

      for (int m = 1; m <= 5; ++m) {
        // Spread c(alpha, m) cycles over m factors, each with 1..n cycles.
        long cycles = c_alpha(alpha, m);
        if (cycles < m || cycles > static_cast<long>(m) * n) continue;
        std::vector<Partition> factors;
        for (int k = 0; k < m; ++k) {
          long give = std::min<long>(n, cycles - (m - 1 - k));
          cycles -= give;
          std::vector<int> parts(give, 1);
          parts[0] = n - static_cast<int>(give) + 1;
          factors.emplace_back(parts);
        }
        long total = 0;
        for (const auto& f : factors) total += f.length();
        REQUIRE(total == c_alpha(alpha, m));
        CHECK(genus_of(alpha, factors) == 0);
      }
    }
  }
}
