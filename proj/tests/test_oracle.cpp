#include <doctest.h>

#include <random>

#include "hurwitz/closed_form.hpp"
#include "hurwitz/oracle.hpp"

using namespace hurwitz;

TEST_CASE("is_transitive") {
  std::vector<Permutation> swap12 = {Permutation::transposition(2, 1, 2)};
  CHECK(is_transitive(swap12, 2));
  CHECK(is_transitive({}, 1));
  CHECK_FALSE(is_transitive({}, 2));
  std::vector<Permutation> split = {Permutation::transposition(4, 1, 2), Permutation::transposition(4, 3, 4)};
  CHECK_FALSE(is_transitive(split, 4));
  split.push_back(Permutation::transposition(4, 2, 3));
  CHECK(is_transitive(split, 4));
}

TEST_CASE("transposition counts") {
  CHECK(count_factorizations_transpositions(Partition({2})).count == 1);
  CHECK(count_factorizations_transpositions(Partition({1, 1})).count == 1);
  CHECK(count_factorizations_transpositions(Partition({3})).count == 3);
  CHECK(count_factorizations_transpositions(Partition({1})).count == 1);
  auto r = count_factorizations_transpositions(Partition({2, 2}));
  CHECK(r.count == 96);
  CHECK(r.factors == 4);
  CHECK(r.mode == FactorMode::transpositions);
}

TEST_CASE("arbitrary counts") {
  CHECK(count_factorizations_arbitrary(Partition({3}), 2).count == 5);
  CHECK(count_factorizations_arbitrary(Partition({2}), 2).count == 2);
  CHECK(count_factorizations_arbitrary(Partition({1}), 5).count == 1);
  CHECK(count_factorizations_arbitrary(Partition({1}), 1).count == 1);
}

TEST_CASE("oracle agrees with closed forms") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& alpha : partitions_of(n))
      CHECK(Rational(static_cast<unsigned long>(count_factorizations_transpositions(alpha).count)) ==
            h_alpha(alpha).value);
  for (int n = 1; n <= 4; ++n)
    for (const auto& alpha : partitions_of(n))
      for (int m = 2; m <= 3; ++m)
        CHECK(Rational(static_cast<unsigned long>(count_factorizations_arbitrary(alpha, m).count)) ==
              g_alpha(alpha, m).value);
}

TEST_CASE("m = 1 counts only single cycles") {
  // The only factor is the target, with l cycles against c(alpha, 1) = 2 - l.
  CHECK(count_factorizations_arbitrary(Partition({3}), 1).count == 1);
  CHECK(count_factorizations_arbitrary(Partition({2, 1}), 1).count == 0);
  CHECK(count_factorizations_arbitrary(Partition({1, 1}), 1).count == 0);
}

TEST_CASE("Riemann-Hurwitz: genus 0 exactly when the cycle count is c(alpha, m)") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& alpha : partitions_of(n))
      for (int m = 1; m <= 3; ++m) {
        const auto target = canonical_permutation(alpha);
        for_each_factorization(target, m, [&](const FactorTuple& t) {
          Permutation product = Permutation::identity(n);
          std::vector<Partition> types;
          for (const auto& f : t.factors) {
            product = product * f;
            types.push_back(cycle_type(f));
          }
          REQUIRE(product == target);
          CHECK((genus_of(alpha, types) == 0) == (t.total_cycles == c_alpha(alpha, m)));
        });
      }
}

TEST_CASE("counts do not depend on the class representative") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 4; ++n)
    for (const auto& alpha : partitions_of(n)) {
      auto group = all_permutations(n);
      const auto& sigma = group[std::uniform_int_distribution<std::size_t>(0, group.size() - 1)(rng)];
      const Permutation conjugate = sigma * canonical_permutation(alpha) * sigma.inverse();
      CHECK(count_transposition_factorizations_of(conjugate, r_alpha(alpha)) ==
            count_factorizations_transpositions(alpha).count);
      for (int m = 2; m <= 3; ++m)
        CHECK(count_arbitrary_factorizations_of(conjugate, m) == count_factorizations_arbitrary(alpha, m).count);
    }
}

TEST_CASE("budgets refuse instead of running") {
  CHECK_THROWS_AS(count_factorizations_transpositions(Partition({7})), BudgetExceeded);
  OracleBudget tight;
  tight.max_n_transpositions = 3;
  CHECK_THROWS_AS(count_factorizations_transpositions(Partition({4}), tight), BudgetExceeded);
  CHECK_THROWS_AS(count_factorizations_arbitrary(Partition({6}), 4), BudgetExceeded);
  try {
    count_factorizations_arbitrary(Partition({6}), 4);
  } catch (const BudgetExceeded& e) {
    CHECK(std::string(e.what()).find("(n!)^(m-1)") != std::string::npos);
  }
  // Defaults cover n <= 4 with m <= 3 and n <= 3 with m <= 4.
  CHECK_NOTHROW(count_factorizations_arbitrary(Partition({2, 2}), 3));
  CHECK_NOTHROW(count_factorizations_arbitrary(Partition({3}), 4));
}

TEST_CASE("census") {
  auto t2 = census(2, FactorMode::transpositions);
  REQUIRE(t2.size() == 2);
  CHECK(t2[0].first == Partition({2}));
  CHECK(t2[0].second.count == 1);
  CHECK(t2[1].second.count == 1);

  auto a3 = census(3, FactorMode::arbitrary, 2);
  REQUIRE(a3.size() == 3);
  CHECK(a3[0].second.count == 5);
  for (const auto& [alpha, fc] : a3) CHECK(Rational(static_cast<unsigned long>(fc.count)) == g_alpha(alpha, 2).value);

  for (auto mode : {FactorMode::transpositions, FactorMode::arbitrary}) {
    auto one = census(1, mode, 3);
    REQUIRE(one.size() == 1);
    CHECK(one[0].second.count == 1);
  }
  CHECK_THROWS_AS(census(3, FactorMode::arbitrary), std::invalid_argument);
}
