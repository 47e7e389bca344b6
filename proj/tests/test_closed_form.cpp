#include <doctest.h>

#include "hurwitz/closed_form.hpp"

using namespace hurwitz;

TEST_CASE("h_alpha values") {
  CHECK(h_alpha(Partition({1})).value == 1);
  CHECK(h_alpha(Partition({3})).value == 3);
  CHECK(h_alpha(Partition({2, 2})).value == 96);
  CHECK(h_alpha(Partition({1, 1})).value == 1);
  CHECK(h_alpha(Partition({2, 2})).kind == CountKind::H);
  CHECK_FALSE(h_alpha(Partition({2, 2})).m.has_value());
}

TEST_CASE("h_alpha of an n-cycle is n^(n-2)") {
  for (int n = 1; n <= 12; ++n) {
    // n^(n-2) as a rational so that n = 1 gives 1.
    CHECK(h_alpha(Partition({n})).value == rpow(Rational(n), n - 2));
  }
}

TEST_CASE("g_alpha values") {
  CHECK(g_alpha(Partition({1}), 3).value == 1);
  CHECK(g_alpha(Partition({2}), 2).value == 2);
  CHECK(g_alpha(Partition({3}), 2).value == 5);
  CHECK(g_alpha(Partition({1, 1}), 2).value == 1);
  CHECK(*g_alpha(Partition({3}), 2).m == 2);
  CHECK_THROWS_AS(g_alpha(Partition({3}), 1), std::invalid_argument);
  CHECK_THROWS_AS(g_alpha(Partition({3}), 0), std::invalid_argument);
}

TEST_CASE("balanced_tree_prediction") {
  CHECK(balanced_tree_prediction(Partition({2}), 2).value == 2);
  CHECK(balanced_tree_prediction(Partition({3}), 2).value == 5);
  CHECK(balanced_tree_prediction(Partition({1, 1}), 2).value == 1);
  CHECK(balanced_tree_prediction(Partition({1, 1}), 2).kind == CountKind::BalancedTrees);
}

TEST_CASE("integrality for every alpha |- n <= 12 and m in 2..5") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& alpha : partitions_of(n)) {
      CHECK(is_integral(h_alpha(alpha).value));
      for (int m = 2; m <= 5; ++m) {
        CHECK(is_integral(g_alpha(alpha, m).value));
        CHECK(is_integral(balanced_tree_prediction(alpha, m).value));
      }
    }
}
