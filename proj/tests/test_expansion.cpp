#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "tspread/binomial.hpp"
#include "tspread/expansion.hpp"
#include "tspread/monomial.hpp"

using namespace tspread;

TEST_CASE("binomial extends by zero") {
  CHECK(binomial(13, 8) == 1287);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 8) == 0);
  CHECK(binomial(-3, 2) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("binomial prefix sums telescope") {
  for (long m = -3; m <= 30; ++m)
    for (unsigned long k = 0; k <= 6; ++k) {
      BigInt direct = 0;
      for (long i = 0; i <= m; ++i) direct += binomial(i, k);
      CHECK(binomial_prefix_sum(m, k) == direct);
    }
}

TEST_CASE("greedy expansion of 2018 in degree 8") {
  auto e = macaulay_expand(2018, 8);
  std::vector<ExpansionTerm> expected = {{13, 8}, {11, 7}, {10, 6}, {9, 5},
                                         {7, 4},  {6, 3},  {5, 2}};
  CHECK(e.terms() == expected);
  CHECK(e.str() == "C(13,8)+C(11,7)+C(10,6)+C(9,5)+C(7,4)+C(6,3)+C(5,2)");
  CHECK(e.value() == 2018);
  CHECK(e.degree() == 8);
  CHECK(e.lowest_position() == 2);
}

TEST_CASE("expansion of small and edge values") {
  CHECK(macaulay_expand(0, 3).terms().empty());
  CHECK(macaulay_expand(0, 3).str() == "0");
  CHECK(macaulay_expand(0, 3).value() == 0);
  CHECK(macaulay_expand(0, 3).lowest_position() == 4);
  CHECK(macaulay_expand(50, 2).str() == "C(10,2)+C(5,1)");
  CHECK(macaulay_expand(1, 1).str() == "C(1,1)");
  CHECK(macaulay_expand(66, 2).str() == "C(12,2)");
  CHECK_THROWS_AS(macaulay_expand(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(macaulay_expand(5, 0), std::invalid_argument);
}

TEST_CASE("expansion is the unique strictly decreasing representation") {
  for (int d = 1; d <= 5; ++d)
    for (long a = 0; a <= 600; a += 7) {
      auto e = macaulay_expand(a, d);
      CHECK(e.value() == a);
      int expected_bottom = d;
      BigInt prev_top;
      bool first = true;
      for (const auto& term : e.terms()) {
        CHECK(term.bottom == expected_bottom);
        --expected_bottom;
        CHECK(term.top >= term.bottom);
        if (!first) CHECK(term.top < prev_top);
        prev_top = term.top;
        first = false;
      }
    }
}

TEST_CASE("classic successor pinned values") {
  CHECK(classic_successor(12, 1) == 66);
  CHECK(classic_successor(50, 2) == 130);
  CHECK(classic_successor(20, 3) == 15);
  CHECK(classic_successor(15, 4) == 6);
  CHECK(classic_successor(0, 3) == 0);
  CHECK(classic_successor(1, 1) == 0);
  CHECK(classic_successor(3, 1) == 3);
}

TEST_CASE("spread successor pinned values") {
  CHECK(t_successor(2018, 8, 3, 28) == 82);
  CHECK(t_successor(7, 2, 3, 7) == 0);
  CHECK(t_successor(4, 2, 2, 6) == 0);
  CHECK(t_successor(18, 2, 2, 8) == 11);
  CHECK(t_successor(3, 1, 2, 6) == 1);
}

TEST_CASE("spread successor endpoints") {
  for (int n = 1; n <= 9; ++n)
    for (int d = 1; d <= 3; ++d)
      for (int t = 1; t <= 3; ++t) {
        CHECK(t_successor(0, d, t, n) == 0);
        CHECK(t_successor(count_tspread(n, d, t), d, t, n) ==
              count_tspread(n, d + 1, t));
      }
}

TEST_CASE("spread successor rejects out-of-range input") {
  CHECK_THROWS_AS(t_successor(9999, 2, 2, 6), std::domain_error);
  CHECK_THROWS_WITH(t_successor(9999, 2, 2, 6), "a exceeds |M_{6,2,2}|");
  CHECK_THROWS_AS(t_successor(1, 0, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(t_successor(1, 2, 0, 6), std::invalid_argument);
}

TEST_CASE("spread one reduces to the classic operator") {
  for (int n = 1; n <= 10; ++n)
    for (int d = 1; d <= 3; ++d) {
      BigInt top = count_tspread(n, d, 1);
      for (BigInt a = 0; a <= top; ++a)
        CHECK(t_successor(a, d, 1, n) == classic_successor(a, d));
    }
}

TEST_CASE("index construction from a complement count") {
  CHECK(indices_from_complement_count(19, 3, 2, 8) == std::vector<int>{1, 3, 5});
  CHECK(indices_from_complement_count(3, 3, 3, 9) == std::vector<int>{2, 5, 8});
  CHECK(indices_from_complement_count(2, 3, 3, 9) == std::vector<int>{2, 5, 9});
  CHECK(indices_from_complement_count(1, 3, 3, 9) == std::vector<int>{2, 6, 9});
  CHECK(indices_from_complement_count(0, 3, 3, 9) == std::vector<int>{3, 6, 9});
  CHECK(indices_from_complement_count(0, 2, 2, 5) == std::vector<int>{3, 5});
  CHECK(indices_from_complement_count(5, 2, 2, 5) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(indices_from_complement_count(6, 2, 2, 5), std::domain_error);
  CHECK_THROWS_AS(indices_from_complement_count(-1, 2, 2, 5), std::domain_error);
}
