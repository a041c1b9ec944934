#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "tspread/lexset.hpp"
#include "tspread/monomial.hpp"

using namespace tspread;

namespace {

Monomial m(const char* s) { return Monomial::parse(s); }

MonomialSet set_of(int n, int d, int t, std::initializer_list<const char*> names) {
  std::vector<Monomial> v;
  for (const char* s : names) v.push_back(m(s));
  return MonomialSet(n, d, t, std::move(v));
}

}  // namespace

TEST_CASE("position below the top of the order") {
  CHECK(complement_count(m("x1x3x5"), 8, 2) == 19);
  CHECK(complement_count(m("x2x5x8"), 9, 3) == 3);
  CHECK(complement_count(m("x1x3x5"), 5, 2) == 0);
  CHECK(complement_count(m("x3x5"), 5, 2) == 0);
  CHECK(complement_count(m("x1x3"), 5, 2) == 5);
  CHECK(complement_count(m("x1"), 4, 1) == 3);
  CHECK_THROWS_AS(complement_count(m("x1x2"), 5, 2), std::domain_error);
  CHECK_THROWS_AS(complement_count(m("x1x7"), 5, 2), std::domain_error);
}

TEST_CASE("complement count inverts the index construction") {
  CHECK(monomial_from_complement_count(19, 8, 3, 2) == m("x1x3x5"));
  CHECK(monomial_from_complement_count(0, 9, 3, 3) == m("x3x6x9"));
  CHECK(monomial_from_complement_count(3, 9, 3, 3) == m("x2x5x8"));
  for (int n = 1; n <= 8; ++n)
    for (int d = 1; d <= 3; ++d)
      for (int t = 1; t <= 3; ++t) {
        auto M = enumerate_tspread(n, d, t);
        for (const auto& u : M.members()) {
          BigInt a = complement_count(u, n, t);
          CHECK(monomial_from_complement_count(a, n, d, t) == u);
        }
      }
}

TEST_CASE("materialized segments are order prefixes") {
  auto M = enumerate_tspread(7, 2, 3);
  BigInt total = count_tspread(7, 2, 3);
  REQUIRE(total == 10);
  for (BigInt s = 0; s <= total; ++s) {
    auto L = materialize(LexSegment{7, 2, 3, s});
    CHECK(L.size() == s);
    CHECK(std::equal(L.members().begin(), L.members().end(), M.members().begin()));
  }
  CHECK(materialize(LexSegment{7, 2, 3, 3}).members() ==
        std::vector<Monomial>{m("x1x4"), m("x1x5"), m("x1x6")});
  CHECK_THROWS_AS(materialize(LexSegment{7, 2, 3, 11}), std::domain_error);
}

TEST_CASE("rank ranges cut out the middle of a segment") {
  CHECK(materialize_range(8, 4, 2, 4, 5) == std::vector<Monomial>{m("x2x4x6x8")});
  CHECK(materialize_range(8, 4, 2, 0, 4) ==
        std::vector<Monomial>{m("x1x3x5x7"), m("x1x3x5x8"), m("x1x3x6x8"),
                              m("x1x4x6x8")});
  CHECK(materialize_range(5, 2, 2, 2, 2).empty());
  CHECK_THROWS_AS(materialize_range(5, 2, 2, 3, 2), std::domain_error);
}

TEST_CASE("shadow inserts one variable in every allowed slot") {
  auto B = set_of(5, 2, 2, {"x1x3", "x1x4", "x1x5", "x2x4"});
  auto S1 = shadow(B, 1);
  CHECK(S1.size() == 8);
  CHECK(S1 == set_of(5, 3, 1,
                     {"x1x2x3", "x1x2x4", "x1x2x5", "x1x3x4", "x1x3x5", "x1x4x5",
                      "x2x3x4", "x2x4x5"}));
  CHECK_FALSE(S1.contains(m("x2x3x5")));

  auto L = set_of(8, 2, 2, {"x1x3", "x1x4", "x1x5"});
  auto S2 = shadow(L);
  CHECK(S2.size() == 9);
  CHECK(S2 == set_of(8, 3, 2,
                     {"x1x3x5", "x1x3x6", "x1x3x7", "x1x3x8", "x1x4x6", "x1x4x7",
                      "x1x4x8", "x1x5x7", "x1x5x8"}));
}

TEST_CASE("shadow edge cases") {
  auto L = set_of(8, 2, 2, {"x1x3"});
  CHECK_THROWS_AS(shadow(L, 0), std::invalid_argument);
  CHECK_THROWS_AS(shadow(L, 3), std::invalid_argument);
  CHECK(shadow(MonomialSet(8, 2, 2)).empty());
  CHECK(shadow(set_of(5, 2, 2, {"x3x5"})).members() ==
        std::vector<Monomial>{m("x1x3x5")});
  CHECK(shadow(set_of(7, 2, 3, {"x3x7"})).empty());
  auto single = shadow(set_of(7, 2, 3, {"x1x4"}));
  CHECK(single.members() == std::vector<Monomial>{m("x1x4x7")});
}

TEST_CASE("largest-index profile") {
  auto B = set_of(5, 2, 2, {"x1x3", "x1x4", "x1x5", "x2x4"});
  auto p = max_index_profile(B);
  CHECK(p.count[3] == 1);
  CHECK(p.count[4] == 2);
  CHECK(p.count[5] == 1);
  CHECK(p.at_most(2) == 0);
  CHECK(p.at_most(3) == 1);
  CHECK(p.at_most(4) == 3);
  CHECK(p.at_most(5) == 4);
  CHECK(p.at_most(99) == 4);
  CHECK(p.at_most(0) == 0);
}

TEST_CASE("profile of a shadow shifts the cumulative profile by the spread") {
  auto B = set_of(8, 2, 2, {"x1x3", "x1x4", "x1x5", "x2x4"});
  auto S = shadow(B);
  auto pb = max_index_profile(B);
  auto ps = max_index_profile(S);
  for (int i = 1; i <= 8; ++i) CHECK(ps.count[static_cast<std::size_t>(i)] == pb.at_most(i - 2));
}

TEST_CASE("shadow size by the profile formula") {
  auto B = set_of(5, 2, 2, {"x1x3", "x1x4", "x1x5", "x2x4"});
  CHECK(shadow_size_by_formula(B) == shadow(B).size());
  CHECK(shadow_size_by_formula(MonomialSet(6, 2, 2)) == 0);
  CHECK_THROWS_AS(shadow_size_by_formula(set_of(5, 2, 2, {"x2x4"})),
                  std::domain_error);
}

TEST_CASE("lex segment shadow size without materializing") {
  CHECK(lex_shadow_size(8, 2, 2, 3) == 9);
  CHECK(lex_shadow_size(7, 2, 3, 3) == 1);
  CHECK(lex_shadow_size(5, 2, 2, 0) == 0);
  for (int n = 1; n <= 8; ++n)
    for (int d = 1; d <= 3; ++d)
      for (int t = 1; t <= 3; ++t) {
        BigInt total = count_tspread(n, d, t);
        for (BigInt s = 0; s <= total; ++s)
          CHECK(lex_shadow_size(n, d, t, s) ==
                shadow(materialize(LexSegment{n, d, t, s}), t).size());
      }
  CHECK_THROWS_AS(lex_shadow_size(5, 2, 2, 99), std::domain_error);
}

TEST_CASE("prefix test") {
  CHECK(is_lex_set(set_of(3, 2, 1, {"x1x2", "x1x3", "x2x3"})));
  CHECK_FALSE(is_lex_set(set_of(4, 2, 1, {"x1x2", "x1x3", "x2x3"})));
  CHECK_FALSE(is_lex_set(set_of(4, 2, 2, {"x1x3", "x2x4"})));
  CHECK(is_lex_set(set_of(4, 2, 2, {"x1x3", "x1x4"})));
  CHECK(is_lex_set(MonomialSet(4, 2, 2)));
}

TEST_CASE("exchanges lower one index at a time") {
  auto ex = stable_exchanges(m("x2x4x6"), 2);
  CHECK(ex == std::vector<Monomial>{m("x1x4x6")});
  auto ex35 = stable_exchanges(m("x3x5"), 2);
  CHECK(ex35 == std::vector<Monomial>{m("x1x5"), m("x2x5"), m("x1x3")});
  auto ex1 = stable_exchanges(m("x2x4"), 1);
  CHECK(ex1 == std::vector<Monomial>{m("x1x4"), m("x1x2"), m("x2x3")});
  CHECK(stable_exchanges(m("x1x3"), 2).empty());
  CHECK(stable_exchanges(m("x1"), 1).empty());
}

TEST_CASE("strong stability closes under exchanges") {
  CHECK(is_strongly_stable_set(set_of(5, 2, 2, {"x1x3", "x1x4", "x1x5", "x2x4"})));
  CHECK_FALSE(is_strongly_stable_set(set_of(5, 2, 2, {"x2x4"})));
  CHECK(is_strongly_stable_set(MonomialSet(5, 2, 2)));
  CHECK(is_strongly_stable_set(set_of(5, 2, 2, {"x1x3"})));
  CHECK_FALSE(is_strongly_stable_set(set_of(5, 2, 2, {"x1x3", "x2x4"})));
}

TEST_CASE("every lex set is strongly stable") {
  for (int n = 1; n <= 7; ++n)
    for (int d = 1; d <= 3; ++d)
      for (int t = 1; t <= 3; ++t) {
        BigInt total = count_tspread(n, d, t);
        for (BigInt s = 0; s <= total; ++s) {
          auto L = materialize(LexSegment{n, d, t, s});
          CHECK(is_lex_set(L));
          CHECK(is_strongly_stable_set(L));
        }
      }
}
