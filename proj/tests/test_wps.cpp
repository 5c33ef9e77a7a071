#include <doctest.h>

#include "dpc/wps.hpp"

using namespace dpc;

TEST_CASE("well-formed spaces") {
  CHECK_FALSE(wellformed_space(WeightedSpace({1, 1, 3})).has_value());
  auto w = wellformed_space(WeightedSpace({2, 2, 3}));
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{0, 1});
  CHECK_FALSE(wellformed_space(WeightedSpace({1, 2, 3, 3, 5})).has_value());
}

TEST_CASE("normal form of quotient singularities") {
  CHECK(normalize_sing(3, 2, 2)->str() == "1/3(1,1)");
  CHECK(normalize_sing(5, 1, 1)->str() == "1/5(1,1)");
  CHECK(normalize_sing(7, 3, 1)->str() == "1/7(1,3)");
  CHECK_FALSE(normalize_sing(1, 4, 9).has_value());
}

TEST_CASE("coordinate strata") {
  auto s = strata_of(WeightedSpace({1, 1, 3}));
  REQUIRE(s.size() == 1);
  CHECK(s[0].support == std::vector<int>{2});
  CHECK(s[0].order == 3);
  CHECK(s[0].transverse == std::vector<int>{1, 1});

  WeightedSpace ws({1, 2, 3, 3, 5});
  std::vector<std::pair<std::vector<int>, int>> got;
  for (const auto& st : strata_of(ws)) got.push_back({st.support, st.order});
  std::vector<std::pair<std::vector<int>, int>> want{{{1}, 2}, {{2}, 3}, {{3}, 3}, {{4}, 5}, {{2, 3}, 3}};
  CHECK(got == want);

  CHECK(strata_of(WeightedSpace({1, 1, 1, 1})).empty());
}

TEST_CASE("baskets merge and sort") {
  auto b = canonical_basket({*normalize_sing(5, 1, 1), *normalize_sing(3, 1, 1), *normalize_sing(3, 2, 2)});
  CHECK(basket_str(b) == "2 x 1/3(1,1), 1/5(1,1)");
}
