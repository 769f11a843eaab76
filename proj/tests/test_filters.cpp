#include "doctest.h"

#include <algorithm>
#include <vector>

#include "brl/constructions.hpp"
#include "brl/filters.hpp"

using namespace brl;

namespace {

ElementSet members_by_name(const Algebra& a, const std::vector<std::string>& names) {
  ElementSet s(a.size());
  for (const auto& n : names) s.add(*a.element_by_name(n));
  return s;
}

}  // namespace

TEST_CASE("principal filters of the nine element example") {
  Algebra w9 = make_w9();
  CHECK(principal_filter(w9, w9.top()).members == ElementSet::single(9, 0));
  CHECK(principal_filter(w9, 1).members == members_by_name(w9, {"T", "1", "2", "3"}));
  // 4^3 and 6^3 both vanish, so their filters are improper
  CHECK(principal_filter(w9, 4).members == ElementSet::full(9));
  CHECK(principal_filter(w9, 6).members == ElementSet::full(9));
  CHECK(generate_filter(w9, {}).members == ElementSet::single(9, 0));
  CHECK(generate_filter(w9, {2, 3}).members == members_by_name(w9, {"T", "1", "2", "3"}));

  std::vector<Filter> all = all_filters(w9);
  REQUIRE(all.size() == 3);
  CHECK(all[0].count() == 1);
  CHECK(all[1].count() == 4);
  CHECK(all[2].count() == 9);
  CHECK(all[1].generator == 3);
  CHECK(all[0].proper());
  CHECK_FALSE(all[2].proper());
  CHECK(all == all_filters_exhaustive(w9));
}

TEST_CASE("filter counts across the examples") {
  CHECK(all_filters(make_lukasiewicz(2)).size() == 2);
  CHECK(all_filters(make_nogap5()).size() == 5);
  CHECK(all_filters(direct_product(make_lukasiewicz(2), make_lukasiewicz(2))).size() == 4);
  CHECK(all_filters(direct_product(make_w9(), make_lukasiewicz(2))).size() == 6);
  CHECK_THROWS_AS(all_filters_exhaustive(direct_product(make_w9(), make_lukasiewicz(2))),
                  TooLarge);
}

TEST_CASE("congruence classes of the radical filter") {
  Algebra w9 = make_w9();
  Filter rad = radical(w9);
  CHECK(rad.members == members_by_name(w9, {"T", "1", "2", "3"}));

  Congruence c = congruence_of(rad);
  REQUIRE(c.classes.size() == 3);
  CHECK(c.classes[0] == members_by_name(w9, {"T", "1", "2", "3"}));
  CHECK(c.classes[1] == members_by_name(w9, {"4", "5"}));
  CHECK(c.classes[2] == members_by_name(w9, {"6", "7", "F"}));
  CHECK(c.related(4, 5));
  CHECK_FALSE(c.related(3, 4));
}

TEST_CASE("quotient by the radical is the three element chain") {
  Algebra w9 = make_w9();
  QuotientResult q = quotient(radical(w9));
  CHECK(q.algebra.size() == 3);
  CHECK(q.algebra.name() == "W9/3");
  CHECK(is_isomorphic(q.algebra, make_lukasiewicz(2)));
  CHECK(q.projection[w9.top()] == q.algebra.top());
  CHECK(q.projection[4] == q.projection[5]);
  CHECK(q.projection[8] == q.algebra.bot());
}

TEST_CASE("prime and maximal filters") {
  Algebra w9 = make_w9();
  std::vector<Filter> all = all_filters(w9);
  CHECK(is_prime(all[0]));
  CHECK(is_prime(all[1]));
  CHECK_FALSE(is_prime(all[2]));
  CHECK_FALSE(is_maximal(all[0]));
  CHECK(is_maximal(all[1]));
  CHECK(prime_filters(w9).size() == 2);
  CHECK(maximal_filters(w9).size() == 1);
  CHECK(minimal_prime_filters(w9).size() == 1);
  CHECK(minimal_prime_filters(w9)[0].count() == 1);

  Algebra n5 = make_nogap5();
  std::vector<Filter> maxes = maximal_filters(n5);
  REQUIRE(maxes.size() == 2);
  CHECK(maxes[0].members == members_by_name(n5, {"T", "c", "a"}));
  CHECK(maxes[1].members == members_by_name(n5, {"T", "c", "b"}));
  CHECK(radical(n5).members == members_by_name(n5, {"T", "c"}));
}

TEST_CASE("radical membership via the multiple-of-power formula") {
  for (const Algebra& a : {make_w9(), make_nogap5(), make_lukasiewicz(3)}) {
    Filter rad = radical(a);
    for (Element x = 0; x < a.size(); ++x)
      CHECK(rad.contains(x) == radical_formula_holds(a, x));
  }
  for (int k : {1, 2, 3}) CHECK(is_k_radical(make_w9(), k));
}

TEST_CASE("stone filters come from the skeleton") {
  Algebra w9 = make_w9();
  std::vector<Filter> stone = stone_filters(w9);
  REQUIRE(stone.size() == 2);
  CHECK(stone[0].count() == 1);
  CHECK(stone[1].count() == 9);
  std::vector<Filter> ultra = stone_ultrafilters(w9);
  REQUIRE(ultra.size() == 1);
  CHECK(ultra[0].members == ElementSet::single(9, 0));

  Algebra prod = direct_product(make_lukasiewicz(2), make_lukasiewicz(2));
  CHECK(stone_filters(prod).size() == 4);
  CHECK(stone_ultrafilters(prod).size() == 2);
}

TEST_CASE("the trivial algebra has one improper filter and a full radical") {
  Algebra one("one", {"T"}, 0, 0, Table{0}, Relation{1});
  std::vector<Filter> all = all_filters(one);
  REQUIRE(all.size() == 1);
  CHECK_FALSE(all[0].proper());
  CHECK(radical(one).members == ElementSet::full(1));
  CHECK(maximal_filters(one).empty());
  CHECK(stone_ultrafilters(one).empty());
}
