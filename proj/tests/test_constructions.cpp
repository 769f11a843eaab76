#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "brl/algebra.hpp"
#include "brl/constructions.hpp"
#include "brl/filters.hpp"
#include "brl/structure.hpp"
#include "doctest.h"

using namespace brl;

TEST_CASE("Lukasiewicz chains") {
  Algebra l3 = make_lukasiewicz(2);
  CHECK(l3.name() == "L3");
  CHECK(l3.size() == 3);
  CHECK(l3.top() == 2);
  CHECK(l3.bot() == 0);
  CHECK(l3.mult(1, 1) == 0);
  CHECK(l3.mult(2, 1) == 1);
  CHECK(l3.arrow(1, 0) == 1);
  CHECK(l3.arrow(2, 1) == 1);
  CHECK(l3.neg(1) == 1);
  CHECK(l3.plus(1, 1) == 2);
  CHECK(verify_axioms(l3).all_hold());
  CHECK(verify_axioms(make_lukasiewicz(5)).all_hold());
  CHECK_THROWS_AS(make_lukasiewicz(0), BrlError);
}

TEST_CASE("W9 tables are residuated") {
  Algebra w9 = make_w9();
  CHECK(w9.size() == 9);
  CHECK(verify_axioms(w9).all_hold());

  // Rebuild from mult and the order alone: the stored arrow must be the
  // derived residuum at all 81 entries.
  std::vector<std::string> names;
  for (Element i = 0; i < w9.size(); ++i) names.push_back(w9.element_name(i));
  Algebra derived("W9d", names, w9.top(), w9.bot(), w9.mult_table(), w9.leq_relation());
  CHECK(derived.arrow_table() == w9.arrow_table());

  Element s6 = *w9.element_by_name("6");
  CHECK(w9.mult(s6, s6) == w9.element_by_name("7"));
}

TEST_CASE("nogap5 is a Heyting algebra") {
  Algebra n5 = make_nogap5();
  CHECK(n5.size() == 5);
  CHECK(verify_axioms(n5).all_hold());
  for (Element x = 0; x < 5; ++x)
    for (Element y = 0; y < 5; ++y) CHECK(n5.mult(x, y) == n5.meet(x, y));
  CHECK(n5.join(*n5.element_by_name("a"), *n5.element_by_name("b")) == n5.element_by_name("c"));
}

TEST_CASE("direct products") {
  Algebra l3 = make_lukasiewicz(2);
  Algebra prod = direct_product(l3, l3);
  CHECK(prod.size() == 9);
  CHECK(prod.name() == "L3xL3");
  CHECK(verify_axioms(prod).all_hold());
  CHECK(prod.element_name(prod.top()) == "(2,2)");
  CHECK(boolean_skeleton(prod).size() == 4);

  Algebra big = direct_product(make_w9(), l3);
  CHECK(big.size() == 27);
  CHECK(verify_axioms(big).all_hold());
}

TEST_CASE("subuniverses of W9") {
  Algebra w9 = make_w9();
  std::vector<ElementSet> subs = all_subuniverses(w9);
  REQUIRE(subs.size() == 5);
  CHECK(subs[0] == ElementSet::of(9, {0, 8}));
  CHECK(subs[1] == ElementSet::of(9, {0, 1, 3, 6, 7, 8}));
  CHECK(subs[2] == ElementSet::of(9, {0, 1, 2, 3, 6, 7, 8}));
  CHECK(subs[3] == ElementSet::of(9, {0, 1, 3, 4, 5, 6, 7, 8}));
  CHECK(subs[4] == ElementSet::full(9));
  for (const ElementSet& s : subs) CHECK(is_subuniverse(w9, s));
  CHECK_FALSE(is_subuniverse(w9, ElementSet::of(9, {0, 2, 8})));

  CHECK(subuniverse_closure(w9, ElementSet::of(9, {4})) ==
        ElementSet::of(9, {0, 1, 3, 4, 5, 6, 7, 8}));
  CHECK(subuniverse_closure(w9, ElementSet(9)) == ElementSet::of(9, {0, 8}));

  Algebra sub = subalgebra_generated(w9, {4}, "gen4");
  CHECK(sub.size() == 8);
  CHECK(verify_axioms(sub).all_hold());
  CHECK_THROWS_AS(restrict_to(w9, ElementSet::of(9, {0, 2, 8}), "bad"), BrlError);
  CHECK_THROWS_AS(all_subuniverses(direct_product(w9, make_lukasiewicz(2))), TooLarge);
}

TEST_CASE("isomorphism search") {
  Algebra w9 = make_w9();
  Algebra l3 = make_lukasiewicz(2);

  auto self = find_isomorphism(w9, w9);
  REQUIRE(self.has_value());
  for (Element x = 0; x < 9; ++x)
    for (Element y = 0; y < 9; ++y) {
      CHECK((*self)[w9.mult(x, y)] == w9.mult((*self)[x], (*self)[y]));
      CHECK((*self)[w9.arrow(x, y)] == w9.arrow((*self)[x], (*self)[y]));
    }

  CHECK(is_isomorphic(quotient(radical(w9)).algebra, l3));
  CHECK_FALSE(is_isomorphic(l3, make_lukasiewicz(3)));
  CHECK_FALSE(is_isomorphic(make_nogap5(), make_lukasiewicz(4)));

  // Same five-element chain, but Godel product vs Lukasiewicz product.
  Algebra g5("G5", {"0", "1", "2", "3", "4"}, 4, 0,
             [] {
               Table t(25);
               for (Element x = 0; x < 5; ++x)
                 for (Element y = 0; y < 5; ++y) t[x * 5 + y] = std::min(x, y);
               return t;
             }(),
             [] {
               Relation r(25);
               for (Element x = 0; x < 5; ++x)
                 for (Element y = 0; y < 5; ++y) r[x * 5 + y] = x <= y;
               return r;
             }());
  CHECK_FALSE(is_isomorphic(g5, make_lukasiewicz(4)));
}

TEST_CASE("homomorphic images of W9") {
  std::vector<Algebra> images = homomorphic_images(make_w9());
  REQUIRE(images.size() == 3);
  CHECK(images[0].size() == 1);
  CHECK(images[1].size() == 3);
  CHECK(images[2].size() == 9);
  CHECK(is_isomorphic(images[1], make_lukasiewicz(2)));
  CHECK(is_isomorphic(images[2], make_w9()));
}

TEST_CASE("corpus") {
  std::vector<Algebra> corpus = corpus_algebras();
  CHECK(corpus.size() == 13);
  std::set<std::string> names;
  for (const Algebra& a : corpus) {
    CAPTURE(a.name());
    CHECK(verify_axioms(a).all_hold());
    names.insert(a.name());
  }
  CHECK(names.size() == corpus.size());
}

TEST_CASE("lex chain elements") {
  CHECK(lex_valid(3, {0, 0}));
  CHECK(lex_valid(3, {3, 0}));
  CHECK(lex_valid(3, {0, 7}));
  CHECK(lex_valid(3, {3, -7}));
  CHECK(lex_valid(3, {1, -1000}));
  CHECK_FALSE(lex_valid(3, {0, -1}));
  CHECK_FALSE(lex_valid(3, {3, 1}));
  CHECK_FALSE(lex_valid(3, {4, 0}));
  CHECK_FALSE(lex_valid(3, {-1, 0}));

  CHECK(lex_mult(3, {2, 1}, {2, 1}) == LexElement{1, 2});
  CHECK(lex_mult(3, {1, 0}, {1, 0}) == LexElement{0, 0});
  CHECK(lex_arrow(3, {2, 1}, {2, 1}) == LexElement{3, 0});
  CHECK(lex_neg(3, {1, 2}) == LexElement{2, -2});
  CHECK(lex_plus(3, {2, 0}, {2, 0}) == LexElement{3, 0});
  CHECK(lex_plus(3, {0, 3}, {0, 5}) == LexElement{0, 8});
  CHECK(lex_power(3, {2, 1}, 0) == LexElement{3, 0});
  CHECK(lex_multiple(3, 0, {2, 1}) == LexElement{0, 0});
  CHECK_THROWS_AS(lex_mult(3, {4, 0}, {0, 0}), BrlError);
  CHECK_THROWS_AS(lex_power(0, {0, 0}, 2), BrlError);
}

TEST_CASE("lex chain laws") {
  for (int n = 2; n <= 4; ++n) {
    // The infinitesimal just below the top: its n-th power sits above zero
    // even though every (n+1)-th power of anything below top collapses.
    LexElement e{n - 1, 1};
    LexElement pn = lex_power(n, e, n);
    CHECK(pn == LexElement{0, static_cast<long long>(n)});
    CHECK(lex_multiple(n, 2, pn) == LexElement{0, 2LL * n});

    std::vector<LexElement> grid;
    for (long long a = 0; a <= n; ++a)
      for (long long r = -5; r <= 5; ++r)
        if (lex_valid(n, {a, r})) grid.push_back({a, r});

    for (const LexElement& p : grid) {
      CHECK(lex_neg(n, lex_neg(n, p)) == p);
      if (!(p == LexElement{0, 0}) && !(p == LexElement{n, 0}))
        CHECK(lex_join(n, p, lex_neg(n, p)) != LexElement{n, 0});
      for (int m = n + 1; m <= n + 3; ++m) {
        LexElement t = lex_multiple(n, 2, lex_power(n, p, m));
        bool bounds = t == LexElement{0, 0} || t == LexElement{n, 0};
        CHECK(bounds);
      }
    }
  }
}
