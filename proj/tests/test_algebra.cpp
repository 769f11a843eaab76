#include "doctest.h"

#include <vector>

#include "brl/algebra.hpp"

using namespace brl;

namespace {

// 0 < a, b < 1 with meet as product: the four element Boolean algebra.
Algebra diamond() {
  Relation leq = close_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  LatticeTables lat = derive_lattice(4, leq);
  return Algebra("B4", {"F", "a", "b", "T"}, 3, 0, lat.meet, leq);
}

Algebra chain3() {
  Relation leq = close_covers(3, {{0, 1}, {1, 2}});
  Table mult = {0, 0, 0, 0, 0, 1, 0, 1, 2};  // Lukasiewicz on {0,1,2}
  return Algebra("C3", {"0", "1", "2"}, 2, 0, mult, leq);
}

}  // namespace

TEST_CASE("element sets") {
  ElementSet s = ElementSet::of(5, {1, 3});
  CHECK(s.count() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(0));
  CHECK(s.subset_of(ElementSet::full(5)));
  CHECK_FALSE(ElementSet::full(5).subset_of(s));
  CHECK(s.intersected(ElementSet::single(5, 3)) == ElementSet::single(5, 3));
  CHECK(s.united(ElementSet::single(5, 0)) == ElementSet::of(5, {0, 1, 3}));
  CHECK(s.elements() == std::vector<Element>{1, 3});
  ElementSet t = s;
  t.remove(1);
  t.add(2);
  CHECK(t == ElementSet::of(5, {2, 3}));
}

TEST_CASE("cover closure is reflexive and transitive") {
  Relation leq = close_covers(3, {{0, 1}, {1, 2}});
  for (int i = 0; i < 3; ++i) CHECK(leq[i * 3 + i] == 1);
  CHECK(leq[0 * 3 + 2] == 1);
  CHECK(leq[2 * 3 + 0] == 0);
}

TEST_CASE("lattice derivation rejects orders without unique bounds") {
  // two minimal and two maximal elements: {a,b} has no unique upper bound
  Relation leq = close_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_THROWS_AS(derive_lattice(4, leq), NotALattice);
}

TEST_CASE("derived meet and join on the diamond") {
  Algebra b4 = diamond();
  CHECK(b4.meet(1, 2) == 0);
  CHECK(b4.join(1, 2) == 3);
  CHECK(b4.meet(1, 3) == 1);
  CHECK(b4.join(0, 2) == 2);
}

TEST_CASE("derived residuum on the diamond") {
  Algebra b4 = diamond();
  CHECK(b4.arrow(3, 1) == 1);   // T -> a = a
  CHECK(b4.arrow(1, 0) == 2);   // ~a = b
  CHECK(b4.arrow(1, 2) == 2);
  CHECK(b4.arrow(0, 1) == 3);
  CHECK(b4.neg(1) == 2);
  CHECK(b4.neg(3) == 0);
}

TEST_CASE("table shape and range are validated") {
  Relation leq = close_covers(2, {{0, 1}});
  CHECK_THROWS_AS(Algebra("bad", {"F", "T"}, 1, 0, Table{0, 0, 0}, leq), BrlError);
  CHECK_THROWS_AS(Algebra("bad", {"F", "T"}, 1, 0, Table{0, 0, 0, 7}, leq), BrlError);
  CHECK_THROWS_AS(Algebra("bad", {"F"}, 0, 0, Table{0}, Relation{1, 1}), BrlError);
}

TEST_CASE("axioms hold on the examples") {
  CHECK(verify_axioms(diamond()).all_hold());
  CHECK(verify_axioms(chain3()).all_hold());
}

TEST_CASE("broken tables are reported law by law") {
  Relation leq = close_covers(2, {{0, 1}});
  // product is not commutative; pass an explicit arrow so nothing is derived
  Table mult = {0, 1, 0, 1};
  Table arrow = {1, 1, 0, 1};
  Algebra bad("bad", {"F", "T"}, 1, 0, mult, leq, arrow);
  AxiomReport rep = verify_axioms(bad);
  CHECK_FALSE(rep.all_hold());
  const AxiomLaw* law = rep.find("mult-commutative");
  REQUIRE(law != nullptr);
  CHECK_FALSE(law->holds);
  CHECK(law->witness == std::vector<Element>{0, 1});
  CHECK(rep.summary(bad).find("mult-commutative") != std::string::npos);
}

TEST_CASE("negation, sum, power and multiple") {
  Algebra c3 = chain3();
  CHECK(c3.neg(1) == 1);
  CHECK(c3.plus(1, 1) == 2);
  CHECK(c3.power(1, 0) == 2);
  CHECK(c3.power(1, 1) == 1);
  CHECK(c3.power(1, 2) == 0);
  CHECK(c3.power(1, 50) == 0);
  CHECK(c3.multiple(0, 1) == 0);
  CHECK(c3.multiple(1, 1) == 1);
  CHECK(c3.multiple(2, 1) == 2);
  CHECK(c3.multiple(50, 1) == 2);

  Algebra b4 = diamond();
  // 1.x is double negation, which fixes every element of a Boolean algebra
  for (Element x = 0; x < 4; ++x) CHECK(b4.multiple(1, x) == x);
}

TEST_CASE("up and down sets") {
  Algebra c3 = chain3();
  CHECK(c3.up_set(1) == ElementSet::of(3, {1, 2}));
  CHECK(c3.down_set(1) == ElementSet::of(3, {0, 1}));
}

TEST_CASE("algebra equality and lookup") {
  Algebra a = chain3();
  Algebra b = chain3();
  CHECK(a == b);
  CHECK_FALSE(a == diamond());
  CHECK(a.element_by_name("1") == 1);
  CHECK_FALSE(a.element_by_name("x").has_value());
  CHECK_FALSE(a.is_trivial());
}
