#include <algorithm>
#include <set>

#include "commsemi/constructions.hpp"
#include "commsemi/semigroup.hpp"
#include "doctest.h"

using namespace commsemi;

TEST_CASE("full T(n): size, products, center") {
  auto s = FiniteSemigroup::full(3);
  CHECK(s.size() == 27);
  CHECK(s.degree() == 3);
  CHECK(s.backend() == FiniteSemigroup::Backend::FullTn);

  // mul agrees with composition of the underlying transformations.
  for (uint32_t i = 0; i < s.size(); ++i) {
    for (uint32_t j = 0; j < s.size(); ++j) {
      CHECK(s.element(s.mul(i, j)) == s.element(i) * s.element(j));
    }
  }

  // Z(T(n)) is the identity alone.
  auto z = s.center();
  REQUIRE(z.size() == 1);
  CHECK(s.element(z[0]) == Transformation::identity(3));
  CHECK(!s.is_band());
  CHECK(!s.is_commutative());
}

TEST_CASE("full T(n) sizes are n^n") {
  CHECK(FiniteSemigroup::full(2).size() == 4);
  CHECK(FiniteSemigroup::full(4).size() == 256);
}

TEST_CASE("ideals J_r") {
  auto j = FiniteSemigroup::ideal(3, 2);
  CHECK(j.size() == 21);
  CHECK(j.ideal_rank() == 2);
  for (auto const& t : j.elements()) CHECK(t.rank() <= 2);
  // Closed under multiplication (it is an ideal).
  for (uint32_t i = 0; i < j.size(); ++i) {
    for (uint32_t k = 0; k < j.size(); ++k) {
      CHECK(j.element(j.mul(i, k)) == j.element(i) * j.element(k));
    }
  }
  // J_r has an empty center for r < n: verified by scan.
  CHECK(j.center().empty());
  CHECK(FiniteSemigroup::ideal(4, 2).size() == 4 + 84);
  CHECK(FiniteSemigroup::ideal(4, 4).size() == 256);
}

TEST_CASE("count_rank_k") {
  CHECK(count_rank_k(4, 1) == 4);
  CHECK(count_rank_k(4, 2) == 84);   // C(4,2) * 2! * S(4,2) = 6*2*7
  CHECK(count_rank_k(4, 3) == 144);  // C(4,3) * 3! * S(4,3) = 4*6*6
  CHECK(count_rank_k(4, 4) == 24);
  uint64_t total = 0;
  for (int k = 1; k <= 7; ++k) total += count_rank_k(7, k);
  CHECK(total == 823543);  // 7^7
}

TEST_CASE("closure: generated subsemigroups") {
  // Sym(3) plus one rank-2 map generates all of T(3).
  auto s = FiniteSemigroup::closure(
      3, {Transformation::parse("[2,1,3]"), Transformation::parse("[2,3,1]"),
          Transformation::parse("[1,1,3]")});
  CHECK(s.size() == 27);

  // Generator order does not change the element set.
  auto t = FiniteSemigroup::closure(
      3, {Transformation::parse("[1,1,3]"), Transformation::parse("[2,3,1]"),
          Transformation::parse("[2,1,3]")});
  std::set<Transformation> a(s.elements().begin(), s.elements().end());
  std::set<Transformation> b(t.elements().begin(), t.elements().end());
  CHECK(a == b);

  // A single constant generates itself.
  auto c = FiniteSemigroup::closure(4, {Transformation::constant(4, 2)});
  CHECK(c.size() == 1);

  // Generators come first, in the given order.
  CHECK(t.element(0) == Transformation::parse("[1,1,3]"));
  CHECK(t.element(1) == Transformation::parse("[2,3,1]"));
}

TEST_CASE("from_table validates associativity") {
  // Right-zero semigroup on two elements: xy = y.
  CayleyTable rz{{"x", "y"}, {{0, 1}, {0, 1}}};
  CHECK(!associativity_counterexample(rz).has_value());
  auto s = FiniteSemigroup::from_table(rz);
  CHECK(s.size() == 2);
  CHECK(s.mul(0, 1) == 1);
  CHECK(s.mul(1, 0) == 0);
  CHECK(s.label(0) == "x");
  CHECK(s.index_of_label("y") == 1u);
  CHECK(!s.is_transformational());

  CayleyTable bad{{"a", "b"}, {{1, 0}, {0, 0}}};
  auto cx = associativity_counterexample(bad);
  REQUIRE(cx.has_value());
  auto [i, j, k] = *cx;
  CHECK(bad.table[bad.table[i][j]][k] != bad.table[i][bad.table[j][k]]);
  CHECK_THROWS_AS(FiniteSemigroup::from_table(bad), std::invalid_argument);
}

TEST_CASE("cayley table JSON round trip") {
  auto s = small_semigroup("zeroband3");
  auto table = s.cayley_table();
  auto back = CayleyTable::from_json(table.to_json());
  CHECK(back.names == table.names);
  CHECK(back.table == table.table);
  auto s2 = FiniteSemigroup::from_table(back);
  CHECK(s2.size() == s.size());
  for (uint32_t i = 0; i < s.size(); ++i) {
    for (uint32_t j = 0; j < s.size(); ++j) {
      CHECK(s2.mul(i, j) == s.mul(i, j));
    }
  }
  CHECK_THROWS_AS(CayleyTable::from_json("{\"names\":[\"a\"]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(CayleyTable::from_json("not json"), std::invalid_argument);
}

TEST_CASE("element lookup and idempotents") {
  auto s = FiniteSemigroup::full(3);
  auto a = Transformation::parse("[2,3,1]");
  auto idx = s.index_of(a);
  REQUIRE(idx.has_value());
  CHECK(s.element(*idx) == a);
  CHECK(!s.index_of(Transformation::parse("[1,2,3,4]")).has_value());
  CHECK(s.label(*idx) == "[2,3,1]");

  for (uint32_t i = 0; i < s.size(); ++i) {
    CHECK(s.is_idempotent_element(i) == s.element(i).is_idempotent());
    CHECK(s.element(s.idempotent_power_of(i)) ==
          s.element(i).idempotent_power());
  }
}

TEST_CASE("band and commutativity predicates") {
  CHECK(small_semigroup("zeroband3").is_band());
  CHECK(small_semigroup("teve4").is_band());
  CHECK(s0_band(2).is_band());
  CHECK(!small_semigroup("zeroband3").is_commutative());

  // A semilattice (min on a chain) is a commutative band.
  CayleyTable chain{{"0", "1", "2"},
                    {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}};
  auto s = FiniteSemigroup::from_table(chain);
  CHECK(s.is_band());
  CHECK(s.is_commutative());
  CHECK(s.center().size() == 3);
}
