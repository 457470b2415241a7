#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bornolab;

TEST_CASE("three-element chain validates") {
  auto L = fx::c3();
  CHECK(L->size() == 3);
  CHECK(L->bot() == fx::el(L, "0"));
  CHECK(L->top() == fx::el(L, "1"));
  CHECK(L->leq(fx::el(L, "0"), fx::el(L, "m")));
  CHECK(L->join(fx::el(L, "m"), fx::el(L, "1")) == fx::el(L, "1"));
}

TEST_CASE("two incomparable maxima have no join") {
  LatticeSpec spec;
  spec.name = "V";
  spec.elements = {"0", "a", "b"};
  spec.covers = {{"0", "a"}, {"0", "b"}};
  CHECK_THROWS_WITH_AS(Lattice::finite(spec), doctest::Contains("no join"), Error);
  try {
    Lattice::finite(spec);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoJoin);
  }
}

TEST_CASE("antisymmetry violations are rejected") {
  LatticeSpec spec;
  spec.name = "P";
  spec.elements = {"a", "b"};
  spec.leq = {{"a", "b"}, {"b", "a"}};
  try {
    Lattice::finite(spec);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAPoset);
  }
}

TEST_CASE("declared extremes must match the computed ones") {
  LatticeSpec spec;
  spec.name = "T2";
  spec.elements = {"0", "1"};
  spec.covers = {{"0", "1"}};
  spec.bot = "1";
  try {
    Lattice::finite(spec);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoBotTop);
  }
}

TEST_CASE("diamond meets and joins agree with the definition") {
  auto L = fx::m3();
  // oracle: greatest lower / least upper bound by scanning the order
  for (Elem a = 0; a < L->size(); ++a)
    for (Elem b = 0; b < L->size(); ++b) {
      Elem m = L->meet(a, b);
      CHECK(L->leq(m, a));
      CHECK(L->leq(m, b));
      for (Elem c = 0; c < L->size(); ++c)
        if (L->leq(c, a) && L->leq(c, b)) CHECK(L->leq(c, m));
      Elem j = L->join(a, b);
      CHECK(L->leq(a, j));
      CHECK(L->leq(b, j));
      for (Elem c = 0; c < L->size(); ++c)
        if (L->leq(a, c) && L->leq(b, c)) CHECK(L->leq(j, c));
    }
}

TEST_CASE("whole catalog validates against the bound oracle") {
  for (const auto& L : fx::catalog()) {
    CHECK(L->leq(L->bot(), L->top()));
    for (Elem a = 0; a < L->size(); ++a) {
      CHECK(L->leq(L->bot(), a));
      CHECK(L->leq(a, L->top()));
    }
  }
}

TEST_CASE("distributivity: chains yes, M3 and N5 no") {
  CHECK(fx::c3()->is_distributive());
  CHECK(fx::c6()->is_distributive());
  CHECK(fx::b2()->is_distributive());
  CHECK(fx::c2xc3()->is_distributive());
  CHECK_FALSE(fx::m3()->is_distributive());
  CHECK_FALSE(fx::n5()->is_distributive());
  CHECK(fx::omega()->is_distributive());
}

TEST_CASE("omega chain behaves as the chain of naturals with a top") {
  auto W = fx::omega();
  CHECK(W->bot() == 0);
  CHECK(W->top() == kOmega);
  CHECK(W->leq(3, kOmega));
  CHECK(W->join(3, 5) == 5);
  CHECK(W->meet(3, kOmega) == 3);
  CHECK(W->covers(4, 3));
  CHECK_FALSE(W->covers(kOmega, 3));
}

TEST_CASE("represented subsets compute sups and infs") {
  auto W = fx::omega();
  RepSubset finite{{2, 5}, {}};
  CHECK(finite.sup(*W) == 5);
  CHECK(finite.inf(*W) == 2);
  RepSubset all_finite = RepSubset::all_finite();
  CHECK(all_finite.sup(*W) == kOmega);
  CHECK(all_finite.inf(*W) == 0);
  RepSubset tail{{kOmega}, 3};
  CHECK(tail.sup(*W) == kOmega);
  CHECK(tail.inf(*W) == 3);
  CHECK(tail.contains(*W, 7));
  CHECK(tail.contains(*W, kOmega));
  CHECK_FALSE(tail.contains(*W, 1));
  RepSubset empty{};
  CHECK(empty.sup(*W) == 0);
  CHECK(empty.inf(*W) == kOmega);
}

TEST_CASE("construction is deterministic") {
  LatticeSpec spec;
  spec.name = "D";
  spec.elements = {"0", "x", "y", "1"};
  spec.covers = {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}};
  auto A = Lattice::finite(spec);
  auto B = Lattice::finite(spec);
  for (Elem a = 0; a < A->size(); ++a) {
    CHECK(A->elem_name(a) == B->elem_name(a));
    for (Elem b = 0; b < A->size(); ++b) {
      CHECK(A->leq(a, b) == B->leq(a, b));
      CHECK(A->meet(a, b) == B->meet(a, b));
      CHECK(A->join(a, b) == B->join(a, b));
    }
  }
}
