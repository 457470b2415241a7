#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bornolab;

namespace {

// deterministic family of monotone ramps into the omega chain
std::vector<OmegaRamp> ramp_family() {
  auto W = fx::omega();
  std::vector<OmegaRamp> out;
  std::vector<std::vector<Elem>> heads = {{}, {0}, {0, 0}, {0, 2}, {1, 3, 3}, {0, 0, 5}};
  for (const auto& head : heads) {
    for (Elem c : {Elem{0}, Elem{2}, Elem{5}, kOmega}) {
      try {
        out.push_back(OmegaRamp(W, head, RampTail::constant(c)));
      } catch (const Error&) {}
    }
    for (std::int64_t d : {-2, -1, 0, 1, 3}) {
      try {
        out.push_back(OmegaRamp(W, head, RampTail::shifted(d)));
      } catch (const Error&) {}
    }
  }
  // a map whose value at omega exceeds the finite sup
  out.push_back(OmegaRamp(fx::omega(), {0}, RampTail::constant(2), kOmega));
  return out;
}

std::vector<Elem> args() {
  std::vector<Elem> a;
  for (Elem n = 0; n <= 14; ++n) a.push_back(n);
  a.push_back(kOmega);
  return a;
}

} // namespace

TEST_CASE("evaluation follows the head/tail shape") {
  auto W = fx::omega();
  OmegaRamp r(W, {0, 0, 1}, RampTail::shifted(-1));
  CHECK(r.eval(0) == 0);
  CHECK(r.eval(1) == 0);
  CHECK(r.eval(2) == 1);
  CHECK(r.eval(5) == 4);
  CHECK(r.eval(kOmega) == kOmega);
  CHECK(r.unbounded());
  CHECK(r.sup_continuous());
}

TEST_CASE("normalization trims redundant head entries") {
  auto W = fx::omega();
  OmegaRamp a(W, {0, 1, 2, 3}, RampTail::shifted(0));
  CHECK(a.head().empty());
  OmegaRamp b(W, {0, 2, 2}, RampTail::constant(2));
  CHECK(b.head().size() == 1);
  CHECK(a == OmegaRamp::identity(W));
}

TEST_CASE("monotonicity violations are rejected") {
  auto W = fx::omega();
  CHECK_THROWS_AS(OmegaRamp(W, {3, 1}, RampTail::constant(5)), Error);
  CHECK_THROWS_AS(OmegaRamp(W, {4}, RampTail::constant(2)), Error);
  CHECK_THROWS_AS(OmegaRamp(W, {}, RampTail::shifted(0), 5), Error);
  CHECK_THROWS_AS(OmegaRamp(fx::c3(), {}, RampTail::shifted(0), kOmega), Error);
}

TEST_CASE("composition agrees with pointwise evaluation") {
  for (const OmegaRamp& f : ramp_family())
    for (const OmegaRamp& g : ramp_family()) {
      OmegaRamp h = f.mapped(g); // g after f
      for (Elem n : args()) CHECK(h.eval(n) == g.eval(f.eval(n)));
    }
}

TEST_CASE("join and meet agree with pointwise evaluation") {
  auto family = ramp_family();
  for (const OmegaRamp& a : family)
    for (const OmegaRamp& b : family) {
      OmegaRamp j = a.join(b);
      OmegaRamp m = a.meet(b);
      for (Elem n : args()) {
        CHECK(j.eval(n) == std::max(a.eval(n), b.eval(n)));
        CHECK(m.eval(n) == std::min(a.eval(n), b.eval(n)));
      }
    }
}

TEST_CASE("normal forms are canonical: equal graphs compare equal") {
  auto family = ramp_family();
  auto sample = args();
  for (const OmegaRamp& a : family)
    for (const OmegaRamp& b : family) {
      bool same_graph = true;
      for (Elem n : sample) same_graph = same_graph && a.eval(n) == b.eval(n);
      // beyond the sampled window the tails decide
      if (same_graph && a.tail() == b.tail()) CHECK(a == b);
      if (a == b) {
        for (Elem n : sample) CHECK(a.eval(n) == b.eval(n));
      }
    }
}

TEST_CASE("adjoint satisfies the Galois law") {
  // the law needs all sups preserved, including the empty one (bot)
  auto W = fx::omega();
  for (const OmegaRamp& r : ramp_family()) {
    if (!r.sup_continuous()) {
      CHECK_THROWS_AS(r.adjoint_into_omega(W), Error);
      continue;
    }
    if (r.eval(0) != 0) continue;
    OmegaRamp adj = r.adjoint_into_omega(W);
    for (Elem a : args())
      for (Elem b : args()) {
        bool lhs = r.eval(a) <= b;
        bool rhs = a <= adj.eval(b);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("finite-codomain ramps stay inside the lattice") {
  auto C = fx::c3();
  OmegaRamp r(C, {fx::el(C, "0")}, RampTail::constant(fx::el(C, "m")), fx::el(C, "1"));
  CHECK(r.eval(0) == fx::el(C, "0"));
  CHECK(r.eval(3) == fx::el(C, "m"));
  CHECK(r.eval(kOmega) == fx::el(C, "1"));
  CHECK_FALSE(r.sup_continuous());
  CHECK_THROWS_AS(OmegaRamp(C, {}, RampTail::constant(17)), Error);
}
