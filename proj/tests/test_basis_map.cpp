#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bornolab;

namespace {

BasisMap collapse_omega_to_two() {
  // 0 -> 0, n -> 1 for n >= 1, omega -> 1
  return BasisMap::ramp(fx::omega(), fx::two(),
                        OmegaRamp(fx::two(), {0}, RampTail::constant(1)));
}

std::vector<BasisMap> join_preserving_family() {
  std::vector<BasisMap> out;
  auto TWO = fx::two();
  auto C3 = fx::c3();
  auto W = fx::omega();
  out.push_back(BasisMap::identity(C3));
  out.push_back(BasisMap::identity(W));
  out.push_back(BasisMap::table(TWO, C3, {0, 2}));          // 0->0, 1->1
  out.push_back(BasisMap::table(C3, TWO, {0, 0, 1}));       // collapse m
  out.push_back(BasisMap::table(C3, TWO, {0, 1, 1}));       // m up
  out.push_back(collapse_omega_to_two());
  out.push_back(BasisMap::table(TWO, W, {0, kOmega}));      // 1 -> omega
  out.push_back(BasisMap::table(TWO, W, {0, 4}));
  out.push_back(BasisMap::ramp(W, W, OmegaRamp(W, {0, 0}, RampTail::shifted(-1))));
  std::vector<Elem> cap5;
  for (Elem v = 0; v <= 5; ++v) cap5.push_back(v);
  out.push_back(BasisMap::ramp(W, W, OmegaRamp(W, cap5, RampTail::constant(5))));
  return out;
}

} // namespace

TEST_CASE("identity preserves the full signature") {
  OpSignature sig;
  sig.bin_join = sig.bin_meet = sig.bot = sig.top = true;
  CHECK(check_homomorphism(BasisMap::identity(fx::c3()), sig));
  CHECK(check_homomorphism(BasisMap::identity(fx::omega()), OpSignature::clat()));
}

TEST_CASE("bot violations are flagged") {
  // 2 -> C3 sending 0 to m breaks the bot flag
  BasisMap phi = BasisMap::table(fx::two(), fx::c3(), {1, 2});
  OpSignature sig;
  sig.bot = true;
  CHECK_FALSE(check_homomorphism(phi, sig));
}

TEST_CASE("the collapse out of the omega chain preserves arbitrary joins") {
  OpSignature sig;
  sig.arb_join = sig.bot = true;
  CHECK(check_homomorphism(collapse_omega_to_two(), sig));
}

TEST_CASE("an omega override breaks arbitrary-join preservation") {
  BasisMap phi = BasisMap::table(fx::two(), fx::omega(), {0, kOmega});
  OpSignature joins;
  joins.arb_join = joins.bot = true;
  CHECK(check_homomorphism(phi, joins)); // joins in 2 are trivial
  BasisMap jump = BasisMap::ramp(fx::omega(), fx::omega(),
                                 OmegaRamp(fx::omega(), {0}, RampTail::constant(2), kOmega));
  CHECK_FALSE(check_homomorphism(jump, joins)); // sup of finite values is 2, not omega
}

TEST_CASE("right adjoint of the two-point embedding into C3") {
  BasisMap phi = BasisMap::table(fx::two(), fx::c3(), {0, 2});
  BasisMap adj = right_adjoint(phi);
  CHECK(adj.eval(fx::el(fx::c3(), "0")) == 0);
  CHECK(adj.eval(fx::el(fx::c3(), "m")) == 0);
  CHECK(adj.eval(fx::el(fx::c3(), "1")) == 1);
}

TEST_CASE("right adjoint of the C3 collapse onto two") {
  BasisMap phi = BasisMap::table(fx::c3(), fx::two(), {0, 0, 1});
  BasisMap adj = right_adjoint(phi);
  CHECK(adj.eval(0) == fx::el(fx::c3(), "m"));
  CHECK(adj.eval(1) == fx::el(fx::c3(), "1"));
}

TEST_CASE("identity is self-adjoint") {
  BasisMap id = BasisMap::identity(fx::c3());
  CHECK(right_adjoint(id) == id);
}

TEST_CASE("adjoints of non join-preserving maps are refused") {
  BasisMap swap = BasisMap::table(fx::two(), fx::two(), {1, 0});
  CHECK_THROWS_AS(right_adjoint(swap), Error);
}

TEST_CASE("Galois law holds across the catalog") {
  for (const BasisMap& phi : join_preserving_family()) {
    BasisMap adj = right_adjoint(phi);
    auto src_sample = oracle::elem_sample(phi.src(), 9);
    auto dst_sample = oracle::elem_sample(phi.dst(), 9);
    CHECK(oracle::galois_law(phi, adj, src_sample, dst_sample));
  }
}

TEST_CASE("adjoints preserve represented infima and the top") {
  OpSignature meets;
  meets.arb_meet = meets.top = true;
  for (const BasisMap& phi : join_preserving_family()) {
    BasisMap adj = right_adjoint(phi);
    CHECK(check_homomorphism(adj, meets));
  }
}

TEST_CASE("phi after its adjoint sits below the identity") {
  for (const BasisMap& phi : join_preserving_family()) {
    BasisMap adj = right_adjoint(phi);
    for (Elem b : oracle::elem_sample(phi.dst(), 9))
      CHECK(phi.dst()->leq(phi.eval(adj.eval(b)), b));
  }
}

TEST_CASE("the 2 -> omega embedding with an omega value has the expected adjoint") {
  BasisMap phi = BasisMap::table(fx::two(), fx::omega(), {0, kOmega});
  BasisMap adj = right_adjoint(phi);
  CHECK(adj.eval(0) == 0);
  CHECK(adj.eval(7) == 0);
  CHECK(adj.eval(kOmega) == 1);
  CHECK(oracle::galois_law(phi, adj, {0, 1}, oracle::elem_sample(fx::omega(), 9)));
}

TEST_CASE("composition is normalized and matches pointwise evaluation") {
  auto family = join_preserving_family();
  for (const BasisMap& f : family)
    for (const BasisMap& g : family) {
      if (f.dst().get() != g.src().get()) continue;
      BasisMap h = compose(g, f);
      for (Elem a : oracle::elem_sample(f.src(), 11))
        CHECK(h.eval(a) == g.eval(f.eval(a)));
    }
}

TEST_CASE("non-monotone tables after a ramp cannot be normalized") {
  BasisMap swap = BasisMap::table(fx::two(), fx::two(), {1, 0});
  try {
    compose(swap, collapse_omega_to_two());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedComposition);
  }
}
