#include "bornolab/spaces.hpp"

#include <algorithm>

namespace bornolab {

BornSpace validate_space(std::string name, GroundPtr ground, LatticePtr basis, Ideal tau) {
  const FnLattice& carrier = *tau.carrier();
  if (carrier.ground().get() != ground.get())
    fail(Errc::GroundMismatch, "bornology lives over a different ground set");
  if (carrier.basis().get() != basis.get())
    fail(Errc::BasisMismatch, "bornology lives over a different basis");
  if (!contains_top(tau, GenMode::CLat))
    fail(Errc::NoCoverage, "top is outside the completely generated ideal (sup " +
                               carrier.repr(tau.sup()) + ")");
  return BornSpace{std::move(name), std::move(ground), std::move(basis), std::move(tau)};
}

BoundedVerdict is_bounded(const GroundMap& f, const BasisMap& phi, const BornSpace& src,
                          const BornSpace& dst, Elem truncation) {
  if (phi.src().get() != src.basis.get() || phi.dst().get() != dst.basis.get())
    fail(Errc::BasisMismatch, "basis map does not match the spaces");
  if (f.src().get() != src.ground.get() || f.dst().get() != dst.ground.get())
    fail(Errc::GroundMismatch, "ground map does not match the spaces");
  ImageMap op(f, phi);
  Ideal pulled = preimage_ideal(op, dst.bornology, truncation);
  BoundedVerdict v;
  if (auto witness = src.bornology.not_contained_witness(pulled)) {
    v.bounded = false;
    v.witness = witness;
    v.detail = "image " + dst.bornology.carrier()->repr(op.eval(*witness)) +
               " of " + src.bornology.carrier()->repr(*witness) + " escapes the target bornology";
  }
  return v;
}

SpaceMorphism make_space_morphism(BornSpace src, BornSpace dst, GroundMap f, BasisMap phi,
                                  Elem truncation) {
  BoundedVerdict v = is_bounded(f, phi, src, dst, truncation);
  if (!v.bounded) fail(Errc::NotIdealMorphism, "unbounded morphism: " + v.detail);
  return SpaceMorphism{std::move(src), std::move(dst), std::move(f), std::move(phi)};
}

bool classical_axioms(const GroundPtr& ground, const std::vector<std::vector<Point>>& family) {
  const std::size_t n = ground->size();
  std::vector<std::vector<bool>> sets;
  for (const auto& s : family) {
    std::vector<bool> bits(n, false);
    for (Point p : s) {
      if (p >= n) fail(Errc::GroundMismatch, "family member outside the ground set");
      bits[p] = true;
    }
    sets.push_back(std::move(bits));
  }
  auto holds = [&](const std::vector<bool>& bits) {
    return std::find(sets.begin(), sets.end(), bits) != sets.end();
  };

  // (1) the family covers the ground set
  for (Point p = 0; p < n; ++p) {
    bool covered = false;
    for (const auto& s : sets) covered = covered || s[p];
    if (!covered) return false;
  }
  // (3) with the empty subfamily: the empty set is a member
  if (!holds(std::vector<bool>(n, false))) return false;
  // (2) hereditary: all subsets of members are members
  for (const auto& s : sets) {
    std::vector<Point> support;
    for (Point p = 0; p < n; ++p)
      if (s[p]) support.push_back(p);
    for (std::size_t mask = 0; mask < (std::size_t{1} << support.size()); ++mask) {
      std::vector<bool> sub(n, false);
      for (std::size_t b = 0; b < support.size(); ++b)
        if (mask & (std::size_t{1} << b)) sub[support[b]] = true;
      if (!holds(sub)) return false;
    }
  }
  // (3) binary unions (finite unions follow)
  for (const auto& s : sets)
    for (const auto& t : sets) {
      std::vector<bool> u(n);
      for (Point p = 0; p < n; ++p) u[p] = s[p] || t[p];
      if (!holds(u)) return false;
    }
  return true;
}

std::vector<LFunction> family_as_functions(const FnLatticePtr& carrier,
                                           const std::vector<std::vector<Point>>& family) {
  std::vector<LFunction> out;
  for (const auto& s : family) {
    std::vector<Elem> values(carrier->ground()->size(), carrier->basis()->bot());
    for (Point p : s) values[p] = carrier->basis()->top();
    out.push_back(carrier->make_fn(std::move(values)));
  }
  return out;
}

std::optional<std::string> space_violation(const FnLatticePtr& carrier,
                                           const std::vector<LFunction>& members) {
  if (auto why = ideal_violation(carrier, members)) return why;
  std::vector<LFunction> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  LFunction sup = carrier->bottom();
  for (const LFunction& m : sorted) sup = carrier->join(sup, m);
  if (!(sup == carrier->topfn()))
    return "no coverage: the bornology joins up to " + carrier->repr(sup) + " only";
  return std::nullopt;
}

} // namespace bornolab
