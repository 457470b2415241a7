#ifndef BORNOLAB_SPACES_HPP
#define BORNOLAB_SPACES_HPP

#include "bornolab/image.hpp"

namespace bornolab {

/** A bornological space: a ground set, a basis lattice, and an ideal of
    the function lattice whose generated complete-lattice ideal reaches top
    (coverage). */
struct BornSpace {
  std::string name;
  GroundPtr ground;
  LatticePtr basis;
  Ideal bornology;
};

/** Validates coverage (CLat mode, per the reading of the covering axiom as
    membership of top in the completely generated ideal) and carrier
    consistency. Throws NoCoverage / GroundMismatch / BasisMismatch; an
    ill-formed member list already fails at Ideal construction with
    NotAnIdeal. */
BornSpace validate_space(std::string name, GroundPtr ground, LatticePtr basis, Ideal tau);

struct BoundedVerdict {
  bool bounded = true;
  std::optional<LFunction> witness; // member of the source bornology whose image escapes
  std::string detail;
};

/** Boundedness of the pair (f, phi) between spaces: every bornology member
    must land in the target bornology. Structural over ramp bornologies,
    with the first escaping member (deterministic order) as witness. */
BoundedVerdict is_bounded(const GroundMap& f, const BasisMap& phi, const BornSpace& src,
                          const BornSpace& dst, Elem truncation = 6);

/** A morphism of spaces; construction verifies boundedness. */
struct SpaceMorphism {
  BornSpace src;
  BornSpace dst;
  GroundMap f;
  BasisMap phi;
};
SpaceMorphism make_space_morphism(BornSpace src, BornSpace dst, GroundMap f, BasisMap phi,
                                  Elem truncation = 6);

/** The three classical bornology axioms on a family of subsets: covering,
    hereditary, closed under finite (including empty) unions. */
bool classical_axioms(const GroundPtr& ground, const std::vector<std::vector<Point>>& family);

/** Subsets as characteristic functions over the two-element lattice;
    pairs with classical_axioms in the equivalence checks. */
std::vector<LFunction> family_as_functions(const FnLatticePtr& carrier,
                                           const std::vector<std::vector<Point>>& family);

/** Non-throwing probe: the first violation (ideal axioms, then coverage)
    of a candidate member list, or nullopt when it carries a space. */
std::optional<std::string> space_violation(const FnLatticePtr& carrier,
                                           const std::vector<LFunction>& members);

} // namespace bornolab

#endif
