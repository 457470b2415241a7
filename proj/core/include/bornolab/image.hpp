#ifndef BORNOLAB_IMAGE_HPP
#define BORNOLAB_IMAGE_HPP

#include <optional>

#include "bornolab/ideal.hpp"

namespace bornolab {

/** The covariant image operator of the pair (f, phi): sends alpha in L^X to
    the function y -> \/ { phi(alpha(x)) : f(x) = y } in M^Y. An empty fiber
    yields bot (the empty join). */
class ImageMap {
public:
  ImageMap(GroundMap f, BasisMap phi);

  const GroundMap& ground_map() const { return f_; }
  const BasisMap& basis_map() const { return phi_; }
  const FnLatticePtr& src() const { return src_; }
  const FnLatticePtr& dst() const { return dst_; }

  LFunction eval(const LFunction& alpha) const;

  /** The right adjoint beta -> adj(phi) . beta . f. Throws
      NotJoinPreserving when phi has no join-preserving structure. */
  LFunction adjoint(const LFunction& beta) const;
  const BasisMap& phi_adjoint() const;

private:
  GroundMap f_;
  BasisMap phi_;
  std::optional<BasisMap> adj_;
  FnLatticePtr src_;
  FnLatticePtr dst_;
};

LFunction forward_image(const GroundMap& f, const BasisMap& phi, const LFunction& alpha);
/** Fixed-basis image: phi is the identity on alpha's basis. */
LFunction forward_image(const GroundMap& f, const LFunction& alpha);
LFunction forward_right_adjoint(const GroundMap& f, const BasisMap& phi, const LFunction& beta);

/** Preimage { alpha : image(alpha) in J } of a bornology-level ideal, in
    the representation class: enumeration over finite carriers, and over an
    omega basis the closed form with the ceiling pulled back through the
    adjoint and region strictness pulled back through the fiber analysis. */
Ideal preimage_ideal(const ImageMap& op, const Ideal& J, Elem truncation = 6);

/** A bornological theory handle: the function-lattice powerset together
    with its image operators, read against the lattice reduct that keeps
    binary meets, finite joins and bot. Any other reduct is unsupported. */
class Theory {
public:
  Theory(LatticePtr basis, OpSignature reduct);

  const LatticePtr& basis() const { return basis_; }
  FnLatticePtr powerset(const GroundPtr& ground) const;
  ImageMap image(const GroundMap& f) const;
  ImageMap image(const GroundMap& f, const BasisMap& phi) const;

private:
  LatticePtr basis_;
};

} // namespace bornolab

#endif
