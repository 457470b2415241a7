#ifndef BORNOLAB_IDEAL_HPP
#define BORNOLAB_IDEAL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bornolab/basis_map.hpp"
#include "bornolab/fn.hpp"

namespace bornolab {

/** Generation mode: LatBot closes under finite joins and meets with carrier
    elements; CLat additionally closes under arbitrary represented joins.
    The two coincide for finite generator sets, but classify ramp downsets
    differently (the sup of a non-principal ramp is reached only in CLat
    mode). */
enum class GenMode { LatBot, CLat };

/** A decidable, join-closed, downward-closed subset of a function lattice.

    Representations:
      - Extensional: a sorted member list; only over enumerable carriers.
      - Ramp: over an omega-chain basis, the set
            { f : f <= ceiling pointwise, f(x) < omega for x in region }.
        Kept normalized with region a subset of the ceiling's omega locus,
        so structural equality is extensional equality. */
class Ideal {
public:
  static Ideal extensional(FnLatticePtr carrier, std::vector<LFunction> members);
  static Ideal ramp(FnLatticePtr carrier, std::vector<Point> region, LFunction ceiling);
  /** The principal downset of c. */
  static Ideal principal(FnLatticePtr carrier, const LFunction& c);
  static Ideal full(FnLatticePtr carrier);
  static Ideal bottom(FnLatticePtr carrier);

  const FnLatticePtr& carrier() const { return carrier_; }
  bool is_ramp() const { return ramp_; }
  const std::vector<LFunction>& members() const;
  const std::vector<Point>& region() const { return region_; }
  const LFunction& ceiling() const { return ceiling_.front(); }

  bool contains(const LFunction& fn) const;
  /** Least upper bound of the ideal (ceiling / greatest member). */
  LFunction sup() const;
  /** True iff sup() is itself a member. */
  bool sup_attained() const;

  Ideal intersect(const Ideal& other) const;
  /** The ideal generated by the union. */
  Ideal join_with(const Ideal& other) const;

  /** A member of *this that other lacks, first in deterministic order. */
  std::optional<LFunction> not_contained_witness(const Ideal& other) const;
  bool subset_of(const Ideal& other) const { return !not_contained_witness(other); }
  bool operator==(const Ideal& other) const;

  /** Canonical cofinal chain of a ramp ideal: level 0 is bottom; level
      n >= 1 takes value min(n-1, ceiling) on region coordinates and the
      ceiling elsewhere. Every member sits below some chain level. */
  LFunction chain_member(Elem level) const;

  /** Deterministic finite sample of members: the whole member list, or for
      ramps a value grid cut at the truncation level. */
  std::vector<LFunction> sample_members(Elem truncation) const;

  std::string repr() const;

private:
  Ideal() = default;
  FnLatticePtr carrier_;
  bool ramp_ = false;
  std::vector<LFunction> members_;  // extensional; sorted, unique
  std::vector<Point> region_;       // ramp; sorted, normalized
  std::vector<LFunction> ceiling_;  // ramp; single entry
};

/** First Def-5 violation of a candidate member list, or nullopt when the
    list is an ideal of its carrier. */
std::optional<std::string> ideal_violation(const FnLatticePtr& carrier,
                                           const std::vector<LFunction>& members);

struct GeneratorSet {
  FnLatticePtr carrier;
  std::vector<LFunction> gens;
};

/** Least ideal containing the generators. Finite generator sets attain
    their join, so both modes agree and yield the principal downset. */
Ideal generate_ideal(const GeneratorSet& g, GenMode mode);

bool contains_top(const GeneratorSet& g, GenMode mode);
bool contains_top(const Ideal& ideal, GenMode mode);

/** All ideals of the carrier, deterministically ordered. Enumerable
    carriers list the principal downsets (every ideal of a finite lattice
    attains its join); omega carriers return the ramp catalog cut at the
    truncation level. */
std::vector<Ideal> enumerate_ideals(const FnLatticePtr& carrier, Elem truncation = 6);

/** Ideal-category morphism criterion: preserves bot, binary joins and
    binary meets; the preimage property is additionally spot-verified
    against the codomain ideal catalog. */
bool is_ideal_morphism(const BasisMap& phi, Elem truncation = 6);

/** Preimage { a : phi(a) in J } of a basis-level ideal, in the
    representation class. Throws NotIdealMorphism unless phi passes
    is_ideal_morphism. J must live over phi's codomain viewed as a
    one-coordinate function lattice. */
Ideal preimage_ideal(const BasisMap& phi, const Ideal& J, Elem truncation = 6);

struct IcdVerdict {
  bool holds = true;
  std::string analysis;
  std::vector<Ideal> counterexample_family;
};

/** Ideal complete distributivity at the top: for every non-empty family of
    ideals whose sups meet to top, the choice-map joins reach top. Checked
    exhaustively over the ideal catalog of the carrier. */
IcdVerdict is_icd_at_top(const FnLatticePtr& carrier, Elem truncation = 6);
IcdVerdict is_icd_at_top(const LatticePtr& lattice, Elem truncation = 6);

/** Membership in the L-vdash condition: the right adjoint of psi carries
    every represented join attaining top to a join attaining top. Requires
    psi join-preserving between lattices that are ideally completely
    distributive at top. */
bool adjoint_preserves_top_joins(const BasisMap& psi, Elem truncation = 6);

// basis-level conveniences over a one-coordinate carrier
bool is_ideal(const Lattice& L, std::span<const Elem> members);
std::vector<Elem> generate_ideal(const Lattice& L, std::span<const Elem> gens);
Ideal elem_ideal(const LatticePtr& L, std::span<const Elem> members);
std::vector<Elem> ideal_elems(const Ideal& ideal);

} // namespace bornolab

#endif
