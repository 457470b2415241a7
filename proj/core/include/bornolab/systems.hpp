#ifndef BORNOLAB_SYSTEMS_HPP
#define BORNOLAB_SYSTEMS_HPP

#include "bornolab/lifts.hpp"

namespace bornolab {

/** The basis object of a system: an abstract lattice (finite, or the
    omega chain read as the chain of finite levels with its formal sup), or
    an embedded ideal of a function lattice (the image of a space under the
    embedding into systems). */
struct BObject {
  LatticePtr lattice;          // abstract case
  std::optional<Ideal> ideal;  // embedded case

  bool is_ideal_obj() const { return ideal.has_value(); }
  bool is_omega() const { return lattice && !lattice->is_finite(); }

  static BObject lat(LatticePtr L) { return BObject{std::move(L), std::nullopt}; }
  static BObject embedded(Ideal I) { return BObject{nullptr, std::move(I)}; }
};

/** The structure map of a system, B -> L^X:
      Table      finite-lattice B, one function per element;
      Chain      omega B, one level ramp per ground point, value at omega
                 being the pointwise sup of the finite levels;
      Inclusion  embedded-ideal B, the subset inclusion. */
class StructureMap {
public:
  enum class Rep { Table, Chain, Inclusion };

  static StructureMap table(FnLatticePtr tx, std::vector<LFunction> values);
  static StructureMap chain(FnLatticePtr tx, std::vector<OmegaRamp> coords);
  static StructureMap inclusion(FnLatticePtr tx);

  Rep rep() const { return rep_; }
  const FnLatticePtr& tx() const { return tx_; }
  const std::vector<LFunction>& table_values() const { return values_; }
  const std::vector<OmegaRamp>& chain_coords() const { return coords_; }

  /** Value at an abstract basis element (Table / Chain only). */
  LFunction eval(Elem b) const;

private:
  StructureMap() = default;
  Rep rep_ = Rep::Inclusion;
  FnLatticePtr tx_;
  std::vector<LFunction> values_;
  std::vector<OmegaRamp> coords_;
};

struct BornSystem {
  std::string name;
  GroundPtr ground;   // X
  LatticePtr basis;   // L, the theory basis
  BObject bobj;       // B
  StructureMap kappa; // B -> L^X
  FnLatticePtr tx;    // the function lattice L^X
};

/** Builds a system after checking that kappa is an ideal-category morphism
    (bot, binary joins, binary meets; monotone sup-continuous levels in the
    chain case) and that the sup of its image reaches top (coverage in CLat
    mode). Throws NotIdealMorphism / NoCoverage. */
BornSystem validate_system(std::string name, GroundPtr ground, LatticePtr basis,
                           BObject bobj, StructureMap kappa, Elem truncation = 6);

/** Basis component of a morphism whose codomain is an embedded ideal:
    b -> post(kappa_src(b)), or the corestriction of kappa_src itself when
    no post image is attached. For an embedded-ideal source the member feeds
    the post image directly. */
struct FnValuedPart {
  std::optional<ImageMap> post;
};

struct SystemMorphism {
  BornSystem src;
  BornSystem dst;
  GroundMap f;
  BasisMap theory; // between the theory bases; identity in the fixed-basis case
  std::variant<BasisMap, FnValuedPart> basis;
};

struct MorphismVerdict {
  bool pass = true;
  std::string witness; // failing basis element, printable
};

/** The defining square: image(f, theory) after kappa_1 equals kappa_2 after
    the basis component, elementwise on B_1. Finite parts are enumerated;
    omega parts are compared as ramp normal forms per ground point
    (including the value at omega). */
MorphismVerdict is_system_morphism(const SystemMorphism& m, Elem truncation = 6);

/** Composition of morphisms with abstract basis components. */
SystemMorphism compose(const SystemMorphism& outer, const SystemMorphism& inner);

/** The full embedding of spaces into systems: B is the bornology itself and
    kappa its inclusion. */
BornSystem embed_space(const BornSpace& sp);
SystemMorphism embed_morphism(const SpaceMorphism& sm, Elem truncation = 6);

/** Spatialization: the space whose bornology is generated (in the plain
    lattice reduct) by the image of kappa. Finite basis objects give the
    principal downset of the image join; chains give the ramp downset with
    region the unbounded coordinates and ceiling the value at omega;
    embedded ideals give themselves. */
BornSpace spatialize(const BornSystem& sys, Elem truncation = 6);
/** Morphism part: the ground map, re-verified bounded. */
BoundedVerdict spatialize_morphism(const SystemMorphism& m, Elem truncation = 6);

/** The unit of the reflection: (identity, corestriction of kappa) into the
    embedded spatialization. */
SystemMorphism reflection_arrow(const BornSystem& sys, Elem truncation = 6);

struct UniversalVerdict {
  bool exists = false;
  bool unique = false;
  std::string detail;
};

/** Universal property of the reflection arrow: a morphism m from sys into
    an embedded space factors through the reflection by a unique bounded
    ground map (exhaustive over all ground maps into the target ground). */
UniversalVerdict verify_universal_property(const BornSystem& sys, const BornSpace& target,
                                           const SystemMorphism& m, Elem truncation = 6);

/** The forgetful projection onto basis objects. */
const BObject& loc(const BornSystem& sys);
/** Printable basis component of a morphism. */
std::string loc_repr(const SystemMorphism& m);

/** Spatializing an embedded space gives the space back. */
bool spat_embed_roundtrip(const BornSpace& sp, Elem truncation = 6);

struct FullnessReport {
  bool holds = false;
  std::size_t assignments_pruned = 0;
  std::string detail;
};

/** Fullness of the embedding on extensional bornologies: every map between
    the member sets that makes the embedding square commute is the
    restriction of the image operator, and that restriction is an
    ideal-category morphism. Exhaustive over candidate assignments with
    square pruning. */
FullnessReport check_embedding_fullness(const BornSpace& sp1, const BornSpace& sp2,
                                        const GroundMap& f, const BasisMap& theory,
                                        Elem truncation = 6);

} // namespace bornolab

#endif
