#ifndef BORNOLAB_BASIS_MAP_HPP
#define BORNOLAB_BASIS_MAP_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bornolab/lattice.hpp"
#include "bornolab/omega_ramp.hpp"

namespace bornolab {

/** A total map between basis lattices: a full table on a finite source, or
    an OmegaRamp on the omega chain. Ramps are monotone by construction;
    tables carry no such constraint. */
class BasisMap {
public:
  /** Table rule; values.size() must equal src->size(). */
  static BasisMap table(LatticePtr src, LatticePtr dst, std::vector<Elem> values);
  /** Ramp rule; src must be the omega chain and ramp.dst() == dst. */
  static BasisMap ramp(LatticePtr src, LatticePtr dst, OmegaRamp ramp);
  static BasisMap identity(LatticePtr lattice);

  const LatticePtr& src() const { return src_; }
  const LatticePtr& dst() const { return dst_; }

  Elem eval(Elem a) const;
  bool is_table() const { return std::holds_alternative<std::vector<Elem>>(rule_); }
  const std::vector<Elem>& table_rule() const { return std::get<std::vector<Elem>>(rule_); }
  const OmegaRamp& ramp_rule() const { return std::get<OmegaRamp>(rule_); }

  bool is_monotone() const;

  bool operator==(const BasisMap& o) const;

private:
  BasisMap() = default;
  LatticePtr src_;
  LatticePtr dst_;
  std::variant<std::vector<Elem>, OmegaRamp> rule_;
};

/** Compact printable form (element names, ramp normal form). */
std::string repr(const BasisMap& m);

/** True iff phi preserves exactly the flagged operations. Finite sources
    are checked exhaustively (all pairs, all represented subsets); omega
    sources combine head/window checks with the structural tail facts of the
    ramp normal form (a monotone map on a chain preserves binary meets and
    joins; arbitrary joins additionally need the value at omega to be the
    sup of the finite values). ArbJoin subsumes the empty join (bot) and
    ArbMeet the empty meet (top). */
bool check_homomorphism(const BasisMap& phi, const OpSignature& sig, Elem truncation = 6);

/** The right adjoint b -> sup { a : phi(a) <= b }. Requires phi to
    preserve arbitrary represented joins and bot; throws NotJoinPreserving
    otherwise. The Galois law phi(a) <= b <=> a <= adjoint(b) is a test-suite
    obligation, not an assumption. */
BasisMap right_adjoint(const BasisMap& phi, Elem truncation = 6);

/** Composition outer . inner, normalized back into the table/ramp
    representation. Throws UnsupportedComposition when the composite falls
    outside it (a non-monotone table applied after a ramp). */
BasisMap compose(const BasisMap& outer, const BasisMap& inner);

} // namespace bornolab

#endif
