#ifndef BORNOLAB_LATTICE_HPP
#define BORNOLAB_LATTICE_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bornolab/errors.hpp"

namespace bornolab {

/** Lattice element handle.
    For a finite lattice this is an index into the element table (declaration
    order).  For the omega chain it is the natural number itself, with
    `kOmega` standing for the top element. */
using Elem = std::uint32_t;

inline constexpr Elem kOmega = std::numeric_limits<Elem>::max();

/** Description of a finite lattice before validation: named elements plus
    either a cover relation (reflexive-transitive closure is taken) or a full
    order relation given as pairs. */
struct LatticeSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers; // a covered by b
  std::vector<std::pair<std::string, std::string>> leq;    // explicit a <= b
  std::optional<std::string> bot;
  std::optional<std::string> top;
};

/** An effectively presented complete lattice: a validated finite lattice
    (full order relation, precomputed meet/join tables) or the chain
    0 < 1 < 2 < ... < omega.

    Values are immutable after construction and freely shareable. */
class Lattice {
public:
  enum class Kind { Finite, OmegaChain };

  /** Validates and builds a finite lattice. Throws NotAPoset, NoMeet,
      NoJoin or NoBotTop when the description is not a bounded lattice. */
  static std::shared_ptr<const Lattice> finite(const LatticeSpec& spec);

  /** The chain of naturals with omega adjoined on top. */
  static std::shared_ptr<const Lattice> omega(std::string name = "omega");

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const std::string& name() const { return name_; }

  /** Number of elements; valid for finite lattices only. */
  std::size_t size() const;

  bool leq(Elem a, Elem b) const;
  Elem meet(Elem a, Elem b) const;
  Elem join(Elem a, Elem b) const;
  Elem bot() const;
  Elem top() const;

  /** Join of a finite list of elements (empty list gives bot). */
  Elem join_all(std::span<const Elem> xs) const;
  /** Meet of a finite list of elements (empty list gives top). */
  Elem meet_all(std::span<const Elem> xs) const;

  bool is_valid_elem(Elem a) const;

  /** True iff a < b with no element strictly between (Hasse edge). */
  bool covers(Elem b, Elem a) const;

  /** a \/ (b /\ c) distributes for all triples. Chains are distributive;
      the omega chain short-circuits to true. */
  bool is_distributive() const;

  const std::string& elem_name(Elem a) const;
  std::string elem_repr(Elem a) const; // printable also for omega-chain values
  std::optional<Elem> elem_by_name(const std::string& id) const;
  /** Parses a finite-lattice element name, or a natural / "omega" for the
      omega chain. */
  std::optional<Elem> parse_elem(const std::string& token) const;

  bool same_as(const Lattice& other) const { return this == &other; }

private:
  Lattice() = default;

  Kind kind_ = Kind::Finite;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<bool> leq_;  // size n*n, row-major: leq_[a*n+b] = (a <= b)
  std::vector<Elem> meet_; // size n*n
  std::vector<Elem> join_; // size n*n
  Elem bot_ = 0;
  Elem top_ = 0;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/** Operation flags of a reduct signature. Bot is required for every
    signature used as a reduct; ArbJoin subsumes the empty join (bot) and
    ArbMeet the empty meet (top) when checked on maps. */
struct OpSignature {
  bool bin_meet = false;
  bool bin_join = false;
  bool arb_join = false;
  bool arb_meet = false;
  bool bot = false;
  bool top = false;

  bool any() const { return bin_meet || bin_join || arb_join || arb_meet || bot || top; }

  static OpSignature lat_bot() { return {true, true, false, false, true, false}; }
  static OpSignature clat() { return {true, true, true, true, true, true}; }
};

/** A subset of a lattice in computable form: explicitly listed elements
    plus, for the omega chain, an optional unbounded tail {from, from+1, ...}
    of naturals. Every sup/inf used by the artifact is computed from this
    representation. */
struct RepSubset {
  std::vector<Elem> listed;          // may include kOmega
  std::optional<Elem> tail_from;     // all naturals >= tail_from (omega chain only)

  bool contains(const Lattice& L, Elem a) const;
  Elem sup(const Lattice& L) const;  // empty subset gives bot
  Elem inf(const Lattice& L) const;  // empty subset gives top

  static RepSubset all_finite() { return RepSubset{{}, 0}; }
};

/** Deterministic catalog of represented subsets used by the property
    checks: all subsets for a finite lattice, and for the omega chain all
    subsets of a truncation window plus the tail families. */
std::vector<RepSubset> represented_subsets(const Lattice& L, Elem truncation);

} // namespace bornolab

#endif
