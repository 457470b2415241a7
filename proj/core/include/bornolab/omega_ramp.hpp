#ifndef BORNOLAB_OMEGA_RAMP_HPP
#define BORNOLAB_OMEGA_RAMP_HPP

#include <cstdint>
#include <vector>

#include "bornolab/lattice.hpp"

namespace bornolab {

/** Tail rule of an OmegaRamp, in force for arguments past the explicit head:
    either a constant value, or (into the omega chain only) the shifted
    identity n -> n + shift. A capped ramp normalizes to a head followed by a
    Const tail, so no cap field is needed in the normal form. */
struct RampTail {
  enum class Kind : std::uint8_t { Const, Shift };
  Kind kind = Kind::Const;
  Elem value = 0;           // Const payload
  std::int64_t shift = 0;   // Shift payload

  static RampTail constant(Elem c) { return RampTail{Kind::Const, c, 0}; }
  static RampTail shifted(std::int64_t d) { return RampTail{Kind::Shift, 0, d}; }

  bool operator==(const RampTail& o) const {
    if (kind != o.kind) return false;
    return kind == Kind::Const ? value == o.value : shift == o.shift;
  }
};

/** A monotone map from the omega chain into a lattice, finitely presented:
    explicit values on 0..head-1, a tail rule past the head, and an explicit
    value at omega. The value at omega defaults to the sup of the finite
    values but may sit strictly above it (such maps are monotone yet not
    sup-preserving; they arise as right adjoints).

    Instances are kept in a canonical form (minimal head), so structural
    equality decides extensional equality. */
class OmegaRamp {
public:
  /** Builds and normalizes; throws NotMonotone when the data is not
      monotone, and TooLarge for absurd head windows. */
  OmegaRamp(LatticePtr dst, std::vector<Elem> head, RampTail tail);
  OmegaRamp(LatticePtr dst, std::vector<Elem> head, RampTail tail, Elem omega_value);

  static OmegaRamp constant(LatticePtr dst, Elem c);
  /** The identity on the omega chain. */
  static OmegaRamp identity(LatticePtr omega_chain);

  const LatticePtr& dst() const { return dst_; }
  const std::vector<Elem>& head() const { return head_; }
  const RampTail& tail() const { return tail_; }
  Elem omega_value() const { return omega_v_; }

  Elem eval(Elem n) const;

  /** Sup of the values at finite arguments. */
  Elem sup_finite() const;
  /** True iff the value at omega equals the sup of the finite values,
      i.e. the map preserves the sup of every represented unbounded set. */
  bool sup_continuous() const { return omega_v_ == sup_finite(); }
  /** True iff some finite argument already takes the value omega
      (only possible into the omega chain). */
  bool hits_omega_at_finite() const;
  /** True iff the finite values are unbounded (Shift tail). */
  bool unbounded() const { return tail_.kind == RampTail::Kind::Shift; }

  /** Post-composition with a finite-lattice table dst -> new_dst.
      Throws NotMonotone when the composite fails to be monotone. */
  OmegaRamp mapped(const std::vector<Elem>& table, LatticePtr new_dst) const;
  /** Post-composition with a map out of the omega chain (dst must be the
      omega chain). */
  OmegaRamp mapped(const OmegaRamp& g) const;

  /** Pointwise join / meet with another ramp into the same lattice. */
  OmegaRamp join(const OmegaRamp& other) const;
  OmegaRamp meet(const OmegaRamp& other) const;

  /** The right adjoint as a map dst -> src_chain, when dst is the omega
      chain: b -> sup { n : eval(n) <= b }. Requires sup_continuous().
      src_chain is the omega chain this ramp is defined on. */
  OmegaRamp adjoint_into_omega(LatticePtr src_chain) const;

  bool operator==(const OmegaRamp& o) const {
    return dst_.get() == o.dst_.get() && head_ == o.head_ && tail_ == o.tail_ &&
           omega_v_ == o.omega_v_;
  }

private:
  void normalize();
  void validate() const;
  Elem tail_at(std::size_t n) const;

  LatticePtr dst_;
  std::vector<Elem> head_;
  RampTail tail_;
  Elem omega_v_ = 0;
};

} // namespace bornolab

#endif
