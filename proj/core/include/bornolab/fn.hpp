#ifndef BORNOLAB_FN_HPP
#define BORNOLAB_FN_HPP

#include <memory>
#include <string>
#include <vector>

#include "bornolab/ground.hpp"
#include "bornolab/lattice.hpp"

namespace bornolab {

class FnLattice;
using FnLatticePtr = std::shared_ptr<const FnLattice>;

/** An element of a function lattice: a total map ground -> basis held as a
    value vector in point order. Ordered pointwise. */
class LFunction {
public:
  LFunction(FnLatticePtr carrier, std::vector<Elem> values);

  const FnLatticePtr& carrier() const { return carrier_; }
  Elem at(Point p) const { return values_.at(p); }
  const std::vector<Elem>& values() const { return values_; }

  bool operator==(const LFunction& o) const { return values_ == o.values_; }
  /** Lexicographic order in point order; used only for deterministic
      sorting, not the lattice order. */
  bool operator<(const LFunction& o) const { return values_ < o.values_; }

private:
  FnLatticePtr carrier_;
  std::vector<Elem> values_;
};

/** The pointwise-ordered complete lattice L^X. Enumerable (by mixed-radix
    index, first point most significant) when the basis is finite; over the
    omega chain the operations stay pointwise and nothing is enumerated. */
class FnLattice : public std::enable_shared_from_this<FnLattice> {
public:
  static FnLatticePtr make(LatticePtr basis, GroundPtr ground);
  /** L^{point}: the one-coordinate function lattice used to run the ideal
      machinery over a bare basis lattice. */
  static FnLatticePtr over_point(LatticePtr basis);

  const LatticePtr& basis() const { return basis_; }
  const GroundPtr& ground() const { return ground_; }

  LFunction bottom() const;
  LFunction topfn() const;
  LFunction constant(Elem c) const;
  LFunction make_fn(std::vector<Elem> values) const;

  bool leq(const LFunction& a, const LFunction& b) const;
  LFunction meet(const LFunction& a, const LFunction& b) const;
  LFunction join(const LFunction& a, const LFunction& b) const;

  bool enumerable() const { return basis_->is_finite(); }
  /** |L|^|X| for a finite basis. */
  std::size_t card() const;
  LFunction fn_at(std::size_t index) const;
  std::size_t index_of(const LFunction& fn) const;

  std::string repr(const LFunction& fn) const;

  bool same_as(const FnLattice& o) const {
    return basis_.get() == o.basis_.get() && ground_.get() == o.ground_.get();
  }

private:
  FnLattice() = default;
  LatticePtr basis_;
  GroundPtr ground_;
};

} // namespace bornolab

#endif
