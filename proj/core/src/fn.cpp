#include "bornolab/fn.hpp"

#include <map>
#include <mutex>

namespace bornolab {

LFunction::LFunction(FnLatticePtr carrier, std::vector<Elem> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
  if (values_.size() != carrier_->ground()->size())
    fail(Errc::GroundMismatch, "function does not cover its ground set");
  for (Elem v : values_)
    if (!carrier_->basis()->is_valid_elem(v))
      fail(Errc::BasisMismatch, "function value outside its basis");
}

FnLatticePtr FnLattice::make(LatticePtr basis, GroundPtr ground) {
  // one carrier per (basis, ground) pair so image operators and ideals built
  // at different sites agree on carrier identity
  static std::mutex mu;
  static std::map<std::pair<const Lattice*, const GroundSet*>, FnLatticePtr> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[{basis.get(), ground.get()}];
  if (!slot) {
    auto f = std::shared_ptr<FnLattice>(new FnLattice());
    f->basis_ = std::move(basis);
    f->ground_ = std::move(ground);
    slot = f;
  }
  return slot;
}

FnLatticePtr FnLattice::over_point(LatticePtr basis) {
  // one carrier per lattice object, so ideals from independent call sites
  // share their carrier identity
  static std::mutex mu;
  static std::map<const Lattice*, FnLatticePtr> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[basis.get()];
  if (!slot) slot = make(std::move(basis), GroundSet::make("_pt", {"_"}));
  return slot;
}

LFunction FnLattice::bottom() const { return constant(basis_->bot()); }
LFunction FnLattice::topfn() const { return constant(basis_->top()); }

LFunction FnLattice::constant(Elem c) const {
  return LFunction(shared_from_this(), std::vector<Elem>(ground_->size(), c));
}

LFunction FnLattice::make_fn(std::vector<Elem> values) const {
  return LFunction(shared_from_this(), std::move(values));
}

bool FnLattice::leq(const LFunction& a, const LFunction& b) const {
  for (Point p = 0; p < ground_->size(); ++p)
    if (!basis_->leq(a.at(p), b.at(p))) return false;
  return true;
}

LFunction FnLattice::meet(const LFunction& a, const LFunction& b) const {
  std::vector<Elem> v(ground_->size());
  for (Point p = 0; p < v.size(); ++p) v[p] = basis_->meet(a.at(p), b.at(p));
  return make_fn(std::move(v));
}

LFunction FnLattice::join(const LFunction& a, const LFunction& b) const {
  std::vector<Elem> v(ground_->size());
  for (Point p = 0; p < v.size(); ++p) v[p] = basis_->join(a.at(p), b.at(p));
  return make_fn(std::move(v));
}

std::size_t FnLattice::card() const {
  if (!enumerable()) fail(Errc::TooLarge, "omega-basis function lattice is infinite");
  std::size_t n = 1;
  for (Point p = 0; p < ground_->size(); ++p) {
    n *= basis_->size();
    if (n > (std::size_t{1} << 24)) fail(Errc::TooLarge, "function lattice too large");
  }
  return n;
}

LFunction FnLattice::fn_at(std::size_t index) const {
  const std::size_t b = basis_->size();
  std::vector<Elem> v(ground_->size());
  for (std::size_t p = ground_->size(); p-- > 0;) {
    v[p] = static_cast<Elem>(index % b);
    index /= b;
  }
  return make_fn(std::move(v));
}

std::size_t FnLattice::index_of(const LFunction& fn) const {
  const std::size_t b = basis_->size();
  std::size_t index = 0;
  for (Point p = 0; p < ground_->size(); ++p) index = index * b + fn.at(p);
  return index;
}

std::string FnLattice::repr(const LFunction& fn) const {
  std::string s = "{";
  for (Point p = 0; p < ground_->size(); ++p) {
    if (p) s += " ";
    s += ground_->point_name(p) + "=" + basis_->elem_repr(fn.at(p));
  }
  s += "}";
  return s;
}

} // namespace bornolab
