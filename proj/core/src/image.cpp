#include "bornolab/image.hpp"

namespace bornolab {

ImageMap::ImageMap(GroundMap f, BasisMap phi) : f_(std::move(f)), phi_(std::move(phi)) {
  src_ = FnLattice::make(phi_.src(), f_.src());
  dst_ = FnLattice::make(phi_.dst(), f_.dst());
  try {
    adj_ = right_adjoint(phi_);
  } catch (const Error& e) {
    if (e.code() != Errc::NotJoinPreserving) throw;
  }
}

LFunction ImageMap::eval(const LFunction& alpha) const {
  if (!alpha.carrier()->same_as(*src_)) fail(Errc::BasisMismatch, "image of a foreign function");
  const Lattice& M = *dst_->basis();
  std::vector<Elem> out(dst_->ground()->size(), M.bot());
  for (Point x = 0; x < src_->ground()->size(); ++x) {
    Point y = f_.eval(x);
    out[y] = M.join(out[y], phi_.eval(alpha.at(x)));
  }
  return dst_->make_fn(std::move(out));
}

const BasisMap& ImageMap::phi_adjoint() const {
  if (!adj_) fail(Errc::NotJoinPreserving, "basis map has no right adjoint");
  return *adj_;
}

LFunction ImageMap::adjoint(const LFunction& beta) const {
  const BasisMap& adj = phi_adjoint();
  if (!beta.carrier()->same_as(*dst_)) fail(Errc::BasisMismatch, "adjoint of a foreign function");
  std::vector<Elem> out(src_->ground()->size());
  for (Point x = 0; x < out.size(); ++x) out[x] = adj.eval(beta.at(f_.eval(x)));
  return src_->make_fn(std::move(out));
}

LFunction forward_image(const GroundMap& f, const BasisMap& phi, const LFunction& alpha) {
  return ImageMap(f, phi).eval(alpha);
}

LFunction forward_image(const GroundMap& f, const LFunction& alpha) {
  return ImageMap(f, BasisMap::identity(alpha.carrier()->basis())).eval(alpha);
}

LFunction forward_right_adjoint(const GroundMap& f, const BasisMap& phi, const LFunction& beta) {
  return ImageMap(f, phi).adjoint(beta);
}

Ideal preimage_ideal(const ImageMap& op, const Ideal& J, Elem truncation) {
  if (!J.carrier()->same_as(*op.dst()))
    fail(Errc::BasisMismatch, "preimage target over the wrong carrier");
  const FnLatticePtr& src = op.src();

  if (src->enumerable()) {
    std::vector<LFunction> members;
    const std::size_t n = src->card();
    for (std::size_t i = 0; i < n; ++i) {
      LFunction alpha = src->fn_at(i);
      if (J.contains(op.eval(alpha))) members.push_back(std::move(alpha));
    }
    return Ideal::extensional(src, std::move(members));
  }

  // omega basis: per-coordinate downset analysis through the basis map.
  // alpha is mapped into J iff at every x, alpha(x) lies in the preimage of
  //   { b : b <= ceiling(f(x)), b < omega when f(x) is in the region }.
  const LFunction ceiling = J.sup();
  auto point_dst = FnLattice::over_point(op.basis_map().dst());
  std::vector<Elem> bounds(src->ground()->size());
  std::vector<Point> region;
  for (Point x = 0; x < src->ground()->size(); ++x) {
    Point y = op.ground_map().eval(x);
    bool strict = J.is_ramp() &&
                  std::binary_search(J.region().begin(), J.region().end(), y);
    Ideal target = strict
                       ? Ideal::ramp(point_dst, {0}, point_dst->constant(ceiling.at(y)))
                       : Ideal::principal(point_dst, point_dst->constant(ceiling.at(y)));
    Ideal pulled = preimage_ideal(op.basis_map(), target, truncation);
    bounds[x] = pulled.sup().at(0);
    if (pulled.is_ramp() && !pulled.region().empty()) region.push_back(x);
  }
  return Ideal::ramp(src, std::move(region), src->make_fn(std::move(bounds)));
}

Theory::Theory(LatticePtr basis, OpSignature reduct) : basis_(std::move(basis)) {
  OpSignature want = OpSignature::lat_bot();
  if (reduct.bin_meet != want.bin_meet || reduct.bin_join != want.bin_join ||
      reduct.bot != want.bot || reduct.arb_join || reduct.arb_meet || reduct.top)
    fail(Errc::UnsupportedReduct, "only the bottomed-lattice reduct is supported");
}

FnLatticePtr Theory::powerset(const GroundPtr& ground) const {
  return FnLattice::make(basis_, ground);
}

ImageMap Theory::image(const GroundMap& f) const {
  return ImageMap(f, BasisMap::identity(basis_));
}

ImageMap Theory::image(const GroundMap& f, const BasisMap& phi) const {
  if (phi.src().get() != basis_.get())
    fail(Errc::BasisMismatch, "variable-basis image must start at the theory basis");
  return ImageMap(f, phi);
}

} // namespace bornolab
