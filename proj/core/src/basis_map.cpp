#include "bornolab/basis_map.hpp"

#include <algorithm>

namespace bornolab {

BasisMap BasisMap::table(LatticePtr src, LatticePtr dst, std::vector<Elem> values) {
  if (!src->is_finite()) fail(Errc::BasisMismatch, "table rule needs a finite source");
  if (values.size() != src->size())
    fail(Errc::BasisMismatch, "table size " + std::to_string(values.size()) +
                                  " does not match |" + src->name() + "|");
  for (Elem v : values)
    if (!dst->is_valid_elem(v)) fail(Errc::BasisMismatch, "table value outside codomain");
  BasisMap m;
  m.src_ = std::move(src);
  m.dst_ = std::move(dst);
  m.rule_ = std::move(values);
  return m;
}

BasisMap BasisMap::ramp(LatticePtr src, LatticePtr dst, OmegaRamp ramp) {
  if (src->is_finite()) fail(Errc::BasisMismatch, "ramp rule needs the omega chain source");
  if (ramp.dst().get() != dst.get()) fail(Errc::BasisMismatch, "ramp codomain mismatch");
  BasisMap m;
  m.src_ = std::move(src);
  m.dst_ = std::move(dst);
  m.rule_ = std::move(ramp);
  return m;
}

BasisMap BasisMap::identity(LatticePtr lattice) {
  if (lattice->is_finite()) {
    std::vector<Elem> values(lattice->size());
    for (Elem a = 0; a < values.size(); ++a) values[a] = a;
    auto copy = lattice;
    return table(std::move(copy), std::move(lattice), std::move(values));
  }
  auto copy = lattice;
  OmegaRamp id = OmegaRamp::identity(lattice);
  return ramp(std::move(copy), std::move(lattice), std::move(id));
}

Elem BasisMap::eval(Elem a) const {
  if (is_table()) return table_rule().at(a);
  return ramp_rule().eval(a);
}

bool BasisMap::is_monotone() const {
  if (!is_table()) return true;
  const std::size_t n = src_->size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (src_->leq(a, b) && !dst_->leq(eval(a), eval(b))) return false;
  return true;
}

bool BasisMap::operator==(const BasisMap& o) const {
  if (src_.get() != o.src_.get() || dst_.get() != o.dst_.get()) return false;
  if (is_table() != o.is_table()) return false;
  if (is_table()) return table_rule() == o.table_rule();
  return ramp_rule() == o.ramp_rule();
}

std::string repr(const BasisMap& m) {
  std::string s;
  if (m.is_table()) {
    s = "table {";
    for (Elem a = 0; a < m.table_rule().size(); ++a) {
      if (a) s += " ";
      s += m.src()->elem_repr(a) + "->" + m.dst()->elem_repr(m.eval(a));
    }
    return s + "}";
  }
  const OmegaRamp& r = m.ramp_rule();
  s = "ramp {head=[";
  for (std::size_t i = 0; i < r.head().size(); ++i) {
    if (i) s += ",";
    s += m.dst()->elem_repr(r.head()[i]);
  }
  s += "] tail=";
  if (r.tail().kind == RampTail::Kind::Const)
    s += "const " + m.dst()->elem_repr(r.tail().value);
  else
    s += "shift " + std::to_string(r.tail().shift);
  s += " omega=" + m.dst()->elem_repr(r.omega_value()) + "}";
  return s;
}

bool check_homomorphism(const BasisMap& phi, const OpSignature& sig, Elem truncation) {
  const Lattice& src = *phi.src();
  const Lattice& dst = *phi.dst();

  if (sig.bot && phi.eval(src.bot()) != dst.bot()) return false;
  if (sig.top && phi.eval(src.top()) != dst.top()) return false;

  if (src.is_finite()) {
    const Elem n = static_cast<Elem>(src.size());
    if (sig.bin_meet || sig.bin_join) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          if (sig.bin_meet &&
              phi.eval(src.meet(a, b)) != dst.meet(phi.eval(a), phi.eval(b)))
            return false;
          if (sig.bin_join &&
              phi.eval(src.join(a, b)) != dst.join(phi.eval(a), phi.eval(b)))
            return false;
        }
    }
    if (sig.arb_join || sig.arb_meet) {
      for (const RepSubset& s : represented_subsets(src, truncation)) {
        std::vector<Elem> images;
        images.reserve(s.listed.size());
        for (Elem a : s.listed) images.push_back(phi.eval(a));
        if (sig.arb_join && phi.eval(s.sup(src)) != dst.join_all(images)) return false;
        if (sig.arb_meet && phi.eval(s.inf(src)) != dst.meet_all(images)) return false;
      }
    }
    return true;
  }

  // omega source: the ramp is monotone, and on a chain monotone maps
  // preserve binary meets and joins; spot-check the window anyway.
  const OmegaRamp& r = phi.ramp_rule();
  std::vector<Elem> window;
  for (Elem v = 0; v <= truncation; ++v) window.push_back(v);
  for (std::size_t i = 0; i <= 2; ++i)
    window.push_back(static_cast<Elem>(r.head().size() + i));
  window.push_back(kOmega);

  if (sig.bin_meet || sig.bin_join) {
    for (Elem a : window)
      for (Elem b : window) {
        if (sig.bin_meet &&
            phi.eval(src.meet(a, b)) != dst.meet(phi.eval(a), phi.eval(b)))
          return false;
        if (sig.bin_join &&
            phi.eval(src.join(a, b)) != dst.join(phi.eval(a), phi.eval(b)))
          return false;
      }
  }
  if (sig.arb_join) {
    if (phi.eval(src.bot()) != dst.bot()) return false;
    // sup-at-omega: every represented unbounded set has sup omega, so the
    // single normal-form condition covers all of them
    if (!r.sup_continuous()) return false;
    for (const RepSubset& s : represented_subsets(src, truncation)) {
      std::vector<Elem> images;
      for (Elem a : s.listed) images.push_back(phi.eval(a));
      Elem rhs = dst.join_all(images);
      if (s.tail_from) rhs = dst.join(rhs, r.sup_finite());
      if (phi.eval(s.sup(src)) != rhs) return false;
    }
  }
  if (sig.arb_meet) {
    if (phi.eval(src.top()) != dst.top()) return false;
    // every non-empty represented subset of the omega chain has a least
    // element, so monotonicity settles the represented infima
    for (const RepSubset& s : represented_subsets(src, truncation)) {
      if (s.listed.empty() && !s.tail_from) continue;
      Elem least = s.inf(src);
      std::vector<Elem> images{phi.eval(least)};
      for (Elem a : s.listed) images.push_back(phi.eval(a));
      if (s.tail_from) images.push_back(phi.eval(*s.tail_from));
      if (phi.eval(least) != dst.meet_all(images)) return false;
    }
  }
  return true;
}

BasisMap right_adjoint(const BasisMap& phi, Elem truncation) {
  OpSignature join_sig;
  join_sig.arb_join = true;
  join_sig.bot = true;
  if (!check_homomorphism(phi, join_sig, truncation))
    fail(Errc::NotJoinPreserving, "adjoint of a map that does not preserve joins");

  const LatticePtr& src = phi.src();
  const LatticePtr& dst = phi.dst();

  if (src->is_finite()) {
    if (dst->is_finite()) {
      std::vector<Elem> values(dst->size());
      for (Elem b = 0; b < values.size(); ++b) {
        std::vector<Elem> below;
        for (Elem a = 0; a < src->size(); ++a)
          if (dst->leq(phi.eval(a), b)) below.push_back(a);
        values[b] = src->join_all(below);
      }
      return BasisMap::table(dst, src, std::move(values));
    }
    // finite source into the omega chain: thresholds at the finite values
    Elem cut = 0;
    for (Elem a = 0; a < src->size(); ++a) {
      Elem v = phi.eval(a);
      if (v != kOmega) cut = std::max(cut, v);
    }
    std::size_t window = static_cast<std::size_t>(cut) + 1;
    std::vector<Elem> head(window);
    for (std::size_t b = 0; b < window; ++b) {
      std::vector<Elem> below;
      for (Elem a = 0; a < src->size(); ++a)
        if (phi.eval(a) <= static_cast<Elem>(b)) below.push_back(a);
      head[b] = src->join_all(below);
    }
    std::vector<Elem> finite_fiber;
    for (Elem a = 0; a < src->size(); ++a)
      if (phi.eval(a) != kOmega) finite_fiber.push_back(a);
    RampTail tail = RampTail::constant(src->join_all(finite_fiber));
    OmegaRamp r(src, std::move(head), tail, src->top());
    return BasisMap::ramp(dst, src, std::move(r));
  }

  // omega source
  const OmegaRamp& r = phi.ramp_rule();
  if (!dst->is_finite())
    return BasisMap::ramp(dst, src, r.adjoint_into_omega(src));

  // ramp into a finite lattice: tabulate sup { n : r(n) <= b } per b
  std::vector<Elem> values(dst->size());
  for (Elem b = 0; b < values.size(); ++b) {
    if (dst->leq(r.omega_value(), b)) { values[b] = kOmega; continue; }
    if (dst->leq(r.sup_finite(), b)) { values[b] = kOmega; continue; }
    Elem best = 0;
    for (std::size_t i = 0; i < r.head().size(); ++i)
      if (dst->leq(r.head()[i], b)) best = static_cast<Elem>(i);
    // the tail value is constant here (finite codomain); if it fit, the
    // sup_finite branch above would have taken it
    values[b] = best;
  }
  return BasisMap::table(dst, src, std::move(values));
}

BasisMap compose(const BasisMap& outer, const BasisMap& inner) {
  if (inner.dst().get() != outer.src().get())
    fail(Errc::BasisMismatch, "composing maps over different middle lattices");
  if (inner.is_table()) {
    std::vector<Elem> values(inner.table_rule().size());
    for (Elem a = 0; a < values.size(); ++a) values[a] = outer.eval(inner.eval(a));
    return BasisMap::table(inner.src(), outer.dst(), std::move(values));
  }
  try {
    if (outer.is_table())
      return BasisMap::ramp(inner.src(), outer.dst(),
                            inner.ramp_rule().mapped(outer.table_rule(), outer.dst()));
    return BasisMap::ramp(inner.src(), outer.dst(),
                          inner.ramp_rule().mapped(outer.ramp_rule()));
  } catch (const Error& e) {
    if (e.code() == Errc::NotMonotone)
      fail(Errc::UnsupportedComposition, "composite is not a monotone ramp");
    throw;
  }
}

} // namespace bornolab
