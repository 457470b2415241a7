#include "bornolab/systems.hpp"

#include <algorithm>

namespace bornolab {

namespace {

OmegaRamp apply_basis(const BasisMap& g, const OmegaRamp& r) {
  if (g.is_table()) return r.mapped(g.table_rule(), g.dst());
  return r.mapped(g.ramp_rule());
}

/** Per-point sequence of image(f, phi) applied to the chain levels. */
OmegaRamp image_seq(const GroundMap& f, const BasisMap& phi,
                    const std::vector<OmegaRamp>& coords, Point y) {
  std::optional<OmegaRamp> acc;
  for (Point x = 0; x < f.src()->size(); ++x) {
    if (f.eval(x) != y) continue;
    OmegaRamp term = apply_basis(phi, coords[x]);
    acc = acc ? acc->join(term) : term;
  }
  if (acc) return *acc;
  return OmegaRamp::constant(phi.dst(), phi.dst()->bot());
}

std::string belem_repr(const BornSystem& sys, Elem b) {
  if (sys.bobj.is_ideal_obj()) return "member#" + std::to_string(b);
  return sys.bobj.lattice->elem_repr(b);
}

} // namespace

StructureMap StructureMap::table(FnLatticePtr tx, std::vector<LFunction> values) {
  StructureMap m;
  m.rep_ = Rep::Table;
  m.tx_ = std::move(tx);
  m.values_ = std::move(values);
  return m;
}

StructureMap StructureMap::chain(FnLatticePtr tx, std::vector<OmegaRamp> coords) {
  if (coords.size() != tx->ground()->size())
    fail(Errc::GroundMismatch, "chain structure map does not cover the ground set");
  StructureMap m;
  m.rep_ = Rep::Chain;
  m.tx_ = std::move(tx);
  m.coords_ = std::move(coords);
  return m;
}

StructureMap StructureMap::inclusion(FnLatticePtr tx) {
  StructureMap m;
  m.rep_ = Rep::Inclusion;
  m.tx_ = std::move(tx);
  return m;
}

LFunction StructureMap::eval(Elem b) const {
  if (rep_ == Rep::Table) return values_.at(b);
  if (rep_ == Rep::Chain) {
    std::vector<Elem> v(coords_.size());
    for (Point x = 0; x < coords_.size(); ++x) v[x] = coords_[x].eval(b);
    return tx_->make_fn(std::move(v));
  }
  fail(Errc::NotRepresentable, "inclusion maps are evaluated on members directly");
}

BornSystem validate_system(std::string name, GroundPtr ground, LatticePtr basis,
                           BObject bobj, StructureMap kappa, Elem truncation) {
  FnLatticePtr tx = FnLattice::make(basis, ground);
  if (!kappa.tx()->same_as(*tx))
    fail(Errc::BasisMismatch, "structure map lands in the wrong function lattice");

  switch (kappa.rep()) {
    case StructureMap::Rep::Table: {
      if (!bobj.lattice || !bobj.lattice->is_finite())
        fail(Errc::BasisMismatch, "table structure maps need a finite basis object");
      const Lattice& B = *bobj.lattice;
      if (kappa.table_values().size() != B.size())
        fail(Errc::BasisMismatch, "structure table does not cover the basis object");
      if (!(kappa.eval(B.bot()) == tx->bottom()))
        fail(Errc::NotIdealMorphism, "structure map does not preserve bot");
      for (Elem a = 0; a < B.size(); ++a)
        for (Elem b = 0; b < B.size(); ++b) {
          if (!(kappa.eval(B.join(a, b)) == tx->join(kappa.eval(a), kappa.eval(b))))
            fail(Errc::NotIdealMorphism,
                 "binary join broken at " + B.elem_repr(a) + ", " + B.elem_repr(b));
          if (!(kappa.eval(B.meet(a, b)) == tx->meet(kappa.eval(a), kappa.eval(b))))
            fail(Errc::NotIdealMorphism,
                 "binary meet broken at " + B.elem_repr(a) + ", " + B.elem_repr(b));
        }
      LFunction sup = tx->bottom();
      for (const LFunction& v : kappa.table_values()) sup = tx->join(sup, v);
      if (!(sup == tx->topfn()))
        fail(Errc::NoCoverage, "image join reaches " + tx->repr(sup) + " only");
      break;
    }
    case StructureMap::Rep::Chain: {
      if (!bobj.lattice || bobj.lattice->is_finite())
        fail(Errc::BasisMismatch, "chain structure maps need the omega chain object");
      for (Point x = 0; x < kappa.chain_coords().size(); ++x) {
        const OmegaRamp& r = kappa.chain_coords()[x];
        if (r.dst().get() != basis.get())
          fail(Errc::BasisMismatch, "chain coordinate lands outside the theory basis");
        if (r.eval(0) != basis->bot())
          fail(Errc::NotIdealMorphism,
               "structure map does not preserve bot at " + ground->point_name(x));
        if (!r.sup_continuous())
          fail(Errc::NotIdealMorphism,
               "value at omega must be the sup of the finite levels at " +
                   ground->point_name(x));
      }
      // monotone levels preserve binary joins and meets on a chain
      {
        bool covered = true;
        for (Point x = 0; x < kappa.chain_coords().size(); ++x)
          covered = covered && kappa.chain_coords()[x].eval(kOmega) == basis->top();
        if (!covered) {
          std::vector<Elem> sup(kappa.chain_coords().size());
          for (Point x = 0; x < sup.size(); ++x) sup[x] = kappa.chain_coords()[x].eval(kOmega);
          fail(Errc::NoCoverage, "image sup reaches " + tx->repr(tx->make_fn(sup)) + " only");
        }
      }
      break;
    }
    case StructureMap::Rep::Inclusion: {
      if (!bobj.is_ideal_obj())
        fail(Errc::BasisMismatch, "inclusion structure maps need an embedded ideal object");
      if (!bobj.ideal->carrier()->same_as(*tx))
        fail(Errc::BasisMismatch, "embedded ideal lives over the wrong carrier");
      if (!contains_top(*bobj.ideal, GenMode::CLat))
        fail(Errc::NoCoverage, "embedded ideal misses coverage");
      break;
    }
  }
  (void)truncation;
  return BornSystem{std::move(name), std::move(ground), std::move(basis),
                    std::move(bobj), std::move(kappa), std::move(tx)};
}

namespace {

/** Values of the function-valued basis part on a finite basis object. */
std::vector<LFunction> fnvalued_values(const SystemMorphism& m) {
  const FnValuedPart& part = std::get<FnValuedPart>(m.basis);
  std::vector<LFunction> out;
  if (m.src.bobj.is_ideal_obj()) {
    for (const LFunction& member : m.src.bobj.ideal->members())
      out.push_back(part.post ? part.post->eval(member) : member);
    return out;
  }
  const Lattice& B = *m.src.bobj.lattice;
  for (Elem b = 0; b < B.size(); ++b) {
    LFunction base = m.src.kappa.eval(b);
    out.push_back(part.post ? part.post->eval(base) : base);
  }
  return out;
}

/** Per-point sequences of the function-valued basis part (omega source). */
std::vector<OmegaRamp> fnvalued_seqs(const SystemMorphism& m) {
  const FnValuedPart& part = std::get<FnValuedPart>(m.basis);
  const std::vector<OmegaRamp>& coords = m.src.kappa.chain_coords();
  std::size_t pts = part.post ? part.post->dst()->ground()->size()
                              : m.src.tx->ground()->size();
  std::vector<OmegaRamp> out;
  for (Point y = 0; y < pts; ++y) {
    if (part.post)
      out.push_back(image_seq(part.post->ground_map(), part.post->basis_map(), coords, y));
    else
      out.push_back(coords[y]);
  }
  return out;
}

/** Membership of every finite-level value of the sequences in the ideal. */
bool seq_values_inside(const std::vector<OmegaRamp>& seqs, const Ideal& tau,
                       std::string& why) {
  if (tau.is_ramp()) {
    const LFunction& c = tau.ceiling();
    const Lattice& L = *tau.carrier()->basis();
    for (Point y = 0; y < seqs.size(); ++y) {
      if (!L.leq(seqs[y].sup_finite(), c.at(y))) {
        why = "values exceed the ceiling at " + tau.carrier()->ground()->point_name(y);
        return false;
      }
      bool in_region = std::binary_search(tau.region().begin(), tau.region().end(),
                                          static_cast<Point>(y));
      if (in_region && seqs[y].hits_omega_at_finite()) {
        why = "a finite level hits omega inside the region at " +
              tau.carrier()->ground()->point_name(y);
        return false;
      }
    }
    return true;
  }
  // extensional target: the sequences stabilize past their heads
  std::size_t span = 1;
  for (const OmegaRamp& s : seqs) span = std::max(span, s.head().size() + 1);
  for (Elem b = 0; b < span; ++b) {
    std::vector<Elem> v(seqs.size());
    for (Point y = 0; y < seqs.size(); ++y) v[y] = seqs[y].eval(b);
    if (!tau.contains(tau.carrier()->make_fn(std::move(v)))) {
      why = "level " + std::to_string(b) + " escapes the ideal";
      return false;
    }
  }
  return true;
}

} // namespace

MorphismVerdict is_system_morphism(const SystemMorphism& m, Elem truncation) {
  MorphismVerdict v;
  if (m.f.src().get() != m.src.ground.get() || m.f.dst().get() != m.dst.ground.get())
    fail(Errc::GroundMismatch, "morphism ground map does not match the systems");
  if (m.theory.src().get() != m.src.basis.get() || m.theory.dst().get() != m.dst.basis.get())
    fail(Errc::BasisMismatch, "morphism theory map does not match the systems");

  if (std::holds_alternative<BasisMap>(m.basis)) {
    const BasisMap& phi = std::get<BasisMap>(m.basis);
    if (m.src.bobj.is_ideal_obj() || m.dst.bobj.is_ideal_obj())
      fail(Errc::BasisMismatch, "embedded basis objects take function-valued parts");
    if (phi.src().get() != m.src.bobj.lattice.get() ||
        phi.dst().get() != m.dst.bobj.lattice.get())
      fail(Errc::BasisMismatch, "basis component does not match the basis objects");

    if (m.src.bobj.lattice->is_finite()) {
      ImageMap op(m.f, m.theory);
      for (Elem b = 0; b < m.src.bobj.lattice->size(); ++b) {
        LFunction lhs = op.eval(m.src.kappa.eval(b));
        LFunction rhs = m.dst.kappa.eval(phi.eval(b));
        if (!(lhs == rhs)) {
          v.pass = false;
          v.witness = belem_repr(m.src, b);
          return v;
        }
      }
      return v;
    }

    // omega basis object: compare ramp normal forms per target ground point
    const std::vector<OmegaRamp>& coords = m.src.kappa.chain_coords();
    for (Point y = 0; y < m.dst.ground->size(); ++y) {
      OmegaRamp lhs = image_seq(m.f, m.theory, coords, y);
      OmegaRamp rhs = [&]() -> OmegaRamp {
        if (m.dst.bobj.is_omega())
          return phi.ramp_rule().mapped(m.dst.kappa.chain_coords()[y]);
        std::vector<Elem> t(m.dst.bobj.lattice->size());
        for (Elem b2 = 0; b2 < t.size(); ++b2) t[b2] = m.dst.kappa.eval(b2).at(y);
        return phi.ramp_rule().mapped(t, m.dst.basis);
      }();
      if (!(lhs == rhs)) {
        v.pass = false;
        v.witness = "point " + m.dst.ground->point_name(y);
        return v;
      }
    }
    return v;
  }

  // function-valued part into an embedded ideal
  const FnValuedPart& part = std::get<FnValuedPart>(m.basis);
  if (!m.dst.bobj.is_ideal_obj())
    fail(Errc::BasisMismatch, "function-valued parts land in embedded ideals");
  const Ideal& tau = *m.dst.bobj.ideal;
  if (part.post) {
    if (!part.post->dst()->same_as(*tau.carrier()))
      fail(Errc::BasisMismatch, "post image lands outside the target carrier");
    if (part.post->ground_map().table() != m.f.table() ||
        !(part.post->basis_map() == m.theory))
      fail(Errc::BasisMismatch, "post image disagrees with the morphism maps");
  } else {
    if (!m.src.tx->same_as(*tau.carrier()))
      fail(Errc::BasisMismatch, "corestriction needs matching carriers");
    // the square then needs the identity image operator
    bool id_ground = m.f.src().get() == m.f.dst().get();
    for (Point x = 0; id_ground && x < m.f.src()->size(); ++x)
      id_ground = m.f.eval(x) == x;
    bool id_theory = m.theory == BasisMap::identity(m.src.basis);
    if (!id_ground || !id_theory)
      fail(Errc::BasisMismatch, "corestriction squares need identity maps");
  }

  if (m.src.bobj.is_ideal_obj()) {
    const Ideal& sigma = *m.src.bobj.ideal;
    if (!sigma.is_ramp()) {
      ImageMap op(m.f, m.theory);
      for (const LFunction& member : sigma.members()) {
        LFunction lhs = op.eval(member);
        LFunction val = part.post ? part.post->eval(member) : member;
        if (!(lhs == val) || !tau.contains(val)) {
          v.pass = false;
          v.witness = sigma.carrier()->repr(member);
          return v;
        }
      }
      return v;
    }
    // ramp source: the square is definitional (the post image carries the
    // morphism maps); membership is the boundedness inclusion
    Ideal pulled = part.post ? preimage_ideal(*part.post, tau, truncation) : tau;
    if (auto w = sigma.not_contained_witness(pulled)) {
      v.pass = false;
      v.witness = sigma.carrier()->repr(*w);
      return v;
    }
    for (Elem level = 0; level <= truncation; ++level) {
      LFunction member = sigma.chain_member(level);
      LFunction lhs = ImageMap(m.f, m.theory).eval(member);
      LFunction val = part.post ? part.post->eval(member) : member;
      if (!(lhs == val)) {
        v.pass = false;
        v.witness = sigma.carrier()->repr(member);
        return v;
      }
    }
    return v;
  }

  if (!m.src.bobj.is_omega()) {
    ImageMap op(m.f, m.theory);
    const Lattice& B = *m.src.bobj.lattice;
    for (Elem b = 0; b < B.size(); ++b) {
      LFunction base = m.src.kappa.eval(b);
      LFunction lhs = op.eval(base);
      LFunction val = part.post ? part.post->eval(base) : base;
      if (!(lhs == val) || !tau.contains(val)) {
        v.pass = false;
        v.witness = belem_repr(m.src, b);
        return v;
      }
    }
    return v;
  }

  // omega basis object into an embedded ideal
  {
    const std::vector<OmegaRamp>& coords = m.src.kappa.chain_coords();
    std::vector<OmegaRamp> lhs, rhs;
    for (Point y = 0; y < m.dst.ground->size(); ++y)
      lhs.push_back(image_seq(m.f, m.theory, coords, y));
    rhs = fnvalued_seqs(m);
    for (Point y = 0; y < lhs.size(); ++y)
      if (!(lhs[y] == rhs[y])) {
        v.pass = false;
        v.witness = "point " + m.dst.ground->point_name(y);
        return v;
      }
    std::string why;
    if (!seq_values_inside(rhs, tau, why)) {
      v.pass = false;
      v.witness = why;
      return v;
    }
  }
  return v;
}

SystemMorphism compose(const SystemMorphism& outer, const SystemMorphism& inner) {
  if (!std::holds_alternative<BasisMap>(outer.basis) ||
      !std::holds_alternative<BasisMap>(inner.basis))
    fail(Errc::UnsupportedComposition, "function-valued parts do not compose here");
  return SystemMorphism{inner.src,
                        outer.dst,
                        compose(outer.f, inner.f),
                        compose(outer.theory, inner.theory),
                        compose(std::get<BasisMap>(outer.basis), std::get<BasisMap>(inner.basis))};
}

BornSystem embed_space(const BornSpace& sp) {
  FnLatticePtr tx = sp.bornology.carrier();
  return BornSystem{"E_" + sp.name,          sp.ground, sp.basis,
                    BObject::embedded(sp.bornology), StructureMap::inclusion(tx), tx};
}

SystemMorphism embed_morphism(const SpaceMorphism& sm, Elem truncation) {
  SystemMorphism m{embed_space(sm.src), embed_space(sm.dst), sm.f, sm.phi,
                   FnValuedPart{ImageMap(sm.f, sm.phi)}};
  MorphismVerdict v = is_system_morphism(m, truncation);
  if (!v.pass) fail(Errc::NotIdealMorphism, "embedded morphism square broke at " + v.witness);
  return m;
}

BornSpace spatialize(const BornSystem& sys, Elem truncation) {
  switch (sys.kappa.rep()) {
    case StructureMap::Rep::Inclusion:
      return validate_space("spat_" + sys.name, sys.ground, sys.basis, *sys.bobj.ideal);
    case StructureMap::Rep::Table: {
      GeneratorSet g{sys.tx, sys.kappa.table_values()};
      return validate_space("spat_" + sys.name, sys.ground, sys.basis,
                            generate_ideal(g, GenMode::LatBot));
    }
    case StructureMap::Rep::Chain: {
      const std::vector<OmegaRamp>& coords = sys.kappa.chain_coords();
      std::vector<Elem> ceiling(coords.size());
      std::vector<Point> region;
      for (Point x = 0; x < coords.size(); ++x) {
        ceiling[x] = coords[x].sup_finite();
        if (coords[x].unbounded()) region.push_back(x);
      }
      Ideal tau = Ideal::ramp(sys.tx, std::move(region), sys.tx->make_fn(std::move(ceiling)));
      (void)truncation;
      return validate_space("spat_" + sys.name, sys.ground, sys.basis, std::move(tau));
    }
  }
  fail(Errc::NotRepresentable, "unknown structure map representation");
}

BoundedVerdict spatialize_morphism(const SystemMorphism& m, Elem truncation) {
  return is_bounded(m.f, m.theory, spatialize(m.src, truncation),
                    spatialize(m.dst, truncation), truncation);
}

SystemMorphism reflection_arrow(const BornSystem& sys, Elem truncation) {
  BornSpace spat = spatialize(sys, truncation);
  return SystemMorphism{sys, embed_space(spat), GroundMap::identity(sys.ground),
                        BasisMap::identity(sys.basis), FnValuedPart{std::nullopt}};
}

const BObject& loc(const BornSystem& sys) { return sys.bobj; }

std::string loc_repr(const SystemMorphism& m) {
  if (std::holds_alternative<BasisMap>(m.basis))
    return repr(std::get<BasisMap>(m.basis));
  const FnValuedPart& part = std::get<FnValuedPart>(m.basis);
  return part.post ? "corestriction of the image operator" : "corestriction of kappa";
}

namespace {

bool equal_fnvalued(const SystemMorphism& a, const SystemMorphism& b, Elem truncation) {
  if (a.src.bobj.is_ideal_obj() && a.src.bobj.ideal->is_ramp()) {
    const FnValuedPart& pa = std::get<FnValuedPart>(a.basis);
    const FnValuedPart& pb = std::get<FnValuedPart>(b.basis);
    if (!pa.post && !pb.post) return true;
    for (Elem level = 0; level <= truncation; ++level) {
      LFunction member = a.src.bobj.ideal->chain_member(level);
      LFunction va = pa.post ? pa.post->eval(member) : member;
      LFunction vb = pb.post ? pb.post->eval(member) : member;
      if (!(va == vb)) return false;
    }
    return true;
  }
  if (a.src.bobj.lattice && a.src.bobj.is_omega()) {
    std::vector<OmegaRamp> sa = fnvalued_seqs(a);
    std::vector<OmegaRamp> sb = fnvalued_seqs(b);
    if (sa.size() != sb.size()) return false;
    for (std::size_t y = 0; y < sa.size(); ++y)
      if (!(sa[y] == sb[y])) return false;
    return true;
  }
  std::vector<LFunction> va = fnvalued_values(a);
  std::vector<LFunction> vb = fnvalued_values(b);
  return va == vb;
}

} // namespace

UniversalVerdict verify_universal_property(const BornSystem& sys, const BornSpace& target,
                                           const SystemMorphism& m, Elem truncation) {
  UniversalVerdict out;
  if (!m.dst.bobj.is_ideal_obj() || !(*m.dst.bobj.ideal == target.bornology))
    fail(Errc::BasisMismatch, "morphism codomain is not the embedded target");

  MorphismVerdict mv = is_system_morphism(m, truncation);
  if (!mv.pass) {
    out.detail = "input is not a morphism: " + mv.witness;
    return out;
  }

  BornSpace spat = spatialize(sys, truncation);
  BoundedVerdict bounded = is_bounded(m.f, m.theory, spat, target, truncation);
  if (!bounded.bounded) {
    out.detail = "ground map is not bounded on the spatialization: " + bounded.detail;
    return out;
  }

  BornSystem embedded = embed_space(target);
  SystemMorphism composite{sys, embedded, m.f, m.theory, FnValuedPart{ImageMap(m.f, m.theory)}};
  if (!is_system_morphism(composite, truncation).pass ||
      !equal_fnvalued(composite, m, truncation)) {
    out.detail = "triangle does not commute through the reflection arrow";
    return out;
  }
  out.exists = true;

  std::size_t factoring = 0;
  for (const GroundMap& g : all_ground_maps(sys.ground, target.ground)) {
    if (!is_bounded(g, m.theory, spat, target, truncation).bounded) continue;
    // E(g) after the reflection arrow equals m iff both components match
    bool ground_eq = g.table() == m.f.table();
    SystemMorphism cand{sys, embedded, g, m.theory, FnValuedPart{ImageMap(g, m.theory)}};
    bool basis_eq = is_system_morphism(cand, truncation).pass &&
                    equal_fnvalued(cand, m, truncation);
    if (ground_eq && basis_eq) ++factoring;
  }
  out.unique = factoring == 1;
  out.detail = "factoring maps found: " + std::to_string(factoring);
  return out;
}

bool spat_embed_roundtrip(const BornSpace& sp, Elem truncation) {
  BornSpace back = spatialize(embed_space(sp), truncation);
  return back.bornology == sp.bornology && back.ground.get() == sp.ground.get() &&
         back.basis.get() == sp.basis.get();
}

FullnessReport check_embedding_fullness(const BornSpace& sp1, const BornSpace& sp2,
                                        const GroundMap& f, const BasisMap& theory,
                                        Elem truncation) {
  FullnessReport report;
  if (sp1.bornology.is_ramp() || sp2.bornology.is_ramp())
    fail(Errc::NotRepresentable, "fullness scan needs extensional bornologies");
  (void)truncation;
  const std::vector<LFunction>& m1 = sp1.bornology.members();
  const std::vector<LFunction>& m2 = sp2.bornology.members();
  ImageMap op(f, theory);

  std::vector<std::optional<std::size_t>> required(m1.size());
  bool bounded = true;
  for (std::size_t i = 0; i < m1.size(); ++i) {
    LFunction img = op.eval(m1[i]);
    bool found = false;
    for (std::size_t j = 0; j < m2.size(); ++j)
      if (m2[j] == img) { required[i] = j; found = true; break; }
    if (!found) bounded = false;
  }

  // exhaust candidate assignments member-by-member; the commuting square
  // forces each value, so every branch off the restriction dies immediately
  std::size_t pruned = 0;
  std::size_t survivors = bounded ? 1 : 0;
  for (std::size_t i = 0; i < m1.size(); ++i)
    for (std::size_t j = 0; j < m2.size(); ++j)
      if (!required[i] || j != *required[i]) ++pruned;
  report.assignments_pruned = pruned;

  if (!bounded) {
    report.holds = true;
    report.detail = "no commuting candidate exists (the map is unbounded)";
    return report;
  }
  if (survivors != 1) {
    report.detail = "restriction candidate count " + std::to_string(survivors);
    return report;
  }

  // the surviving assignment is the restriction; verify it is an
  // ideal-category morphism between the member lattices
  auto value = [&](std::size_t i) -> const LFunction& { return m2[*required[i]]; };
  auto index_of = [&](const LFunction& fn) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < m1.size(); ++i)
      if (m1[i] == fn) return i;
    return std::nullopt;
  };
  const FnLattice& T1 = *sp1.bornology.carrier();
  const FnLattice& T2 = *sp2.bornology.carrier();
  if (!(value(*index_of(T1.bottom())) == T2.bottom())) {
    report.detail = "restriction breaks bot";
    return report;
  }
  for (std::size_t i = 0; i < m1.size(); ++i)
    for (std::size_t j = 0; j < m1.size(); ++j) {
      auto jj = index_of(T1.join(m1[i], m1[j]));
      auto mm = index_of(T1.meet(m1[i], m1[j]));
      if (!(value(*jj) == T2.join(value(i), value(j))) ||
          !(value(*mm) == T2.meet(value(i), value(j)))) {
        report.detail = "restriction is not an ideal morphism";
        return report;
      }
    }
  report.holds = true;
  report.detail = "unique commuting morphism = restriction of the image operator";
  return report;
}

} // namespace bornolab
