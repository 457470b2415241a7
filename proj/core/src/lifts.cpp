#include "bornolab/lifts.hpp"

#include <algorithm>

namespace bornolab {

namespace {

void check_legs(const StructuredSource& src) {
  for (const SourceLeg& leg : src.legs) {
    if (leg.f.src().get() != src.apex.get())
      fail(Errc::GroundMismatch, "leg ground map does not start at the apex");
    if (leg.phi.src().get() != src.basis.get())
      fail(Errc::BasisMismatch, "leg basis map does not start at the apex basis");
    if (leg.f.dst().get() != leg.space.ground.get() ||
        leg.phi.dst().get() != leg.space.basis.get())
      fail(Errc::GroundMismatch, "leg maps do not land in the leg space");
  }
}

/** Coordinate x of the canonical chain of a ramp ideal, as a ramp in the
    level: 0, then min(n-1, ceiling) on region coordinates, the ceiling off
    the region. */
OmegaRamp chain_coordinate(const Ideal& ideal, Point x, const LatticePtr& omega_chain) {
  Elem c = ideal.ceiling().at(x);
  bool in_region = std::binary_search(ideal.region().begin(), ideal.region().end(), x);
  if (in_region) return OmegaRamp(omega_chain, {0}, RampTail::shifted(-1), kOmega);
  return OmegaRamp(omega_chain, {0}, RampTail::constant(c));
}

} // namespace

Ideal initial_structure(const StructuredSource& src, Elem truncation) {
  check_legs(src);
  FnLatticePtr carrier = FnLattice::make(src.basis, src.apex);
  Ideal acc = Ideal::full(carrier);
  for (const SourceLeg& leg : src.legs) {
    ImageMap op(leg.f, leg.phi);
    acc = acc.intersect(preimage_ideal(op, leg.space.bornology, truncation));
  }
  return acc;
}

CoverageWitnesses coverage_witnesses(const StructuredSource& src, Elem truncation) {
  check_legs(src);
  FnLatticePtr carrier = FnLattice::make(src.basis, src.apex);
  CoverageWitnesses out;
  if (src.legs.empty()) {
    out.alphas.push_back(carrier->topfn());
    out.covered = true;
    out.detail = "empty source: the full lattice covers vacuously";
    return out;
  }

  struct LegData {
    ImageMap op;
    bool is_ramp;
    std::vector<LFunction> options; // extensional family
  };
  std::vector<LegData> legs;
  for (const SourceLeg& leg : src.legs) {
    if (!contains_top(leg.space.bornology, GenMode::CLat))
      fail(Errc::NoLegCoverage, "leg space '" + leg.space.name + "' misses coverage");
    LegData d{ImageMap(leg.f, leg.phi), leg.space.bornology.is_ramp(), {}};
    if (d.is_ramp) {
      for (Elem level = 0; level <= truncation; ++level)
        d.options.push_back(leg.space.bornology.chain_member(level));
    } else {
      d.options = leg.space.bornology.members();
    }
    legs.push_back(std::move(d));
  }

  // truncated enumeration of the choice assignments
  std::size_t combos = 1;
  for (const LegData& d : legs) {
    combos *= d.options.size();
    if (combos > 20000) fail(Errc::TooLarge, "choice enumeration over the leg families");
  }
  std::vector<std::size_t> pick(legs.size(), 0);
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rest = c;
    LFunction alpha = carrier->topfn();
    for (std::size_t j = 0; j < legs.size(); ++j) {
      const LegData& d = legs[j];
      std::size_t k = rest % d.options.size();
      rest /= d.options.size();
      alpha = carrier->meet(alpha, legs[j].op.adjoint(d.options[k]));
    }
    out.alphas.push_back(std::move(alpha));
  }
  std::sort(out.alphas.begin(), out.alphas.end());
  out.alphas.erase(std::unique(out.alphas.begin(), out.alphas.end()), out.alphas.end());

  // structural certificate: join over the full families. Extensional legs
  // are finite; ramp legs run over their cofinal chains, whose pulled-back
  // diagonal sup is computed from the ramp normal forms.
  std::vector<std::size_t> ext_idx, ramp_idx;
  for (std::size_t j = 0; j < legs.size(); ++j)
    (legs[j].is_ramp ? ramp_idx : ext_idx).push_back(j);

  std::vector<OmegaRamp> diag; // per apex point, the diagonal chain value
  if (!ramp_idx.empty()) {
    for (Point z = 0; z < src.apex->size(); ++z) {
      std::optional<OmegaRamp> nu;
      for (std::size_t j : ramp_idx) {
        const SourceLeg& leg = src.legs[j];
        const Ideal& tau = leg.space.bornology;
        Point x = leg.f.eval(z);
        OmegaRamp seq = chain_coordinate(tau, x, leg.space.basis);
        const BasisMap& adj = legs[j].op.phi_adjoint();
        OmegaRamp pulled = adj.is_table() ? seq.mapped(adj.table_rule(), adj.dst())
                                          : seq.mapped(adj.ramp_rule());
        nu = nu ? nu->meet(pulled) : pulled;
      }
      diag.push_back(*nu);
    }
  }

  std::size_t ext_combos = 1;
  for (std::size_t j : ext_idx) {
    ext_combos *= legs[j].options.size();
    if (ext_combos > 20000) fail(Errc::TooLarge, "extensional family enumeration");
  }
  LFunction total = carrier->bottom();
  for (std::size_t c = 0; c < ext_combos; ++c) {
    std::size_t rest = c;
    LFunction value = carrier->topfn();
    for (std::size_t j : ext_idx) {
      const LegData& d = legs[j];
      std::size_t k = rest % d.options.size();
      rest /= d.options.size();
      value = carrier->meet(value, legs[j].op.adjoint(d.options[k]));
    }
    if (!ramp_idx.empty()) {
      std::vector<Elem> sup(src.apex->size());
      for (Point z = 0; z < sup.size(); ++z) sup[z] = diag[z].sup_finite();
      value = carrier->meet(value, carrier->make_fn(std::move(sup)));
    }
    total = carrier->join(total, value);
  }
  out.covered = total == carrier->topfn();
  out.detail = out.covered ? "choice-map family join reaches top"
                           : "family join stops at " + carrier->repr(total);
  return out;
}

InitialityVerdict verify_initiality(const StructuredSource& src, const Ideal& tau,
                                    std::size_t probe_bound, Elem truncation) {
  check_legs(src);
  InitialityVerdict v;
  std::vector<Ideal> leg_pullbacks;
  for (const SourceLeg& leg : src.legs)
    leg_pullbacks.push_back(
        preimage_ideal(ImageMap(leg.f, leg.phi), leg.space.bornology, truncation));

  for (const BornSpace& probe : probe_spaces(src.basis, probe_bound)) {
    for (const BasisMap& psi : basis_map_catalog(probe.basis, src.basis)) {
      for (const GroundMap& g : all_ground_maps(probe.ground, src.apex)) {
        ImageMap op(g, psi);
        bool legs_bounded = true;
        for (const Ideal& inner : leg_pullbacks) {
          Ideal mid = preimage_ideal(op, inner, truncation);
          if (!probe.bornology.subset_of(mid)) { legs_bounded = false; break; }
        }
        ++v.probes_run;
        if (!legs_bounded) continue;
        Ideal into_tau = preimage_ideal(op, tau, truncation);
        if (auto w = probe.bornology.not_contained_witness(into_tau)) {
          v.holds = false;
          v.counterexample = "probe '" + probe.name + "' map " + g.name() +
                             ": composites bounded but " +
                             probe.bornology.carrier()->repr(*w) + " escapes tau";
          return v;
        }
      }
    }
  }
  return v;
}

std::vector<BasisMap> basis_map_catalog(const LatticePtr& from, const LatticePtr& to) {
  std::vector<BasisMap> out;
  auto push = [&](BasisMap m) {
    if (!is_ideal_morphism(m)) return;
    for (const BasisMap& seen : out)
      if (seen == m) return;
    out.push_back(std::move(m));
  };

  if (from.get() == to.get()) push(BasisMap::identity(from));

  if (from->is_finite() && to->is_finite()) {
    const std::size_t n = from->size();
    const std::size_t m = to->size();
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(m);
    if (total <= 4096) {
      std::vector<Elem> table(n, 0);
      while (true) {
        push(BasisMap::table(from, to, table));
        std::size_t i = 0;
        while (i < n) {
          if (++table[i] < m) break;
          table[i] = 0;
          ++i;
        }
        if (i == n) break;
      }
    } else {
      push(BasisMap::table(from, to, std::vector<Elem>(n, to->bot())));
    }
    return out;
  }

  if (from->is_finite() && !to->is_finite()) {
    // tables into a small grid of the omega chain
    std::vector<Elem> grid{0, 1, 2, 3, kOmega};
    const std::size_t n = from->size();
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(grid.size());
    if (total > 4096) { push(BasisMap::table(from, to, std::vector<Elem>(n, 0))); return out; }
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      std::vector<Elem> table(n);
      for (std::size_t i = 0; i < n; ++i) table[i] = grid[pick[i]];
      push(BasisMap::table(from, to, std::move(table)));
      std::size_t i = 0;
      while (i < n) {
        if (++pick[i] < grid.size()) break;
        pick[i] = 0;
        ++i;
      }
      if (i == n) break;
    }
    return out;
  }

  if (!from->is_finite() && to->is_finite()) {
    // ramps with short heads and constant tails
    std::vector<Elem> elems;
    for (Elem e = 0; e < to->size(); ++e) elems.push_back(e);
    for (Elem tail : elems) {
      for (Elem h0 : elems) {
        try {
          push(BasisMap::ramp(from, to, OmegaRamp(to, {h0}, RampTail::constant(tail))));
        } catch (const Error&) {}
        for (Elem h1 : elems) {
          try {
            push(BasisMap::ramp(from, to, OmegaRamp(to, {h0, h1}, RampTail::constant(tail))));
          } catch (const Error&) {}
        }
      }
    }
    return out;
  }

  // omega to omega: identity, shifts, caps, collapses
  push(BasisMap::identity(from));
  for (std::int64_t d = -2; d <= 2; ++d) {
    try {
      push(BasisMap::ramp(from, to, OmegaRamp(to, {}, RampTail::shifted(d), kOmega)));
    } catch (const Error&) {}
  }
  for (Elem cap = 0; cap <= 3; ++cap) {
    std::vector<Elem> head;
    for (Elem i = 0; i <= cap; ++i) head.push_back(i);
    push(BasisMap::ramp(from, to, OmegaRamp(to, head, RampTail::constant(cap))));
    push(BasisMap::ramp(from, to, OmegaRamp(to, {0}, RampTail::constant(cap))));
  }
  push(BasisMap::ramp(from, to, OmegaRamp(to, {0}, RampTail::constant(kOmega))));
  return out;
}

std::vector<BornSpace> probe_spaces(const LatticePtr& apex_basis, std::size_t probe_bound) {
  static const char* kPointNames[] = {"z1", "z2", "z3", "z4"};
  std::vector<BornSpace> out;
  std::vector<LatticePtr> bases;
  {
    LatticeSpec two{"p_two", {"0", "1"}, {{"0", "1"}}, {}, {}, {}};
    bases.push_back(Lattice::finite(two));
    LatticeSpec c3{"p_c3", {"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}, {}, {}, {}};
    bases.push_back(Lattice::finite(c3));
    if (apex_basis->is_finite()) bases.push_back(apex_basis);
  }
  LatticePtr omega = apex_basis->is_finite() ? Lattice::omega("p_omega") : apex_basis;

  for (std::size_t n = 0; n <= std::min<std::size_t>(probe_bound, 4); ++n) {
    std::vector<std::string> names(kPointNames, kPointNames + n);
    GroundPtr Z = GroundSet::make("probe" + std::to_string(n), names);
    for (const LatticePtr& B : bases) {
      FnLatticePtr carrier = FnLattice::make(B, Z);
      out.push_back(BornSpace{"full_" + B->name() + "_" + Z->name(), Z, B,
                              Ideal::full(carrier)});
    }
    FnLatticePtr rc = FnLattice::make(omega, Z);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Point> region;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t{1} << b)) region.push_back(static_cast<Point>(b));
      out.push_back(BornSpace{"ramp" + std::to_string(mask) + "_" + Z->name(), Z, omega,
                              Ideal::ramp(rc, region, rc->topfn())});
    }
  }
  return out;
}

RequirementReport check_requirements(const LatticePtr& L, Elem truncation) {
  RequirementReport report;
  std::string notes;

  // covering term: inside every catalog ideal whose complete ideal reaches
  // top, the canonical family joins to top
  {
    bool ok = true;
    auto point = FnLattice::over_point(L);
    for (const Ideal& I : enumerate_ideals(point, truncation)) {
      if (!contains_top(I, GenMode::CLat)) continue;
      if (I.is_ramp()) {
        if (!(I.sup() == point->topfn())) { ok = false; break; }
        // the chain climbs: sampled monotone growth toward the sup
        for (Elem lv = 0; lv < truncation; ++lv)
          if (!point->leq(I.chain_member(lv), I.chain_member(lv + 1))) { ok = false; break; }
      } else {
        LFunction join = point->bottom();
        for (const LFunction& m : I.members()) join = point->join(join, m);
        if (!(join == point->topfn())) { ok = false; break; }
      }
    }
    report.covering_term = ok;
  }

  // adjoint section: catalog join-preserving maps have adjoints sitting
  // below the identity, fixing top, and preserving top-reaching joins
  {
    bool ok = true;
    LatticePtr two = Lattice::finite(LatticeSpec{"r_two", {"0", "1"}, {{"0", "1"}}, {}, {}, {}});
    LatticePtr omega = L->is_finite() ? Lattice::omega("r_omega") : L;
    std::vector<std::pair<LatticePtr, LatticePtr>> ends = {
        {L, L}, {L, two}, {two, L}, {L, omega}, {omega, L}};
    OpSignature joins;
    joins.arb_join = joins.bot = true;
    std::size_t tested = 0;
    for (const auto& [a, b] : ends) {
      for (const BasisMap& phi : basis_map_catalog(a, b)) {
        if (!check_homomorphism(phi, joins, truncation)) continue;
        ++tested;
        BasisMap adj = right_adjoint(phi, truncation);
        std::vector<Elem> samples;
        if (b->is_finite())
          for (Elem e = 0; e < b->size(); ++e) samples.push_back(e);
        else {
          for (Elem e = 0; e <= truncation; ++e) samples.push_back(e);
          samples.push_back(kOmega);
        }
        for (Elem i : samples)
          if (!b->leq(phi.eval(adj.eval(i)), i)) { ok = false; break; }
        if (adj.eval(b->top()) != a->top()) ok = false;
        if (!adjoint_preserves_top_joins(phi, truncation)) ok = false;
        if (!ok) break;
      }
      if (!ok) break;
    }
    notes += "adjoint maps tested: " + std::to_string(tested) + "; ";
    report.adjoint_section = ok && tested > 0;
  }

  // meet term: infima of images land under every component image, and the
  // all-top family meets to top
  {
    bool ok = true;
    GroundPtr X = GroundSet::make("r_X", {"p", "q"});
    GroundPtr Y = GroundSet::make("r_Y", {"u"});
    FnLatticePtr TX = FnLattice::make(L, X);
    GroundMap f = GroundMap::make("r_f", X, Y, {0, 0});
    ImageMap op(f, BasisMap::identity(L));
    std::vector<LFunction> sample;
    if (TX->enumerable() && TX->card() <= 36) {
      for (std::size_t i = 0; i < TX->card(); ++i) sample.push_back(TX->fn_at(i));
    } else {
      for (Elem a = 0; a <= truncation; ++a)
        for (Elem b = 0; b <= truncation; ++b)
          sample.push_back(TX->make_fn({a, b}));
      sample.push_back(TX->topfn());
    }
    for (std::size_t i = 0; i < sample.size() && ok; ++i)
      for (std::size_t j = i; j < sample.size() && ok; ++j) {
        LFunction inf = TX->meet(sample[i], sample[j]);
        LFunction img = op.eval(inf);
        if (!op.dst()->leq(img, op.eval(sample[i])) ||
            !op.dst()->leq(img, op.eval(sample[j])))
          ok = false;
      }
    LFunction tops = TX->meet(TX->topfn(), TX->topfn());
    if (!(tops == TX->topfn())) ok = false;
    report.meet_term = ok;
  }

  // ideal complete distributivity at top over small function lattices
  {
    bool ok = true;
    for (std::size_t n = 1; n <= 2 && ok; ++n) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
      GroundPtr X = GroundSet::make("r_icd" + std::to_string(n), names);
      IcdVerdict v = is_icd_at_top(FnLattice::make(L, X), std::min<Elem>(truncation, 4));
      if (!v.holds) ok = false;
    }
    report.distributive_at_top = ok;
  }

  report.notes = notes;
  return report;
}

} // namespace bornolab
