#include "bornolab/ideal.hpp"

#include <algorithm>
#include <cassert>

namespace bornolab {

namespace {

constexpr std::size_t kEnumCap = 256;

void sort_unique(std::vector<LFunction>& fns) {
  std::sort(fns.begin(), fns.end());
  fns.erase(std::unique(fns.begin(), fns.end()), fns.end());
}

bool member_of(const std::vector<LFunction>& sorted, const LFunction& fn) {
  return std::binary_search(sorted.begin(), sorted.end(), fn);
}

} // namespace

Ideal Ideal::extensional(FnLatticePtr carrier, std::vector<LFunction> members) {
  if (!carrier->enumerable())
    fail(Errc::NotRepresentable, "extensional ideal over an infinite carrier");
  sort_unique(members);
  if (auto why = ideal_violation(carrier, members))
    fail(Errc::NotAnIdeal, *why);
  Ideal I;
  I.carrier_ = std::move(carrier);
  I.members_ = std::move(members);
  return I;
}

Ideal Ideal::ramp(FnLatticePtr carrier, std::vector<Point> region, LFunction ceiling) {
  if (carrier->basis()->is_finite())
    fail(Errc::NotRepresentable, "ramp ideal needs an omega-chain basis");
  std::sort(region.begin(), region.end());
  region.erase(std::unique(region.begin(), region.end()), region.end());
  std::vector<Point> normalized;
  for (Point x : region) {
    if (x >= carrier->ground()->size())
      fail(Errc::GroundMismatch, "region point outside the ground set");
    if (ceiling.at(x) == kOmega) normalized.push_back(x); // finite ceilings already bound
  }
  Ideal I;
  I.carrier_ = std::move(carrier);
  I.ramp_ = true;
  I.region_ = std::move(normalized);
  I.ceiling_.push_back(std::move(ceiling));
  return I;
}

Ideal Ideal::principal(FnLatticePtr carrier, const LFunction& c) {
  if (!carrier->basis()->is_finite()) {
    auto copy = c;
    return ramp(std::move(carrier), {}, std::move(copy));
  }
  std::vector<LFunction> members;
  const std::size_t n = carrier->card();
  for (std::size_t i = 0; i < n; ++i) {
    LFunction fn = carrier->fn_at(i);
    if (carrier->leq(fn, c)) members.push_back(std::move(fn));
  }
  Ideal I;
  I.carrier_ = std::move(carrier);
  sort_unique(members);
  I.members_ = std::move(members);
  return I;
}

Ideal Ideal::full(FnLatticePtr carrier) {
  LFunction top = carrier->topfn();
  return principal(std::move(carrier), top);
}

Ideal Ideal::bottom(FnLatticePtr carrier) {
  LFunction bot = carrier->bottom();
  if (!carrier->basis()->is_finite()) return ramp(std::move(carrier), {}, std::move(bot));
  Ideal I;
  I.carrier_ = std::move(carrier);
  I.members_.push_back(std::move(bot));
  return I;
}

const std::vector<LFunction>& Ideal::members() const {
  if (ramp_) fail(Errc::NotRepresentable, "ramp ideal members are not enumerable");
  return members_;
}

bool Ideal::contains(const LFunction& fn) const {
  if (!ramp_) return member_of(members_, fn);
  for (Point p = 0; p < carrier_->ground()->size(); ++p)
    if (!carrier_->basis()->leq(fn.at(p), ceiling().at(p))) return false;
  for (Point x : region_)
    if (fn.at(x) == kOmega) return false;
  return true;
}

LFunction Ideal::sup() const {
  if (ramp_) return ceiling();
  LFunction acc = carrier_->bottom();
  for (const LFunction& m : members_) acc = carrier_->join(acc, m);
  return acc;
}

bool Ideal::sup_attained() const { return ramp_ ? region_.empty() : true; }

Ideal Ideal::intersect(const Ideal& other) const {
  assert(carrier_->same_as(*other.carrier_));
  if (!ramp_) {
    std::vector<LFunction> common;
    for (const LFunction& m : members_)
      if (other.contains(m)) common.push_back(m);
    Ideal I;
    I.carrier_ = carrier_;
    I.members_ = std::move(common);
    return I;
  }
  std::vector<Point> region = region_;
  region.insert(region.end(), other.region_.begin(), other.region_.end());
  return ramp(carrier_, std::move(region), carrier_->meet(ceiling(), other.ceiling()));
}

Ideal Ideal::join_with(const Ideal& other) const {
  assert(carrier_->same_as(*other.carrier_));
  if (!ramp_) return principal(carrier_, carrier_->join(sup(), other.sup()));
  std::vector<Point> region;
  std::set_intersection(region_.begin(), region_.end(), other.region_.begin(),
                        other.region_.end(), std::back_inserter(region));
  return ramp(carrier_, std::move(region), carrier_->join(ceiling(), other.ceiling()));
}

std::optional<LFunction> Ideal::not_contained_witness(const Ideal& other) const {
  assert(carrier_->same_as(*other.carrier_));
  if (!ramp_) {
    for (const LFunction& m : members_)
      if (!other.contains(m)) return m;
    return std::nullopt;
  }
  const auto& c1 = ceiling();
  const auto& c2 = other.ceiling();
  const Lattice& L = *carrier_->basis();
  auto in_region = [](const std::vector<Point>& r, Point x) {
    return std::binary_search(r.begin(), r.end(), x);
  };
  for (Point x = 0; x < carrier_->ground()->size(); ++x) {
    bool r1 = in_region(region_, x);
    bool r2 = in_region(other.region_, x);
    std::optional<Elem> bad;
    if (!r1 && !L.leq(c1.at(x), c2.at(x))) bad = c1.at(x);
    else if (r1 && c2.at(x) != kOmega) bad = c2.at(x) + 1;
    else if (r2 && !r1 && c1.at(x) == kOmega) bad = kOmega;
    if (bad) {
      std::vector<Elem> v(carrier_->ground()->size(), L.bot());
      v[x] = *bad;
      return carrier_->make_fn(std::move(v));
    }
  }
  return std::nullopt;
}

bool Ideal::operator==(const Ideal& other) const {
  if (!carrier_->same_as(*other.carrier_) || ramp_ != other.ramp_) return false;
  if (ramp_) return region_ == other.region_ && ceiling() == other.ceiling();
  return members_ == other.members_;
}

LFunction Ideal::chain_member(Elem level) const {
  if (!ramp_) fail(Errc::NotRepresentable, "chain members are defined for ramp ideals");
  if (level == 0) return carrier_->bottom();
  std::vector<Elem> v(ceiling().values());
  for (Point x : region_) v[x] = std::min<Elem>(level - 1, v[x]);
  return carrier_->make_fn(std::move(v));
}

std::vector<LFunction> Ideal::sample_members(Elem truncation) const {
  if (!ramp_) return members_;
  const std::size_t n = carrier_->ground()->size();
  std::vector<std::vector<Elem>> axis(n);
  for (Point p = 0; p < n; ++p) {
    Elem c = ceiling().at(p);
    bool in_region = std::binary_search(region_.begin(), region_.end(), p);
    for (Elem v = 0; v <= truncation && v <= c; ++v) axis[p].push_back(v);
    if (c != kOmega && c > truncation) axis[p].push_back(c);
    if (c == kOmega && !in_region) axis[p].push_back(kOmega);
  }
  std::vector<LFunction> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<Elem> v(n);
    for (Point p = 0; p < n; ++p) v[p] = axis[p][pick[p]];
    out.push_back(carrier_->make_fn(std::move(v)));
    std::size_t i = 0;
    while (i < n) {
      if (++pick[i] < axis[i].size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  if (n == 0) out.push_back(carrier_->bottom());
  sort_unique(out);
  return out;
}

std::string Ideal::repr() const {
  if (!ramp_) {
    std::string s = "ideal extensional";
    for (const LFunction& m : members_) s += " " + carrier_->repr(m);
    return s;
  }
  std::string s = "ideal ramp region={";
  for (std::size_t i = 0; i < region_.size(); ++i) {
    if (i) s += ",";
    s += carrier_->ground()->point_name(region_[i]);
  }
  s += "} ceiling=" + carrier_->repr(ceiling());
  return s;
}

std::optional<std::string> ideal_violation(const FnLatticePtr& carrier,
                                           const std::vector<LFunction>& members) {
  if (members.empty()) return "empty candidate: the empty join (bot) is missing";
  std::vector<LFunction> sorted = members;
  sort_unique(sorted);
  LFunction bot = carrier->bottom();
  if (!member_of(sorted, bot)) return "bot " + carrier->repr(bot) + " is missing";
  for (const LFunction& a : sorted)
    for (const LFunction& b : sorted) {
      LFunction j = carrier->join(a, b);
      if (!member_of(sorted, j))
        return "join " + carrier->repr(a) + " v " + carrier->repr(b) + " = " +
               carrier->repr(j) + " is missing";
    }
  const std::size_t n = carrier->card();
  for (std::size_t i = 0; i < n; ++i) {
    LFunction e = carrier->fn_at(i);
    for (const LFunction& m : sorted) {
      LFunction mm = carrier->meet(e, m);
      if (!member_of(sorted, mm))
        return "meet " + carrier->repr(e) + " ^ " + carrier->repr(m) + " = " +
               carrier->repr(mm) + " is missing";
    }
  }
  return std::nullopt;
}

Ideal generate_ideal(const GeneratorSet& g, GenMode mode) {
  (void)mode; // finite generator sets attain their join in both modes
  LFunction c = g.carrier->bottom();
  for (const LFunction& x : g.gens) c = g.carrier->join(c, x);
  return Ideal::principal(g.carrier, c);
}

bool contains_top(const GeneratorSet& g, GenMode mode) {
  return contains_top(generate_ideal(g, mode), mode);
}

bool contains_top(const Ideal& ideal, GenMode mode) {
  LFunction top = ideal.carrier()->topfn();
  if (mode == GenMode::LatBot) return ideal.contains(top);
  return ideal.sup() == top; // CLat closes under the represented sup
}

std::vector<Ideal> enumerate_ideals(const FnLatticePtr& carrier, Elem truncation) {
  std::vector<Ideal> out;
  if (carrier->enumerable()) {
    const std::size_t n = carrier->card();
    if (n > kEnumCap)
      fail(Errc::TooLarge, "ideal enumeration over " + std::to_string(n) + " elements");
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(Ideal::principal(carrier, carrier->fn_at(i)));
    return out;
  }
  const std::size_t pts = carrier->ground()->size();
  std::vector<Elem> scale;
  for (Elem v = 0; v <= truncation; ++v) scale.push_back(v);
  scale.push_back(kOmega);
  std::size_t combos = 1;
  for (std::size_t p = 0; p < pts; ++p) {
    combos *= scale.size();
    if (combos > (std::size_t{1} << 16)) fail(Errc::TooLarge, "ramp catalog too large");
  }
  for (std::size_t idx = 0; idx < combos; ++idx) {
    std::size_t rest = idx;
    std::vector<Elem> ceiling(pts);
    for (std::size_t p = pts; p-- > 0;) {
      ceiling[p] = scale[rest % scale.size()];
      rest /= scale.size();
    }
    std::vector<Point> omega_locus;
    for (Point p = 0; p < pts; ++p)
      if (ceiling[p] == kOmega) omega_locus.push_back(p);
    for (std::size_t mask = 0; mask < (std::size_t{1} << omega_locus.size()); ++mask) {
      std::vector<Point> region;
      for (std::size_t b = 0; b < omega_locus.size(); ++b)
        if (mask & (std::size_t{1} << b)) region.push_back(omega_locus[b]);
      out.push_back(Ideal::ramp(carrier, region, carrier->make_fn(ceiling)));
    }
  }
  return out;
}

namespace {

enum class DownsetKind { Empty, Bounded, NaturalsOnly, Everything };

struct OmegaDownset {
  DownsetKind kind = DownsetKind::Everything;
  Elem bound = 0; // Bounded payload
};

OmegaDownset intersect(const OmegaDownset& a, const OmegaDownset& b) {
  if (a.kind == DownsetKind::Empty || b.kind == DownsetKind::Empty)
    return {DownsetKind::Empty, 0};
  if (a.kind == DownsetKind::Bounded || b.kind == DownsetKind::Bounded) {
    Elem bound = kOmega;
    if (a.kind == DownsetKind::Bounded) bound = a.bound;
    if (b.kind == DownsetKind::Bounded) bound = std::min(bound, b.bound);
    return {DownsetKind::Bounded, bound};
  }
  if (a.kind == DownsetKind::NaturalsOnly || b.kind == DownsetKind::NaturalsOnly)
    return {DownsetKind::NaturalsOnly, 0};
  return {DownsetKind::Everything, 0};
}

/** { a in omega+1 : r(a) <= m } for a monotone ramp r. */
OmegaDownset downset_below(const OmegaRamp& r, Elem m) {
  const Lattice& D = *r.dst();
  bool all_naturals = D.leq(r.sup_finite(), m);
  bool omega_in = D.leq(r.eval(kOmega), m);
  if (all_naturals) return omega_in ? OmegaDownset{DownsetKind::Everything, 0}
                                    : OmegaDownset{DownsetKind::NaturalsOnly, 0};
  std::size_t window = r.head().size() + 2;
  if (r.tail().kind == RampTail::Kind::Shift && m != kOmega)
    window = std::max<std::size_t>(
        window, static_cast<std::size_t>(
                    std::max<std::int64_t>(static_cast<std::int64_t>(m) - r.tail().shift, 0)) + 2);
  std::optional<Elem> best;
  for (std::size_t n = 0; n < window; ++n) {
    if (D.leq(r.eval(static_cast<Elem>(n)), m)) best = static_cast<Elem>(n);
    else break; // monotone: qualifying arguments form a prefix
  }
  if (!best) return {DownsetKind::Empty, 0};
  return {DownsetKind::Bounded, *best};
}

/** { a in omega+1 : r(a) < omega }; only meaningful into the omega chain. */
OmegaDownset downset_finite_values(const OmegaRamp& r) {
  if (r.eval(kOmega) != kOmega) return {DownsetKind::Everything, 0};
  if (!r.hits_omega_at_finite()) return {DownsetKind::NaturalsOnly, 0};
  std::size_t first = r.head().size(); // Const-omega tail starts here
  for (std::size_t i = 0; i < r.head().size(); ++i)
    if (r.head()[i] == kOmega) { first = i; break; }
  if (first == 0) return {DownsetKind::Empty, 0};
  return {DownsetKind::Bounded, static_cast<Elem>(first - 1)};
}

Ideal downset_to_ideal(const OmegaDownset& d, const LatticePtr& omega_chain) {
  auto carrier = FnLattice::over_point(omega_chain);
  switch (d.kind) {
    case DownsetKind::Everything: return Ideal::full(carrier);
    case DownsetKind::NaturalsOnly: return Ideal::ramp(carrier, {0}, carrier->topfn());
    case DownsetKind::Bounded: return Ideal::principal(carrier, carrier->constant(d.bound));
    case DownsetKind::Empty: break;
  }
  fail(Errc::NotAnIdeal, "preimage is empty (map does not preserve bot)");
}

std::vector<Elem> preimage_elems(const BasisMap& phi, const Ideal& J) {
  std::vector<Elem> elems;
  for (Elem a = 0; a < phi.src()->size(); ++a)
    if (J.contains(J.carrier()->constant(phi.eval(a)))) elems.push_back(a);
  return elems;
}

Ideal preimage_unchecked(const BasisMap& phi, const Ideal& J) {
  const LatticePtr& src = phi.src();
  const LatticePtr& dst = phi.dst();
  if (J.carrier()->basis().get() != dst.get())
    fail(Errc::BasisMismatch, "preimage target lives over the wrong lattice");
  if (src->is_finite()) return elem_ideal(src, preimage_elems(phi, J));
  const OmegaRamp& r = phi.ramp_rule();
  Elem bound = J.sup().at(0);
  bool strict = J.is_ramp() && !J.region().empty();
  OmegaDownset d = downset_below(r, bound);
  if (strict) d = intersect(d, downset_finite_values(r));
  return downset_to_ideal(d, src);
}

} // namespace

bool is_ideal_morphism(const BasisMap& phi, Elem truncation) {
  OpSignature sig;
  sig.bot = sig.bin_meet = sig.bin_join = true;
  if (!check_homomorphism(phi, sig, truncation)) return false;
  if (!phi.src()->is_finite()) return true; // monotone bot-preserving ramp: preimages of downsets are downsets
  // spot-verify the preimage property against the codomain ideal catalog
  auto point = FnLattice::over_point(phi.dst());
  std::vector<Ideal> catalog = enumerate_ideals(point, std::min<Elem>(truncation, 3));
  std::size_t checked = 0;
  for (const Ideal& J : catalog) {
    if (checked++ >= 12) break;
    if (!is_ideal(*phi.src(), preimage_elems(phi, J))) return false;
  }
  return true;
}

Ideal preimage_ideal(const BasisMap& phi, const Ideal& J, Elem truncation) {
  if (!is_ideal_morphism(phi, truncation))
    fail(Errc::NotIdealMorphism, "preimage along a map that is not an ideal morphism");
  return preimage_unchecked(phi, J);
}

IcdVerdict is_icd_at_top(const FnLatticePtr& carrier, Elem truncation) {
  IcdVerdict verdict;
  std::vector<Ideal> ideals = enumerate_ideals(carrier, truncation);
  LFunction top = carrier->topfn();

  // Only ideals whose sup reaches the top can join a premise-satisfying
  // family: the meet of the sups sits below each of them.
  std::vector<std::size_t> topful;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (ideals[i].sup() == top) topful.push_back(i);

  std::size_t families = 0;
  const std::size_t masks = std::size_t{1} << topful.size();
  if (topful.size() > 16) fail(Errc::TooLarge, "too many top-reaching ideals");
  for (std::size_t mask = 1; mask < masks; ++mask) {
    std::vector<const Ideal*> family;
    for (std::size_t b = 0; b < topful.size(); ++b)
      if (mask & (std::size_t{1} << b)) family.push_back(&ideals[topful[b]]);
    LFunction premise = top;
    for (const Ideal* S : family) premise = carrier->meet(premise, S->sup());
    if (!(premise == top)) continue;
    ++families;
    // choice-map sup: the dominating choice picks cofinal members of each
    // ideal, so the sup over all choice maps is the meet of the sups
    LFunction conclusion = top;
    for (const Ideal* S : family) conclusion = carrier->meet(conclusion, S->sup());
    if (!(conclusion == top)) {
      verdict.holds = false;
      for (const Ideal* S : family) verdict.counterexample_family.push_back(*S);
      verdict.analysis = "choice-map joins stop below top";
      return verdict;
    }
  }
  verdict.analysis = std::to_string(families) + " top-meeting families of " +
                     std::to_string(ideals.size()) + " catalog ideals checked";
  return verdict;
}

IcdVerdict is_icd_at_top(const LatticePtr& lattice, Elem truncation) {
  return is_icd_at_top(FnLattice::over_point(lattice), truncation);
}

bool adjoint_preserves_top_joins(const BasisMap& psi, Elem truncation) {
  BasisMap adj = right_adjoint(psi, truncation);
  const Lattice& dst = *psi.dst();
  const Lattice& src = *psi.src();
  for (const RepSubset& s : represented_subsets(dst, truncation)) {
    if (s.sup(dst) != dst.top()) continue;
    Elem lhs = adj.eval(dst.top());
    Elem rhs = src.bot();
    for (Elem b : s.listed) rhs = src.join(rhs, adj.eval(b));
    if (s.tail_from) {
      // sup of the adjoint over an unbounded tail of naturals
      rhs = src.join(rhs, adj.ramp_rule().sup_finite());
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_ideal(const Lattice& L, std::span<const Elem> members) {
  if (!L.is_finite()) fail(Errc::NotRepresentable, "element lists need a finite lattice");
  if (members.empty()) return false;
  std::vector<bool> in(L.size(), false);
  for (Elem m : members) {
    if (!L.is_valid_elem(m)) return false;
    in[m] = true;
  }
  if (!in[L.bot()]) return false;
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b : members)
      if (in[b]) {
        if (!in[L.meet(a, b)]) return false;
        if (in[a] && !in[L.join(a, b)]) return false;
      }
  return true;
}

std::vector<Elem> generate_ideal(const Lattice& L, std::span<const Elem> gens) {
  if (!L.is_finite()) fail(Errc::NotRepresentable, "element lists need a finite lattice");
  Elem c = L.join_all(gens);
  std::vector<Elem> out;
  for (Elem a = 0; a < L.size(); ++a)
    if (L.leq(a, c)) out.push_back(a);
  return out;
}

Ideal elem_ideal(const LatticePtr& L, std::span<const Elem> members) {
  auto carrier = FnLattice::over_point(L);
  std::vector<LFunction> fns;
  for (Elem m : members) fns.push_back(carrier->constant(m));
  return Ideal::extensional(carrier, std::move(fns));
}

std::vector<Elem> ideal_elems(const Ideal& ideal) {
  std::vector<Elem> out;
  for (const LFunction& m : ideal.members()) out.push_back(m.at(0));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace bornolab
