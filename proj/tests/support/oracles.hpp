#pragma once

#include <bornolab/ideal.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

// Independent brute-force oracles. Everything here recomputes results from
// definitions, never through the implementation path it checks.
namespace oracle {

using namespace bornolab;

/** Least-fixed-point ideal closure: repeatedly add pairwise joins and meets
    with arbitrary carrier elements until nothing changes. */
inline std::vector<Elem> lfp_closure(const Lattice& L, std::vector<Elem> gens) {
  std::set<Elem> cur(gens.begin(), gens.end());
  cur.insert(L.bot()); // the empty join
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> snapshot(cur.begin(), cur.end());
    for (Elem a : snapshot)
      for (Elem b : snapshot)
        if (cur.insert(L.join(a, b)).second) grew = true;
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b : snapshot)
        if (cur.insert(L.meet(a, b)).second) grew = true;
  }
  return {cur.begin(), cur.end()};
}

/** All ideals of a finite lattice by filtering every subset through the
    definition. */
inline std::vector<std::vector<Elem>> subset_filter_ideals(const Lattice& L) {
  std::vector<std::vector<Elem>> out;
  const std::size_t n = L.size();
  REQUIRE(n <= 16);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Elem> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) members.push_back(static_cast<Elem>(i));
    auto in = [&](Elem e) {
      return std::find(members.begin(), members.end(), e) != members.end();
    };
    bool ok = in(L.bot());
    for (Elem a : members)
      for (Elem b : members)
        ok = ok && in(L.join(a, b));
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b : members)
        ok = ok && in(L.meet(a, b));
    if (ok) out.push_back(std::move(members));
  }
  return out;
}

/** Ramp-downset membership from the definition. */
inline bool ramp_member(const Ideal& ideal, const LFunction& fn) {
  REQUIRE(ideal.is_ramp());
  const FnLattice& T = *ideal.carrier();
  for (Point p = 0; p < T.ground()->size(); ++p)
    if (!T.basis()->leq(fn.at(p), ideal.ceiling().at(p))) return false;
  for (Point p : ideal.region())
    if (fn.at(p) == kOmega) return false;
  return true;
}

/** Deterministic truncated grid over an omega-basis function lattice:
    every function with values in {0..level} plus omega. */
inline std::vector<LFunction> omega_grid(const FnLatticePtr& carrier, Elem level) {
  std::vector<Elem> scale;
  for (Elem v = 0; v <= level; ++v) scale.push_back(v);
  scale.push_back(kOmega);
  const std::size_t n = carrier->ground()->size();
  std::vector<LFunction> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<Elem> values(n);
    for (std::size_t p = 0; p < n; ++p) values[p] = scale[pick[p]];
    out.push_back(carrier->make_fn(std::move(values)));
    std::size_t i = 0;
    while (i < n) {
      if (++pick[i] < scale.size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

/** All member functions of an enumerable carrier. */
inline std::vector<LFunction> all_fns(const FnLatticePtr& carrier) {
  std::vector<LFunction> out;
  for (std::size_t i = 0; i < carrier->card(); ++i) out.push_back(carrier->fn_at(i));
  return out;
}

/** Galois law over sampled elements. */
inline bool galois_law(const BasisMap& phi, const BasisMap& adj,
                       const std::vector<Elem>& src_sample,
                       const std::vector<Elem>& dst_sample) {
  for (Elem a : src_sample)
    for (Elem b : dst_sample) {
      bool lhs = phi.dst()->leq(phi.eval(a), b);
      bool rhs = phi.src()->leq(a, adj.eval(b));
      if (lhs != rhs) return false;
    }
  return true;
}

inline std::vector<Elem> elem_sample(const LatticePtr& L, Elem level) {
  std::vector<Elem> out;
  if (L->is_finite()) {
    for (Elem a = 0; a < L->size(); ++a) out.push_back(a);
  } else {
    for (Elem a = 0; a <= level; ++a) out.push_back(a);
    out.push_back(kOmega);
  }
  return out;
}

} // namespace oracle
