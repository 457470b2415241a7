#ifndef BORNOLAB_LIFTS_HPP
#define BORNOLAB_LIFTS_HPP

#include "bornolab/spaces.hpp"

namespace bornolab {

/** One leg of a structured source: ground and basis maps out of the apex
    into a bornological space. phi_name records the declared name for
    serialization; empty for programmatically built legs. */
struct SourceLeg {
  GroundMap f;
  BasisMap phi;
  BornSpace space;
  std::string phi_name;
};

struct StructuredSource {
  std::string name;
  GroundPtr apex;
  LatticePtr basis;
  std::vector<SourceLeg> legs;
};

/** The largest bornology on the apex making every leg bounded: the
    intersection of the leg preimages. An empty source yields the full
    function lattice. */
Ideal initial_structure(const StructuredSource& src, Elem truncation = 6);

struct CoverageWitnesses {
  std::vector<LFunction> alphas; // truncated enumeration of the choice-map infima
  bool covered = false;          // the full family join reaches top (structural)
  std::string detail;
};

/** Choice-map witnesses for coverage of the initial structure: per leg the
    canonical covering family (all members, or the cofinal chain of a ramp),
    one infimum of pulled-back picks per choice assignment. Throws
    NoLegCoverage when a leg bornology misses coverage. */
CoverageWitnesses coverage_witnesses(const StructuredSource& src, Elem truncation = 6);

struct InitialityVerdict {
  bool holds = true;
  std::size_t probes_run = 0;
  std::string counterexample;
};

/** Probes initiality of tau over the source: for every catalog probe space,
    catalog basis map and ground map into the apex, boundedness of all leg
    composites must imply boundedness into (apex, tau). */
InitialityVerdict verify_initiality(const StructuredSource& src, const Ideal& tau,
                                    std::size_t probe_bound = 2, Elem truncation = 6);

struct RequirementReport {
  bool covering_term = false;      // an ideal term reaching top inside covering ideals
  bool adjoint_section = false;    // right adjoints exist and sit below the identity
  bool meet_term = false;          // the meet term lands in generated ideals, fixes top
  bool distributive_at_top = false; // function lattices ideally completely distributive at top
  std::string notes;
  bool all() const {
    return covering_term && adjoint_section && meet_term && distributive_at_top;
  }
};

/** Instance checks of the four lifting requirements over the given basis
    lattice, at desk scale. */
RequirementReport check_requirements(const LatticePtr& L, Elem truncation = 6);

/** Deterministic catalog of ideal-morphism basis maps between two lattices
    (identity, collapses, embeddings, shifts and caps at small scale). */
std::vector<BasisMap> basis_map_catalog(const LatticePtr& from, const LatticePtr& to);

/** Deterministic catalog of probe spaces over grounds of size up to
    probe_bound: full bornologies over small finite bases and the apex
    basis, plus ramp spaces over the omega chain. */
std::vector<BornSpace> probe_spaces(const LatticePtr& apex_basis, std::size_t probe_bound);

} // namespace bornolab

#endif
