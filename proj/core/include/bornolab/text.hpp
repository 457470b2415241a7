#ifndef BORNOLAB_TEXT_HPP
#define BORNOLAB_TEXT_HPP

#include <map>

#include "bornolab/systems.hpp"

namespace bornolab {

/** A named registry of everything parsed from one or more fixture files.
    Names are unique per kind; references resolve against declarations made
    earlier in parse order. */
struct Workspace {
  std::map<std::string, LatticePtr> lattices;
  std::map<std::string, GroundPtr> grounds;
  std::map<std::string, LFunction> fns;
  std::map<std::string, GroundMap> maps;
  std::map<std::string, BasisMap> basismaps;
  std::map<std::string, BornSpace> spaces;
  std::map<std::string, BornSystem> systems;
  std::map<std::string, StructuredSource> sources;

  /** "kind name" pairs in declaration order, driving serialization. */
  std::vector<std::pair<std::string, std::string>> order;
};

/** Parses fixture text; the first error carries file:line:col. Semantic
    validation (lattice axioms, coverage, morphism checks) runs during the
    parse, so a returned workspace is fully validated. */
Workspace parse_text(const std::string& text, const std::string& filename = "<input>");
Workspace parse_files(const std::vector<std::string>& paths);
/** Parses additional text into an existing workspace. */
void parse_into(Workspace& ws, const std::string& text, const std::string& filename);

/** Canonical re-serialization; parse . serialize is the identity on
    serialized output. */
std::string serialize(const Workspace& ws);

std::string fn_literal(const LFunction& fn);
std::string ideal_literal(const Ideal& ideal);
std::string basismap_literal(const BasisMap& m);

} // namespace bornolab

#endif
