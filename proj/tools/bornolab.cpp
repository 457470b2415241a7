// bornolab: checker and spatializer for bornological fixtures.
//
// Exit codes: 0 all checks pass, 1 a check failed (a witness is printed in
// the fixture grammar), 2 input error.

#include <bornolab/text.hpp>

#include <iostream>

#include "CLI11.hpp"

using namespace bornolab;

namespace {

struct Options {
  std::vector<std::string> files;
  std::string name;
  unsigned truncation = 6;
  unsigned probe_bound = 2;
  std::string map_name, phi_name, from_name, to_name;
};

int g_failures = 0;

void report(bool ok, const std::string& what, const std::string& detail = "") {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what;
  if (!detail.empty()) std::cout << ": " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

template <class M>
std::vector<std::string> selected(const M& map, const std::string& name) {
  std::vector<std::string> keys;
  if (!name.empty()) {
    if (!map.count(name)) fail(Errc::UnresolvedReference, "'" + name + "' is not declared");
    keys.push_back(name);
    return keys;
  }
  for (const auto& [k, v] : map) keys.push_back(k);
  return keys;
}

void cmd_check_lattice(Workspace& ws, const Options& opt) {
  for (const auto& name : selected(ws.lattices, opt.name)) {
    const LatticePtr& L = ws.lattices.at(name);
    std::string detail = L->is_finite() ? std::to_string(L->size()) + " elements" : "omega chain";
    detail += L->is_distributive() ? ", distributive" : ", not distributive";
    report(true, "lattice " + name, detail);
  }
}

void cmd_check_space(Workspace& ws, const Options& opt) {
  for (const auto& name : selected(ws.spaces, opt.name)) {
    const BornSpace& sp = ws.spaces.at(name);
    report(true, "space " + name, ideal_literal(sp.bornology));
  }
}

void cmd_check_system(Workspace& ws, const Options& opt) {
  for (const auto& name : selected(ws.systems, opt.name))
    report(true, "system " + name);
}

void cmd_check_bounded(Workspace& ws, const Options& opt) {
  if (!ws.maps.count(opt.map_name)) fail(Errc::UnresolvedReference, "--map");
  if (!ws.basismaps.count(opt.phi_name)) fail(Errc::UnresolvedReference, "--phi");
  if (!ws.spaces.count(opt.from_name)) fail(Errc::UnresolvedReference, "--from");
  if (!ws.spaces.count(opt.to_name)) fail(Errc::UnresolvedReference, "--to");
  BoundedVerdict v = is_bounded(ws.maps.at(opt.map_name), ws.basismaps.at(opt.phi_name),
                                ws.spaces.at(opt.from_name), ws.spaces.at(opt.to_name),
                                opt.truncation);
  std::string detail = v.bounded ? "" : "witness " + fn_literal(*v.witness) + "; " + v.detail;
  report(v.bounded, "bounded " + opt.map_name + " / " + opt.phi_name, detail);
}

void cmd_initial_lift(Workspace& ws, const Options& opt) {
  for (const auto& name : selected(ws.sources, opt.name)) {
    const StructuredSource& src = ws.sources.at(name);
    Ideal tau = initial_structure(src, opt.truncation);
    std::cout << "initial structure of " << name << ": " << ideal_literal(tau) << "\n";
    CoverageWitnesses cw = coverage_witnesses(src, opt.truncation);
    std::size_t shown = 0;
    for (const LFunction& a : cw.alphas) {
      if (shown++ >= 4) break;
      std::cout << "  witness " << fn_literal(a) << "\n";
    }
    report(cw.covered, "coverage of " + name, cw.detail);
    InitialityVerdict iv = verify_initiality(src, tau, opt.probe_bound, opt.truncation);
    report(iv.holds, "initiality of " + name,
           iv.holds ? std::to_string(iv.probes_run) + " probes" : iv.counterexample);
  }
}

void cmd_check_reqs(Workspace& ws, const Options& opt) {
  for (const auto& name : selected(ws.lattices, opt.name)) {
    RequirementReport r = check_requirements(ws.lattices.at(name), opt.truncation);
    report(r.covering_term, name + " covering term");
    report(r.adjoint_section, name + " adjoint section", r.notes);
    report(r.meet_term, name + " meet term");
    report(r.distributive_at_top, name + " ideal complete distributivity at top");
  }
}

void cmd_icd(Workspace& ws, const Options& opt) {
  for (const auto& name : selected(ws.lattices, opt.name)) {
    IcdVerdict v = is_icd_at_top(ws.lattices.at(name), opt.truncation);
    report(v.holds, "icd-at-top " + name, v.holds ? "holds; " + v.analysis : v.analysis);
  }
}

void cmd_spatialize(Workspace& ws, const Options& opt) {
  for (const auto& name : selected(ws.systems, opt.name)) {
    BornSpace sp = spatialize(ws.systems.at(name), opt.truncation);
    std::cout << "space " << sp.name << "\nground " << sp.ground->name() << "\nbasis "
              << sp.basis->name() << "\n"
              << ideal_literal(sp.bornology) << "\n";
  }
}

void cmd_embed(Workspace& ws, const Options& opt) {
  for (const auto& name : selected(ws.spaces, opt.name)) {
    BornSystem sys = embed_space(ws.spaces.at(name));
    std::cout << "system " << sys.name << "\nground " << sys.ground->name() << "\nbasis "
              << sys.basis->name() << "\n# basis object = the bornology itself\n# "
              << ideal_literal(*sys.bobj.ideal) << "\n";
  }
}

void cmd_check_reflection(Workspace& ws, const Options& opt) {
  for (const auto& name : selected(ws.systems, opt.name)) {
    const BornSystem& sys = ws.systems.at(name);
    SystemMorphism r = reflection_arrow(sys, opt.truncation);
    MorphismVerdict mv = is_system_morphism(r, opt.truncation);
    report(mv.pass, "reflection arrow of " + name, mv.pass ? "" : mv.witness);
    if (!mv.pass) continue;
    BornSpace spat = spatialize(sys, opt.truncation);
    UniversalVerdict uv = verify_universal_property(sys, spat, r, opt.truncation);
    report(uv.exists && uv.unique, "universal property of " + name, uv.detail);
  }
}

void cmd_loc(Workspace& ws, const Options& opt) {
  for (const auto& name : selected(ws.systems, opt.name)) {
    const BObject& b = loc(ws.systems.at(name));
    if (b.is_ideal_obj())
      std::cout << "loc " << name << " = " << ideal_literal(*b.ideal) << "\n";
    else
      std::cout << "loc " << name << " = lattice " << b.lattice->name() << "\n";
  }
}

void cmd_laws(Workspace& ws, const Options& opt) {
  const Elem T = opt.truncation;

  // lattice axioms against the bound definitions
  for (const auto& [name, L] : ws.lattices) {
    bool ok = true;
    if (L->is_finite()) {
      for (Elem a = 0; a < L->size() && ok; ++a)
        for (Elem b = 0; b < L->size() && ok; ++b) {
          ok = L->leq(L->meet(a, b), a) && L->leq(a, L->join(a, b));
          ok = ok && L->leq(L->bot(), a) && L->leq(a, L->top());
        }
    }
    report(ok, "lattice axioms: " + name);
  }

  // Galois adjunction for every join-preserving declared basis map
  OpSignature joins;
  joins.arb_join = joins.bot = true;
  for (const auto& [name, phi] : ws.basismaps) {
    if (!check_homomorphism(phi, joins, T)) continue;
    BasisMap adj = right_adjoint(phi, T);
    bool ok = true;
    for (Elem a : [&] {
           std::vector<Elem> s;
           if (phi.src()->is_finite())
             for (Elem e = 0; e < phi.src()->size(); ++e) s.push_back(e);
           else {
             for (Elem e = 0; e <= T; ++e) s.push_back(e);
             s.push_back(kOmega);
           }
           return s;
         }())
      for (Elem b : [&] {
             std::vector<Elem> s;
             if (phi.dst()->is_finite())
               for (Elem e = 0; e < phi.dst()->size(); ++e) s.push_back(e);
             else {
               for (Elem e = 0; e <= T; ++e) s.push_back(e);
               s.push_back(kOmega);
             }
             return s;
           }())
        ok = ok && (phi.dst()->leq(phi.eval(a), b) == phi.src()->leq(a, adj.eval(b)));
    report(ok, "galois adjunction: " + name);
  }

  // functor laws and the meet-interchange identity over declared maps
  for (const auto& [gname, g] : ws.maps)
    for (const auto& [fname, f] : ws.maps) {
      if (f.dst().get() != g.src().get()) continue;
      for (const auto& [lname, L] : ws.lattices) {
        if (!L->is_finite() || L->size() > 5) continue;
        FnLatticePtr TX = FnLattice::make(L, f.src());
        if (TX->card() > 64) continue;
        ImageMap op_f(f, BasisMap::identity(L));
        ImageMap op_g(g, BasisMap::identity(L));
        ImageMap op_gf(compose(g, f), BasisMap::identity(L));
        bool ok = true;
        for (std::size_t i = 0; i < TX->card() && ok; ++i) {
          LFunction alpha = TX->fn_at(i);
          ok = op_gf.eval(alpha) == op_g.eval(op_f.eval(alpha));
          for (std::size_t j = 0; j < TX->card() && ok; ++j) {
            LFunction beta = TX->fn_at(j);
            LFunction lhs = op_f.eval(TX->meet(alpha, beta));
            LFunction rhs = op_f.dst()->meet(
                op_f.dst()->meet(op_f.eval(alpha), op_f.eval(TX->meet(alpha, beta))),
                op_f.eval(beta));
            ok = lhs == rhs;
          }
        }
        report(ok, "functor + meet-interchange: " + gname + " . " + fname + " over " + lname);
      }
    }

  // spatialization round trip for every declared space
  for (const auto& [name, sp] : ws.spaces)
    report(spat_embed_roundtrip(sp, T), "spat of embed is the identity: " + name);

  // reflection suite for every declared system
  for (const auto& [name, sys] : ws.systems) {
    SystemMorphism r = reflection_arrow(sys, T);
    bool ok = is_system_morphism(r, T).pass;
    if (ok) {
      UniversalVerdict uv = verify_universal_property(sys, spatialize(sys, T), r, T);
      ok = uv.exists && uv.unique;
    }
    report(ok, "reflection: " + name);
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"bornolab: bornological spaces, systems and their reflection"};
  app.require_subcommand(1);

  Options opt;
  std::string command;
  std::vector<std::pair<std::string, void (*)(Workspace&, const Options&)>> commands = {
      {"check-lattice", cmd_check_lattice},
      {"check-space", cmd_check_space},
      {"check-system", cmd_check_system},
      {"check-bounded", cmd_check_bounded},
      {"initial-lift", cmd_initial_lift},
      {"check-reqs", cmd_check_reqs},
      {"icd", cmd_icd},
      {"spatialize", cmd_spatialize},
      {"embed", cmd_embed},
      {"check-reflection", cmd_check_reflection},
      {"loc", cmd_loc},
      {"laws", cmd_laws},
  };

  for (auto& [name, handler] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("files", opt.files, "fixture files")->required();
    sub->add_option("--name", opt.name, "restrict to one named entity");
    sub->add_option("--truncation-level", opt.truncation, "omega truncation level")
        ->default_val(6);
    sub->add_option("--probe-bound", opt.probe_bound, "probe ground size bound")
        ->default_val(2);
    if (name == std::string("check-bounded")) {
      sub->add_option("--map", opt.map_name)->required();
      sub->add_option("--phi", opt.phi_name)->required();
      sub->add_option("--from", opt.from_name)->required();
      sub->add_option("--to", opt.to_name)->required();
    }
    sub->callback([&command, name = name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::cout << "bornolab";
  for (int i = 1; i < argc; ++i) std::cout << " " << argv[i];
  std::cout << "\n";

  try {
    Workspace ws = parse_files(opt.files);
    for (auto& [name, handler] : commands)
      if (name == command) handler(ws, opt);
  } catch (const Error& e) {
    std::cout << "[FAIL] " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::DuplicateName:
      case Errc::UnresolvedReference:
      case Errc::UnknownCommand:
        return 2;
      default:
        return 1;
    }
  }
  return g_failures == 0 ? 0 : 1;
}
