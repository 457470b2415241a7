#pragma once

#include <bornolab/systems.hpp>
#include <bornolab/text.hpp>

#include <vector>

namespace fx {

using namespace bornolab;

inline LatticePtr build(const char* name, std::vector<std::string> elems,
                        std::vector<std::pair<std::string, std::string>> covers) {
  LatticeSpec spec;
  spec.name = name;
  spec.elements = std::move(elems);
  spec.covers = std::move(covers);
  return Lattice::finite(spec);
}

inline const LatticePtr& one() {
  static LatticePtr L = build("ONE", {"0"}, {});
  return L;
}
inline const LatticePtr& two() {
  static LatticePtr L = build("TWO", {"0", "1"}, {{"0", "1"}});
  return L;
}
inline const LatticePtr& c3() {
  static LatticePtr L = build("C3", {"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
  return L;
}
inline const LatticePtr& c4() {
  static LatticePtr L = build("C4", {"0", "a", "b", "1"},
                              {{"0", "a"}, {"a", "b"}, {"b", "1"}});
  return L;
}
inline const LatticePtr& b2() { // the 2x2 diamond
  static LatticePtr L =
      build("B2", {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  return L;
}
inline const LatticePtr& c5() {
  static LatticePtr L = build("C5", {"0", "a", "b", "c", "1"},
                              {{"0", "a"}, {"a", "b"}, {"b", "c"}, {"c", "1"}});
  return L;
}
inline const LatticePtr& b2_stem_up() { // diamond with a chain on top
  static LatticePtr L =
      build("B2T", {"0", "a", "b", "m", "1"},
            {{"0", "a"}, {"0", "b"}, {"a", "m"}, {"b", "m"}, {"m", "1"}});
  return L;
}
inline const LatticePtr& b2_stem_down() { // diamond with a chain below
  static LatticePtr L =
      build("B2S", {"0", "z", "a", "b", "1"},
            {{"0", "z"}, {"z", "a"}, {"z", "b"}, {"a", "1"}, {"b", "1"}});
  return L;
}
inline const LatticePtr& m3() {
  static LatticePtr L =
      build("M3", {"0", "a", "b", "c", "1"},
            {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
  return L;
}
inline const LatticePtr& n5() { // the pentagon
  static LatticePtr L = build(
      "N5", {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"0", "b"}, {"b", "c"}, {"a", "1"}, {"c", "1"}});
  return L;
}
inline const LatticePtr& c6() {
  static LatticePtr L = build("C6", {"0", "a", "b", "c", "d", "1"},
                              {{"0", "a"}, {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "1"}});
  return L;
}
inline const LatticePtr& c2xc3() { // the 2x3 grid
  static LatticePtr L = build(
      "G23", {"00", "01", "02", "10", "11", "12"},
      {{"00", "01"}, {"01", "02"}, {"00", "10"}, {"01", "11"}, {"02", "12"},
       {"10", "11"}, {"11", "12"}});
  return L;
}
inline const LatticePtr& omega() {
  static LatticePtr L = Lattice::omega("W");
  return L;
}

/** All lattices of size at most 5 up to isomorphism, plus two six-element
    ones; this is the generation/ICD oracle catalog. */
inline std::vector<LatticePtr> catalog() {
  return {one(), two(), c3(), c4(), b2(), c5(), b2_stem_up(), b2_stem_down(),
          m3(),  n5(),  c6(), c2xc3()};
}

inline std::vector<LatticePtr> catalog_size_le4() {
  return {one(), two(), c3(), c4(), b2()};
}

inline GroundPtr ground(const char* name, std::vector<std::string> pts) {
  return GroundSet::make(name, std::move(pts));
}

inline Elem el(const LatticePtr& L, const std::string& id) {
  auto e = L->parse_elem(id);
  REQUIRE(e);
  return *e;
}

} // namespace fx
