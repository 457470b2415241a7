#include "bornolab/lattice.hpp"

#include <algorithm>
#include <map>

namespace bornolab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAPoset: return "NotAPoset";
    case Errc::NoMeet: return "NoMeet";
    case Errc::NoJoin: return "NoJoin";
    case Errc::NoBotTop: return "NoBotTop";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::NotJoinPreserving: return "NotJoinPreserving";
    case Errc::NotIdealMorphism: return "NotIdealMorphism";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NoCoverage: return "NoCoverage";
    case Errc::NoLegCoverage: return "NoLegCoverage";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::GroundMismatch: return "GroundMismatch";
    case Errc::UnsupportedReduct: return "UnsupportedReduct";
    case Errc::UnsupportedComposition: return "UnsupportedComposition";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::UnresolvedReference: return "UnresolvedReference";
    case Errc::UnknownCommand: return "UnknownCommand";
  }
  return "Error";
}

std::shared_ptr<const Lattice> Lattice::finite(const LatticeSpec& spec) {
  const std::size_t n = spec.elements.size();
  if (n == 0) fail(Errc::NotAPoset, "lattice '" + spec.name + "' has no elements");

  std::map<std::string, Elem> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(spec.elements[i], static_cast<Elem>(i)).second)
      fail(Errc::DuplicateName, "element '" + spec.elements[i] + "' declared twice");
  }
  auto at = [&](const std::string& id) -> Elem {
    auto it = index.find(id);
    if (it == index.end())
      fail(Errc::UnresolvedReference, "unknown element '" + id + "' in lattice '" + spec.name + "'");
    return it->second;
  };

  std::vector<bool> leq(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = true;
  for (const auto& [a, b] : spec.covers) leq[at(a) * n + at(b)] = true;
  for (const auto& [a, b] : spec.leq) leq[at(a) * n + at(b)] = true;

  // reflexive-transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = true;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        fail(Errc::NotAPoset, "antisymmetry fails between '" + spec.elements[i] +
                                  "' and '" + spec.elements[j] + "'");

  auto lattice = std::shared_ptr<Lattice>(new Lattice());
  lattice->kind_ = Kind::Finite;
  lattice->name_ = spec.name;
  lattice->names_ = spec.elements;
  lattice->leq_ = leq;
  lattice->meet_.assign(n * n, 0);
  lattice->join_.assign(n * n, 0);

  auto bound = [&](Elem a, Elem b, bool lower) -> std::optional<Elem> {
    std::vector<Elem> cands;
    for (Elem c = 0; c < n; ++c) {
      bool ok = lower ? (leq[c * n + a] && leq[c * n + b])
                      : (leq[a * n + c] && leq[b * n + c]);
      if (ok) cands.push_back(c);
    }
    for (Elem c : cands) {
      bool extreme = true;
      for (Elem d : cands) {
        bool cmp = lower ? leq[d * n + c] : leq[c * n + d];
        if (!cmp) { extreme = false; break; }
      }
      if (extreme) return c;
    }
    return std::nullopt;
  };

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto j = bound(a, b, false);
      if (!j) fail(Errc::NoJoin, "'" + spec.elements[a] + "' and '" + spec.elements[b] +
                                     "' have no join in '" + spec.name + "'");
      auto m = bound(a, b, true);
      if (!m) fail(Errc::NoMeet, "'" + spec.elements[a] + "' and '" + spec.elements[b] +
                                     "' have no meet in '" + spec.name + "'");
      lattice->join_[a * n + b] = *j;
      lattice->meet_[a * n + b] = *m;
    }

  Elem bot = 0, top = 0;
  for (Elem a = 0; a < n; ++a) {
    bot = lattice->meet_[bot * n + a];
    top = lattice->join_[top * n + a];
  }
  lattice->bot_ = bot;
  lattice->top_ = top;

  if (spec.bot && at(*spec.bot) != bot)
    fail(Errc::NoBotTop, "declared bot '" + *spec.bot + "' is not the least element");
  if (spec.top && at(*spec.top) != top)
    fail(Errc::NoBotTop, "declared top '" + *spec.top + "' is not the greatest element");

  return lattice;
}

std::shared_ptr<const Lattice> Lattice::omega(std::string name) {
  auto lattice = std::shared_ptr<Lattice>(new Lattice());
  lattice->kind_ = Kind::OmegaChain;
  lattice->name_ = std::move(name);
  lattice->bot_ = 0;
  lattice->top_ = kOmega;
  return lattice;
}

std::size_t Lattice::size() const {
  if (kind_ != Kind::Finite) fail(Errc::TooLarge, "omega chain has no finite size");
  return names_.size();
}

bool Lattice::leq(Elem a, Elem b) const {
  if (kind_ == Kind::OmegaChain) return a <= b; // kOmega is the max uint
  return leq_[a * names_.size() + b];
}

Elem Lattice::meet(Elem a, Elem b) const {
  if (kind_ == Kind::OmegaChain) return std::min(a, b);
  return meet_[a * names_.size() + b];
}

Elem Lattice::join(Elem a, Elem b) const {
  if (kind_ == Kind::OmegaChain) return std::max(a, b);
  return join_[a * names_.size() + b];
}

Elem Lattice::bot() const { return bot_; }
Elem Lattice::top() const { return top_; }

Elem Lattice::join_all(std::span<const Elem> xs) const {
  Elem acc = bot();
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem Lattice::meet_all(std::span<const Elem> xs) const {
  Elem acc = top();
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

bool Lattice::is_valid_elem(Elem a) const {
  if (kind_ == Kind::OmegaChain) return true;
  return a < names_.size();
}

bool Lattice::covers(Elem b, Elem a) const {
  if (kind_ == Kind::OmegaChain) {
    if (b == kOmega) return false; // omega is a limit, not a cover
    return b == a + 1;
  }
  if (a == b || !leq(a, b)) return false;
  for (Elem c = 0; c < names_.size(); ++c)
    if (c != a && c != b && leq(a, c) && leq(c, b)) return false;
  return true;
}

bool Lattice::is_distributive() const {
  if (kind_ == Kind::OmegaChain) return true;
  const Elem n = static_cast<Elem>(names_.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

const std::string& Lattice::elem_name(Elem a) const { return names_.at(a); }

std::string Lattice::elem_repr(Elem a) const {
  if (kind_ == Kind::OmegaChain) {
    if (a == kOmega) return "omega";
    return std::to_string(a);
  }
  return names_.at(a);
}

std::optional<Elem> Lattice::elem_by_name(const std::string& id) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == id) return static_cast<Elem>(i);
  return std::nullopt;
}

std::optional<Elem> Lattice::parse_elem(const std::string& token) const {
  if (kind_ == Kind::OmegaChain) {
    if (token == "omega") return kOmega;
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    unsigned long long v = std::stoull(token);
    if (v >= kOmega) return std::nullopt;
    return static_cast<Elem>(v);
  }
  return elem_by_name(token);
}

bool RepSubset::contains(const Lattice& L, Elem a) const {
  (void)L;
  if (std::find(listed.begin(), listed.end(), a) != listed.end()) return true;
  return tail_from && a != kOmega && a >= *tail_from;
}

Elem RepSubset::sup(const Lattice& L) const {
  if (tail_from) return kOmega; // unbounded set of naturals
  Elem acc = L.bot();
  for (Elem x : listed) acc = L.join(acc, x);
  return acc;
}

Elem RepSubset::inf(const Lattice& L) const {
  Elem acc = L.top();
  for (Elem x : listed) acc = L.meet(acc, x);
  if (tail_from) acc = L.meet(acc, *tail_from);
  return acc;
}

std::vector<RepSubset> represented_subsets(const Lattice& L, Elem truncation) {
  std::vector<RepSubset> out;
  if (L.is_finite()) {
    const std::size_t n = L.size();
    if (n > 16) fail(Errc::TooLarge, "subset catalog over " + std::to_string(n) + " elements");
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      RepSubset s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) s.listed.push_back(static_cast<Elem>(i));
      out.push_back(std::move(s));
    }
    return out;
  }
  // omega chain: subsets of the window {0..truncation, omega}, then tails
  std::vector<Elem> window;
  for (Elem v = 0; v <= truncation; ++v) window.push_back(v);
  window.push_back(kOmega);
  const std::size_t n = window.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RepSubset s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.listed.push_back(window[i]);
    out.push_back(std::move(s));
  }
  for (Elem from = 0; from <= truncation; ++from) {
    out.push_back(RepSubset{{}, from});          // {from, from+1, ...}
    out.push_back(RepSubset{{kOmega}, from});    // same with omega adjoined
  }
  return out;
}

} // namespace bornolab
