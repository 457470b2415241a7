#include "bornolab/text.hpp"

#include <fstream>
#include <sstream>

namespace bornolab {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t col = 0;
};

class Tokenizer {
public:
  Tokenizer(const std::string& text, std::string filename)
      : text_(text), file_(std::move(filename)) {
    tokenize();
  }

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const {
    if (done()) parse_fail("unexpected end of input");
    return tokens_[pos_];
  }
  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }
  bool accept(const std::string& word) {
    if (!done() && tokens_[pos_].text == word) {
      ++pos_;
      return true;
    }
    return false;
  }
  Token expect(const std::string& word) {
    if (done() || tokens_[pos_].text != word)
      parse_fail("expected '" + word + "'" +
                 (done() ? "" : ", found '" + tokens_[pos_].text + "'"));
    return next();
  }

  [[noreturn]] void parse_fail(const std::string& message) const {
    std::size_t line = 0, col = 0;
    if (pos_ < tokens_.size()) {
      line = tokens_[pos_].line;
      col = tokens_[pos_].col;
    } else if (!tokens_.empty()) {
      line = tokens_.back().line;
      col = tokens_.back().col + tokens_.back().text.size();
    }
    fail(Errc::ParseError,
         file_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + message);
  }

private:
  void tokenize() {
    std::size_t line = 1, col = 1;
    std::string cur;
    std::size_t cur_line = 0, cur_col = 0;
    auto flush = [&] {
      if (!cur.empty()) {
        tokens_.push_back({cur, cur_line, cur_col});
        cur.clear();
      }
    };
    for (std::size_t i = 0; i < text_.size(); ++i) {
      char c = text_[i];
      if (c == '#') { // comment to end of line
        flush();
        while (i < text_.size() && text_[i] != '\n') ++i;
        ++line;
        col = 1;
        continue;
      }
      if (c == '\n') {
        flush();
        ++line;
        col = 1;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        flush();
        ++col;
        continue;
      }
      if (c == '-' && i + 1 < text_.size() && text_[i + 1] == '>') {
        flush();
        tokens_.push_back({"->", line, col});
        ++i;
        col += 2;
        continue;
      }
      if (c == '{' || c == '}' || c == ':' || c == '=' || c == ',' || c == '[' ||
          c == ']' || (c == '-' && cur.empty())) {
        if (c == '-') { // a signed number follows
          cur_line = line;
          cur_col = col;
          cur += c;
          ++col;
          continue;
        }
        flush();
        tokens_.push_back({std::string(1, c), line, col});
        ++col;
        continue;
      }
      if (cur.empty()) {
        cur_line = line;
        cur_col = col;
      }
      cur += c;
      ++col;
    }
    flush();
  }

  const std::string& text_;
  std::string file_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

class Parser {
public:
  Parser(Workspace& ws, const std::string& text, const std::string& filename)
      : ws_(ws), tk_(text, filename) {}

  void run() {
    while (!tk_.done()) {
      Token head = tk_.next();
      if (head.text == "lattice") parse_lattice();
      else if (head.text == "ground") parse_ground();
      else if (head.text == "fn") parse_fn();
      else if (head.text == "map") parse_map();
      else if (head.text == "basismap") parse_basismap();
      else if (head.text == "space") parse_space();
      else if (head.text == "system") parse_system();
      else if (head.text == "source") parse_source();
      else tk_.parse_fail("unknown declaration '" + head.text + "'");
    }
  }

private:
  template <class M>
  void declare(M& map, const std::string& kind, const std::string& name,
               typename M::mapped_type value) {
    if (!map.emplace(name, std::move(value)).second)
      fail(Errc::DuplicateName, kind + " '" + name + "' declared twice");
    ws_.order.emplace_back(kind, name);
  }

  LatticePtr lattice_ref(const std::string& name) {
    auto it = ws_.lattices.find(name);
    if (it == ws_.lattices.end())
      fail(Errc::UnresolvedReference, "lattice '" + name + "' is not declared");
    return it->second;
  }
  GroundPtr ground_ref(const std::string& name) {
    auto it = ws_.grounds.find(name);
    if (it == ws_.grounds.end())
      fail(Errc::UnresolvedReference, "ground set '" + name + "' is not declared");
    return it->second;
  }

  Elem elem_ref(const Lattice& L, const Token& t) {
    auto e = L.parse_elem(t.text);
    if (!e) tk_.parse_fail("'" + t.text + "' is not an element of " + L.name());
    return *e;
  }

  /** { x=<elem> ... } over a known carrier. */
  LFunction fn_body(const FnLatticePtr& carrier) {
    tk_.expect("{");
    std::vector<Elem> values(carrier->ground()->size(), carrier->basis()->bot());
    std::vector<bool> seen(values.size(), false);
    while (!tk_.accept("}")) {
      Token pt = tk_.next();
      auto p = carrier->ground()->point_by_name(pt.text);
      if (!p) tk_.parse_fail("'" + pt.text + "' is not a point of " +
                             carrier->ground()->name());
      tk_.expect("=");
      values[*p] = elem_ref(*carrier->basis(), tk_.next());
      seen[*p] = true;
    }
    for (Point p = 0; p < seen.size(); ++p)
      if (!seen[p])
        tk_.parse_fail("function misses point '" + carrier->ground()->point_name(p) + "'");
    return carrier->make_fn(std::move(values));
  }

  /** A function literal or the name of a declared fn. */
  LFunction fn_value(const FnLatticePtr& carrier) {
    if (tk_.peek().text == "{") return fn_body(carrier);
    Token name = tk_.next();
    auto it = ws_.fns.find(name.text);
    if (it == ws_.fns.end())
      fail(Errc::UnresolvedReference, "fn '" + name.text + "' is not declared");
    if (!it->second.carrier()->same_as(*carrier))
      tk_.parse_fail("fn '" + name.text + "' lives over a different carrier");
    return it->second;
  }

  void parse_lattice() {
    Token name = tk_.next();
    Token kind = tk_.next();
    if (kind.text == "omega") {
      declare(ws_.lattices, "lattice", name.text, Lattice::omega(name.text));
      return;
    }
    if (kind.text != "finite") tk_.parse_fail("expected 'finite' or 'omega'");
    LatticeSpec spec;
    spec.name = name.text;
    tk_.expect("elements");
    while (!tk_.done() && !is_lattice_field(tk_.peek().text) &&
           !is_top_level(tk_.peek().text))
      spec.elements.push_back(tk_.next().text);
    while (!tk_.done()) {
      if (tk_.accept("cover")) {
        std::string a = tk_.next().text;
        std::string b = tk_.next().text;
        spec.covers.emplace_back(a, b);
      } else if (tk_.accept("leq")) {
        std::string a = tk_.next().text;
        std::string b = tk_.next().text;
        spec.leq.emplace_back(a, b);
      } else if (tk_.accept("bot")) {
        spec.bot = tk_.next().text;
      } else if (tk_.accept("top")) {
        spec.top = tk_.next().text;
      } else {
        break;
      }
    }
    declare(ws_.lattices, "lattice", name.text, Lattice::finite(spec));
  }

  static bool is_lattice_field(const std::string& w) {
    return w == "cover" || w == "leq" || w == "bot" || w == "top" || w == "elements";
  }
  static bool is_top_level(const std::string& w) {
    return w == "lattice" || w == "ground" || w == "fn" || w == "map" ||
           w == "basismap" || w == "space" || w == "system" || w == "source";
  }

  void parse_ground() {
    Token name = tk_.next();
    std::vector<std::string> points;
    while (!tk_.done() && !is_top_level(tk_.peek().text)) points.push_back(tk_.next().text);
    declare(ws_.grounds, "ground", name.text, GroundSet::make(name.text, points));
  }

  void parse_fn() {
    Token name = tk_.next();
    tk_.expect("ground");
    GroundPtr X = ground_ref(tk_.next().text);
    tk_.expect("basis");
    LatticePtr L = lattice_ref(tk_.next().text);
    LFunction fn = fn_body(FnLattice::make(L, X));
    declare(ws_.fns, "fn", name.text, std::move(fn));
  }

  void parse_map() {
    Token name = tk_.next();
    tk_.expect(":");
    GroundPtr src = ground_ref(tk_.next().text);
    tk_.expect("->");
    GroundPtr dst = ground_ref(tk_.next().text);
    tk_.expect("{");
    std::vector<Point> table(src->size());
    std::vector<bool> seen(src->size(), false);
    while (!tk_.accept("}")) {
      Token a = tk_.next();
      auto p = src->point_by_name(a.text);
      if (!p) tk_.parse_fail("'" + a.text + "' is not a point of " + src->name());
      tk_.expect("->");
      Token b = tk_.next();
      auto q = dst->point_by_name(b.text);
      if (!q) tk_.parse_fail("'" + b.text + "' is not a point of " + dst->name());
      table[*p] = *q;
      seen[*p] = true;
    }
    for (Point p = 0; p < seen.size(); ++p)
      if (!seen[p]) tk_.parse_fail("map misses point '" + src->point_name(p) + "'");
    declare(ws_.maps, "map", name.text, GroundMap::make(name.text, src, dst, table));
  }

  std::int64_t int_token() {
    Token t = tk_.next();
    try {
      std::size_t used = 0;
      std::int64_t v = std::stoll(t.text, &used);
      if (used != t.text.size()) throw std::invalid_argument(t.text);
      return v;
    } catch (const std::exception&) {
      tk_.parse_fail("expected an integer, found '" + t.text + "'");
    }
  }

  void parse_basismap() {
    Token name = tk_.next();
    tk_.expect(":");
    LatticePtr src = lattice_ref(tk_.next().text);
    tk_.expect("->");
    LatticePtr dst = lattice_ref(tk_.next().text);
    Token kind = tk_.next();
    if (kind.text == "table") {
      if (!src->is_finite()) tk_.parse_fail("table rules need a finite source lattice");
      tk_.expect("{");
      std::vector<Elem> table(src->size());
      std::vector<bool> seen(src->size(), false);
      while (!tk_.accept("}")) {
        Elem a = elem_ref(*src, tk_.next());
        tk_.expect("->");
        table[a] = elem_ref(*dst, tk_.next());
        seen[a] = true;
      }
      for (Elem a = 0; a < seen.size(); ++a)
        if (!seen[a]) tk_.parse_fail("table misses element '" + src->elem_name(a) + "'");
      declare(ws_.basismaps, "basismap", name.text, BasisMap::table(src, dst, table));
      return;
    }
    if (kind.text != "ramp") tk_.parse_fail("expected 'table' or 'ramp'");
    if (src->is_finite()) tk_.parse_fail("ramp rules need the omega chain source");
    tk_.expect("head");
    tk_.expect("[");
    std::vector<Elem> head;
    while (!tk_.accept("]")) {
      if (!head.empty()) tk_.expect(",");
      head.push_back(elem_ref(*dst, tk_.next()));
    }
    tk_.expect("tail");
    Token tkind = tk_.next();
    RampTail tail;
    if (tkind.text == "const") tail = RampTail::constant(elem_ref(*dst, tk_.next()));
    else if (tkind.text == "shift") tail = RampTail::shifted(int_token());
    else tk_.parse_fail("expected 'const' or 'shift'");
    std::optional<Elem> omega_v;
    if (tk_.accept("omega")) {
      tk_.expect("=");
      omega_v = elem_ref(*dst, tk_.next());
    }
    try {
      OmegaRamp r = omega_v ? OmegaRamp(dst, head, tail, *omega_v)
                            : OmegaRamp(dst, head, tail);
      declare(ws_.basismaps, "basismap", name.text, BasisMap::ramp(src, dst, std::move(r)));
    } catch (const Error& e) {
      if (e.code() == Errc::NotMonotone) tk_.parse_fail(e.what());
      throw;
    }
  }

  Ideal parse_ideal(const FnLatticePtr& carrier) {
    tk_.expect("ideal");
    Token kind = tk_.next();
    if (kind.text == "extensional") {
      std::vector<LFunction> members;
      while (!tk_.done() && !is_top_level(tk_.peek().text))
        members.push_back(fn_value(carrier));
      return Ideal::extensional(carrier, std::move(members));
    }
    if (kind.text != "ramp") tk_.parse_fail("expected 'extensional' or 'ramp'");
    tk_.expect("region");
    tk_.expect("=");
    tk_.expect("{");
    std::vector<Point> region;
    while (!tk_.accept("}")) {
      if (!region.empty()) tk_.expect(",");
      Token pt = tk_.next();
      auto p = carrier->ground()->point_by_name(pt.text);
      if (!p) tk_.parse_fail("'" + pt.text + "' is not a ground point");
      region.push_back(*p);
    }
    tk_.expect("ceiling");
    tk_.expect("=");
    LFunction ceiling = fn_value(carrier);
    return Ideal::ramp(carrier, std::move(region), std::move(ceiling));
  }

  void parse_space() {
    Token name = tk_.next();
    tk_.expect("ground");
    GroundPtr X = ground_ref(tk_.next().text);
    tk_.expect("basis");
    LatticePtr L = lattice_ref(tk_.next().text);
    FnLatticePtr carrier = FnLattice::make(L, X);
    Ideal tau = parse_ideal(carrier);
    declare(ws_.spaces, "space", name.text,
            validate_space(name.text, X, L, std::move(tau)));
  }

  void parse_system() {
    Token name = tk_.next();
    tk_.expect("ground");
    GroundPtr X = ground_ref(tk_.next().text);
    tk_.expect("basis");
    LatticePtr L = lattice_ref(tk_.next().text);
    tk_.expect("bobj");
    LatticePtr B = lattice_ref(tk_.next().text);
    FnLatticePtr tx = FnLattice::make(L, X);
    tk_.expect("kappa");
    if (tk_.accept("ramp")) {
      if (B->is_finite()) tk_.parse_fail("'kappa ramp' needs an omega basis object");
      if (L->is_finite()) tk_.parse_fail("'kappa ramp' needs an omega theory basis");
      tk_.expect("{");
      std::vector<std::optional<OmegaRamp>> coords(X->size());
      while (!tk_.accept("}")) {
        Token pt = tk_.next();
        auto p = X->point_by_name(pt.text);
        if (!p) tk_.parse_fail("'" + pt.text + "' is not a point of " + X->name());
        tk_.expect(":");
        tk_.expect("slope");
        tk_.expect("=");
        std::int64_t slope = int_token();
        if (slope != 0 && slope != 1) tk_.parse_fail("slope must be 0 or 1");
        tk_.expect("offset");
        tk_.expect("=");
        std::int64_t offset = int_token();
        if (offset < 0) tk_.parse_fail("offset must be a natural number");
        tk_.expect("cap");
        tk_.expect("=");
        Elem cap = elem_ref(*L, tk_.next());
        coords[*p] = ramp_coordinate(L, slope, offset, cap);
      }
      for (Point p = 0; p < coords.size(); ++p)
        if (!coords[p]) tk_.parse_fail("kappa misses point '" + X->point_name(p) + "'");
      std::vector<OmegaRamp> cs;
      for (auto& c : coords) cs.push_back(std::move(*c));
      declare(ws_.systems, "system", name.text,
              validate_system(name.text, X, L, BObject::lat(B),
                              StructureMap::chain(tx, std::move(cs))));
      return;
    }
    if (!B->is_finite()) tk_.parse_fail("table kappas need a finite basis object");
    tk_.expect("{");
    std::vector<std::optional<LFunction>> values(B->size());
    while (!tk_.accept("}")) {
      Elem b = elem_ref(*B, tk_.next());
      tk_.expect("->");
      values[b] = fn_value(tx);
    }
    for (Elem b = 0; b < values.size(); ++b)
      if (!values[b]) tk_.parse_fail("kappa misses element '" + B->elem_name(b) + "'");
    std::vector<LFunction> vs;
    for (auto& v : values) vs.push_back(std::move(*v));
    declare(ws_.systems, "system", name.text,
            validate_system(name.text, X, L, BObject::lat(B),
                            StructureMap::table(tx, std::move(vs))));
  }

  /** min(slope*n + offset, cap) as a level ramp into the omega chain. */
  static OmegaRamp ramp_coordinate(const LatticePtr& L, std::int64_t slope,
                                   std::int64_t offset, Elem cap) {
    if (slope == 0) return OmegaRamp::constant(L, std::min<Elem>(static_cast<Elem>(offset), cap));
    if (cap == kOmega) return OmegaRamp(L, {}, RampTail::shifted(offset), kOmega);
    std::vector<Elem> head;
    for (std::int64_t n = 0; n + offset < static_cast<std::int64_t>(cap); ++n)
      head.push_back(static_cast<Elem>(n + offset));
    return OmegaRamp(L, std::move(head), RampTail::constant(cap));
  }

  void parse_source() {
    Token name = tk_.next();
    tk_.expect("apex");
    GroundPtr X = ground_ref(tk_.next().text);
    tk_.expect("basis");
    LatticePtr L = lattice_ref(tk_.next().text);
    StructuredSource src{name.text, X, L, {}};
    while (!tk_.done() && tk_.peek().text == "leg") {
      tk_.expect("leg");
      tk_.expect("map");
      tk_.expect("=");
      Token mapname = tk_.next();
      auto mit = ws_.maps.find(mapname.text);
      if (mit == ws_.maps.end())
        fail(Errc::UnresolvedReference, "map '" + mapname.text + "' is not declared");
      tk_.expect("phi");
      tk_.expect("=");
      Token phiname = tk_.next();
      auto pit = ws_.basismaps.find(phiname.text);
      if (pit == ws_.basismaps.end())
        fail(Errc::UnresolvedReference, "basismap '" + phiname.text + "' is not declared");
      tk_.expect("space");
      tk_.expect("=");
      Token spname = tk_.next();
      auto sit = ws_.spaces.find(spname.text);
      if (sit == ws_.spaces.end())
        fail(Errc::UnresolvedReference, "space '" + spname.text + "' is not declared");
      src.legs.push_back(SourceLeg{mit->second, pit->second, sit->second, phiname.text});
    }
    declare(ws_.sources, "source", name.text, std::move(src));
  }

  Workspace& ws_;
  Tokenizer tk_;
};

} // namespace

Workspace parse_text(const std::string& text, const std::string& filename) {
  Workspace ws;
  parse_into(ws, text, filename);
  return ws;
}

void parse_into(Workspace& ws, const std::string& text, const std::string& filename) {
  Parser(ws, text, filename).run();
}

Workspace parse_files(const std::vector<std::string>& paths) {
  Workspace ws;
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    parse_into(ws, buf.str(), path);
  }
  return ws;
}

std::string fn_literal(const LFunction& fn) {
  const FnLattice& carrier = *fn.carrier();
  std::string s = "{";
  for (Point p = 0; p < carrier.ground()->size(); ++p) {
    if (p) s += " ";
    s += carrier.ground()->point_name(p) + "=" + carrier.basis()->elem_repr(fn.at(p));
  }
  return s + "}";
}

std::string ideal_literal(const Ideal& ideal) {
  if (!ideal.is_ramp()) {
    std::string s = "ideal extensional";
    for (const LFunction& m : ideal.members()) s += " " + fn_literal(m);
    return s;
  }
  std::string s = "ideal ramp region={";
  for (std::size_t i = 0; i < ideal.region().size(); ++i) {
    if (i) s += ",";
    s += ideal.carrier()->ground()->point_name(ideal.region()[i]);
  }
  return s + "} ceiling=" + fn_literal(ideal.ceiling());
}

std::string basismap_literal(const BasisMap& m) {
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
  s = "ramp head [";
  for (std::size_t i = 0; i < r.head().size(); ++i) {
    if (i) s += ",";
    s += m.dst()->elem_repr(r.head()[i]);
  }
  s += "] tail ";
  if (r.tail().kind == RampTail::Kind::Const)
    s += "const " + m.dst()->elem_repr(r.tail().value);
  else
    s += "shift " + std::to_string(r.tail().shift);
  if (!r.sup_continuous()) s += " omega = " + m.dst()->elem_repr(r.omega_value());
  return s;
}

namespace {

std::string serialize_lattice(const std::string& name, const Lattice& L) {
  if (!L.is_finite()) return "lattice " + name + " omega\n";
  std::string s = "lattice " + name + " finite\nelements";
  for (Elem a = 0; a < L.size(); ++a) s += " " + L.elem_name(a);
  s += "\n";
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (L.covers(b, a)) s += "cover " + L.elem_name(a) + " " + L.elem_name(b) + "\n";
  s += "bot " + L.elem_name(L.bot()) + "\n";
  s += "top " + L.elem_name(L.top()) + "\n";
  return s;
}

std::string serialize_system(const std::string& name, const BornSystem& sys) {
  std::string s = "system " + name + "\nground " + sys.ground->name() + "\nbasis " +
                  sys.basis->name() + "\n";
  if (sys.bobj.is_ideal_obj()) {
    s += "# embedded basis object\n# " + ideal_literal(*sys.bobj.ideal) + "\n";
    return s;
  }
  s += "bobj " + sys.bobj.lattice->name() + "\n";
  if (sys.kappa.rep() == StructureMap::Rep::Table) {
    s += "kappa {";
    for (Elem b = 0; b < sys.kappa.table_values().size(); ++b) {
      s += " " + sys.bobj.lattice->elem_name(b) + " -> " +
           fn_literal(sys.kappa.table_values()[b]);
    }
    s += " }\n";
    return s;
  }
  s += "kappa ramp {";
  for (Point x = 0; x < sys.kappa.chain_coords().size(); ++x) {
    const OmegaRamp& r = sys.kappa.chain_coords()[x];
    // level ramps parsed from files have the min(slope*n+offset, cap) shape
    std::string coord;
    if (r.tail().kind == RampTail::Kind::Shift) {
      coord = "slope=1 offset=" + std::to_string(r.eval(0)) + " cap=omega";
    } else if (r.head().empty()) {
      coord = "slope=0 offset=" + sys.basis->elem_repr(r.tail().value) +
              " cap=" + sys.basis->elem_repr(r.tail().value);
    } else {
      coord = "slope=1 offset=" + std::to_string(r.eval(0)) + " cap=" +
              sys.basis->elem_repr(r.tail().value);
    }
    s += " " + sys.ground->point_name(x) + ": " + coord;
  }
  s += " }\n";
  return s;
}

} // namespace

std::string serialize(const Workspace& ws) {
  std::string out;
  for (const auto& [kind, name] : ws.order) {
    if (kind == "lattice") {
      out += serialize_lattice(name, *ws.lattices.at(name));
    } else if (kind == "ground") {
      out += "ground " + name;
      const GroundSet& g = *ws.grounds.at(name);
      for (Point p = 0; p < g.size(); ++p) out += " " + g.point_name(p);
      out += "\n";
    } else if (kind == "fn") {
      const LFunction& fn = ws.fns.at(name);
      out += "fn " + name + " ground " + fn.carrier()->ground()->name() + " basis " +
             fn.carrier()->basis()->name() + " " + fn_literal(fn) + "\n";
    } else if (kind == "map") {
      const GroundMap& m = ws.maps.at(name);
      out += "map " + name + " : " + m.src()->name() + " -> " + m.dst()->name() + " {";
      for (Point p = 0; p < m.src()->size(); ++p)
        out += " " + m.src()->point_name(p) + "->" + m.dst()->point_name(m.eval(p));
      out += " }\n";
    } else if (kind == "basismap") {
      const BasisMap& m = ws.basismaps.at(name);
      out += "basismap " + name + " : " + m.src()->name() + " -> " + m.dst()->name() +
             " " + basismap_literal(m) + "\n";
    } else if (kind == "space") {
      const BornSpace& sp = ws.spaces.at(name);
      out += "space " + name + "\nground " + sp.ground->name() + "\nbasis " +
             sp.basis->name() + "\n" + ideal_literal(sp.bornology) + "\n";
    } else if (kind == "system") {
      out += serialize_system(name, ws.systems.at(name));
    } else if (kind == "source") {
      const StructuredSource& src = ws.sources.at(name);
      out += "source " + name + "\napex " + src.apex->name() + " basis " +
             src.basis->name() + "\n";
      for (const SourceLeg& leg : src.legs)
        out += "leg map=" + leg.f.name() + " phi=" + leg.phi_name +
               " space=" + leg.space.name + "\n";
    }
  }
  return out;
}

} // namespace bornolab
