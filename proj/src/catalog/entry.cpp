#include "qdeform/catalog/entry.hpp"

#include <algorithm>

#include "qdeform/errors.hpp"
#include "qdeform/symexpr/parse.hpp"

namespace qdeform {

namespace {

const std::map<EntryKind, std::string> kKindNames = {
    {EntryKind::RMatrix, "rmatrix"},
    {EntryKind::ColouredFamily, "coloured-family"},
    {EntryKind::Presentation, "presentation"},
    {EntryKind::Contraction, "contraction"},
    {EntryKind::Hom, "hom"},
};

const std::vector<std::string> kProvenance = {"literature-derived", "contraction-output", "reconstructed-by-oracle"};

// Field access with schema errors that name the entry and field.
class Reader {
 public:
  Reader(const Json& doc, std::string where) : doc_(doc), where_(std::move(where)) {
    if (!doc_.is_object()) fail("expected an object");
  }

  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(where_ + ": " + what); }

  bool has(const char* key) const { return doc_.contains(key); }
  const Json& at(const char* key) const {
    if (!doc_.contains(key)) fail(std::string("missing field '") + key + "'");
    return doc_.at(key);
  }
  std::string str(const char* key) const {
    const Json& v = at(key);
    if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
  }
  std::vector<std::string> strings(const char* key) const { return string_list(at(key), key); }
  std::vector<std::string> string_list(const Json& v, const std::string& key) const {
    if (!v.is_array()) fail("field '" + key + "' must be a list of strings");
    std::vector<std::string> out;
    for (const auto& x : v) {
      if (!x.is_string()) fail("field '" + key + "' must be a list of strings");
      out.push_back(x.get<std::string>());
    }
    return out;
  }
  std::map<std::string, std::string> string_map(const Json& v, const std::string& key) const {
    if (!v.is_object()) fail("field '" + key + "' must be an object of strings");
    std::map<std::string, std::string> out;
    for (const auto& [k, x] : v.items()) {
      if (!x.is_string()) fail("field '" + key + "' must be an object of strings");
      out[k] = x.get<std::string>();
    }
    return out;
  }
  const std::string& where() const { return where_; }

 private:
  const Json& doc_;
  std::string where_;
};

RatFunc parse_in(const Reader& r, const std::string& text, const ParamSetPtr& params, const std::string& field) {
  try {
    return parse_ratfunc(text, params);
  } catch (const ParseError& e) {
    throw ParseError(r.where() + ": " + field + ": " + e.what());
  }
}

NCPoly parse_poly_in(const Reader& r, const std::string& text, const Alphabet& a, const ParamSetPtr& params,
                     const std::string& field) {
  try {
    return parse_ncpoly(text, a, params);
  } catch (const ParseError& e) {
    throw ParseError(r.where() + ": " + field + ": " + e.what());
  } catch (const LookupError& e) {
    throw ParseError(r.where() + ": " + field + ": " + e.what());
  }
}

std::pair<ColourGroup, ColourGroup> read_slots(const Reader& r, const Json& v, const std::string& field) {
  Reader s(v, r.where() + ": " + field);
  return {s.strings("first"), s.strings("second")};
}

Json slots_json(const ColourGroup& a, const ColourGroup& b) {
  Json j;
  j["first"] = a;
  j["second"] = b;
  return j;
}

std::vector<std::string> matrix_strings(const SymMatrix& m) {
  std::vector<std::string> out;
  for (const auto& e : m.entries()) out.push_back(e.to_string());
  return out;
}

SymMatrix read_matrix(const Reader& r, const Json& v, std::size_t dim, const ParamSetPtr& params,
                      const std::string& field) {
  auto texts = r.string_list(v, field);
  if (texts.size() != dim * dim) {
    r.fail("field '" + field + "' has " + std::to_string(texts.size()) + " entries, expected " +
           std::to_string(dim * dim));
  }
  std::vector<RatFunc> entries;
  for (std::size_t i = 0; i < texts.size(); ++i)
    entries.push_back(parse_in(r, texts[i], params, field + "[" + std::to_string(i) + "]"));
  return SymMatrix::from_entries(dim, dim, std::move(entries));
}

std::size_t read_dim(const Reader& r, const Json& v) {
  if (!v.is_number_integer() || v.get<long>() <= 0) r.fail("field 'dim' must be a positive integer");
  return v.get<std::size_t>();
}

std::string canonical_ratfunc(const Reader& r, const std::string& text, const ParamSetPtr& params,
                              const std::string& field) {
  return parse_in(r, text, params, field).to_string();
}

void check_hom_template(const Reader& r, const std::string& text, const ParamSetPtr& params,
                        const std::string& field) {
  try {
    parse_ratfunc(text, params, {{"N", 1}});
  } catch (const ParseError& e) {
    throw ParseError(r.where() + ": " + field + ": " + e.what());
  }
}

}  // namespace

std::string to_string(EntryKind k) { return kKindNames.at(k); }

EntryKind parse_entry_kind(const std::string& s) {
  for (const auto& [k, name] : kKindNames)
    if (name == s) return k;
  throw SchemaError("unknown entry kind '" + s + "'");
}

ParamSetPtr CatalogEntry::param_set() const { return ParamSet::make(params); }

bool CatalogEntry::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

ColouredFamily CatalogEntry::family() const {
  if (!colour_slots) throw SlotError(name + " has no colour slots");
  return ColouredFamily(matrix, colour_slots->first, colour_slots->second);
}

Alphabet CatalogEntry::local_alphabet() const {
  if (!presentation) return {};
  Alphabet a = localized_alphabet(presentation->alphabet, presentation->invertible);
  if (quasi_central) a = a.extended({inverse_name(quasi_central->first)});
  return a;
}

Bindings HomDef::bindings(const ParamSetPtr& params, int N, const std::map<std::string, std::string>& override_map) const {
  Bindings b;
  for (const auto& [k, v] : param_map) b[k] = parse_ratfunc(v, params, {{"N", N}});
  for (const auto& [k, v] : override_map) b[k] = parse_ratfunc(v, params, {{"N", N}});
  return b;
}

CatalogEntry load_definition(const Json& doc) {
  std::string where = doc.is_object() && doc.contains("name") && doc["name"].is_string()
                          ? doc["name"].get<std::string>()
                          : std::string("definition");
  Reader r(doc, where);
  CatalogEntry e;
  e.name = r.str("name");
  bool name_ok = !e.name.empty() && std::all_of(e.name.begin(), e.name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
  if (!name_ok) r.fail("invalid name");
  e.kind = parse_entry_kind(r.str("kind"));
  e.params = r.has("params") ? r.strings("params") : std::vector<std::string>{};
  ParamSetPtr params = ParamSet::make(e.params);

  if (r.has("colour_slots")) e.colour_slots = read_slots(r, r.at("colour_slots"), "colour_slots");
  if (r.has("colours")) {
    const Json& cs = r.at("colours");
    if (!cs.is_array()) r.fail("field 'colours' must be a list of lists");
    for (const auto& c : cs) e.colours.push_back(r.string_list(c, "colours"));
  }
  auto check_symbols = [&](const std::vector<std::string>& names, const std::string& field) {
    for (const auto& s : names)
      if (!params->index_of(s)) r.fail("field '" + field + "' names undeclared parameter '" + s + "'");
  };
  if (e.colour_slots) {
    check_symbols(e.colour_slots->first, "colour_slots");
    check_symbols(e.colour_slots->second, "colour_slots");
  }
  for (const auto& c : e.colours) check_symbols(c, "colours");

  const bool has_matrix = e.kind == EntryKind::RMatrix || e.kind == EntryKind::ColouredFamily;
  if (has_matrix) {
    e.dim = read_dim(r, r.at("dim"));
    e.matrix = read_matrix(r, r.at("entries"), e.dim, params, "entries");
    std::size_t n = 1;
    while (n * n < e.dim) ++n;
    if (n * n != e.dim) throw DimensionMismatch(where + ": dim " + std::to_string(e.dim) + " is not a square");
  }
  if (e.kind == EntryKind::ColouredFamily) {
    if (!e.colour_slots) r.fail("coloured-family requires 'colour_slots'");
    if (e.colours.size() < 2) r.fail("coloured-family requires at least two colour groups");
    e.family();
  }

  if (r.has("pattern")) {
    const Json& pj = r.at("pattern");
    if (!pj.is_array()) r.fail("field 'pattern' must be a list of rows");
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : pj) rows.push_back(r.string_list(row, "pattern"));
    Presentation p;
    p.name = e.name;
    p.pattern = TPattern::parse(rows);
    if (has_matrix && p.pattern.n() * p.pattern.n() != e.dim)
      throw DimensionMismatch(where + ": pattern size does not match dim");
    if (p.pattern.is_coloured()) {
      if (e.colours.size() < 2) r.fail("a coloured pattern requires at least two colour groups");
      p.colours = {e.colours[0], e.colours[1]};
    }
    std::vector<std::string> gens = r.strings("generators");
    p.alphabet = Alphabet(gens);
    std::vector<std::string> expected;
    for (const auto& colour : p.is_coloured() ? p.colours : std::vector<ColourGroup>{ColourGroup{}})
      for (const auto& g : p.pattern.generators(colour))
        if (std::find(expected.begin(), expected.end(), g) == expected.end()) expected.push_back(g);
    auto sorted_gens = gens;
    std::sort(sorted_gens.begin(), sorted_gens.end());
    std::sort(expected.begin(), expected.end());
    if (sorted_gens != expected) r.fail("'generators' must list exactly the generators of the pattern");
    if (r.has("invertible")) {
      p.invertible = r.strings("invertible");
      for (const auto& g : p.invertible)
        if (!p.alphabet.find(g)) r.fail("invertible generator '" + g + "' is not a generator");
    }
    if (r.has("relations")) {
      auto texts = r.strings("relations");
      for (std::size_t i = 0; i < texts.size(); ++i)
        p.relations.push_back(
            parse_poly_in(r, texts[i], p.alphabet, params, "relations[" + std::to_string(i) + "]"));
    } else if (e.kind == EntryKind::RMatrix) {
      p.relations = rtt_relations(e.matrix, p.pattern, p.alphabet);
    } else if (e.kind == EntryKind::ColouredFamily) {
      p.relations = coloured_rtt_relations(e.family(), p.pattern, p.alphabet, p.colours);
    }
    e.presentation = std::move(p);
  } else if (e.kind == EntryKind::Presentation) {
    r.fail("presentation requires 'pattern'");
  }

  if (r.has("hecke")) {
    auto h = r.strings("hecke");
    if (h.size() != 2) r.fail("field 'hecke' must hold two values");
    e.hecke = {parse_in(r, h[0], params, "hecke"), parse_in(r, h[1], params, "hecke")};
  }
  if (r.has("classical_point")) {
    for (const auto& [k, v] : r.string_map(r.at("classical_point"), "classical_point")) {
      if (!params->index_of(k)) r.fail("classical_point names undeclared parameter '" + k + "'");
      e.classical_point[k] = parse_in(r, v, params, "classical_point");
    }
  }
  if (r.has("quasi_central") || r.has("antipode") || r.has("grouplike")) {
    if (!e.presentation) r.fail("Hopf data requires a pattern");
  }
  if (r.has("quasi_central")) {
    Reader q(r.at("quasi_central"), where + ": quasi_central");
    e.quasi_central = {q.str("name"),
                       parse_poly_in(r, q.str("element"), e.presentation->alphabet, params, "quasi_central")};
  }
  if (r.has("antipode")) {
    Alphabet la = e.local_alphabet();
    for (const auto& [g, v] : r.string_map(r.at("antipode"), "antipode")) {
      if (!e.presentation->alphabet.find(g)) r.fail("antipode of unknown generator '" + g + "'");
      e.antipode[g] = parse_poly_in(r, v, la, params, "antipode." + g);
    }
  }
  if (r.has("grouplike")) {
    for (const auto& gj : r.at("grouplike")) {
      Reader g(gj, where + ": grouplike");
      GrouplikeClaim c;
      c.element = parse_poly_in(r, g.str("element"), e.presentation->alphabet, params, "grouplike")
                      .to_string(e.presentation->alphabet);
      if (!g.at("grouplike").is_boolean() || !g.at("central").is_boolean())
        g.fail("'grouplike' and 'central' must be booleans");
      c.grouplike = g.at("grouplike").get<bool>();
      c.central = g.at("central").get<bool>();
      e.grouplike.push_back(std::move(c));
    }
  }
  if (r.has("quotient_of")) {
    Reader q(r.at("quotient_of"), where + ": quotient_of");
    QuotientClaim c;
    c.source = q.str("source");
    c.kill = q.strings("kill");
    std::string level = q.has("level") ? q.str("level") : "relations";
    if (level != "relations" && level != "pattern") q.fail("level must be 'relations' or 'pattern'");
    c.pattern_only = level == "pattern";
    e.quotient = std::move(c);
  }
  if (r.has("subalgebras")) {
    for (const auto& sj : r.at("subalgebras")) {
      Reader s(sj, where + ": subalgebras");
      SubalgebraClaim c;
      c.keep = s.strings("keep");
      c.target = s.str("target");
      if (s.has("target_bindings")) {
        for (const auto& [k, v] : s.string_map(s.at("target_bindings"), "target_bindings"))
          c.target_bindings[k] = canonical_ratfunc(r, v, params, "target_bindings");
      }
      e.subalgebras.push_back(std::move(c));
    }
  }

  if (e.kind == EntryKind::Contraction) {
    Reader c(r.at("contraction"), where + ": contraction");
    ContractionDef d;
    d.source = c.str("source");
    d.target = c.str("target");
    Reader t(c.at("transform"), where + ": contraction.transform");
    d.transform_dim = read_dim(t, t.at("dim"));
    d.transform = matrix_strings(read_matrix(t, t.at("entries"), d.transform_dim, params, "transform"));
    if (c.has("eta_symbol")) d.eta_symbol = c.str("eta_symbol");
    if (!params->index_of(d.eta_symbol)) c.fail("eta symbol must be a declared parameter");
    d.eta = canonical_ratfunc(r, c.str("eta"), params, "eta");
    Reader l(c.at("limit"), where + ": contraction.limit");
    d.limit_param = l.str("param");
    if (!params->index_of(d.limit_param)) l.fail("limit parameter must be declared");
    RatFunc lv = parse_in(r, l.str("value"), params, "limit.value");
    if (!lv.is_constant()) l.fail("limit value must be a rational constant");
    d.limit_value = lv.to_string();
    if (c.has("rebind")) {
      for (const auto& [k, v] : c.string_map(c.at("rebind"), "rebind"))
        d.rebind[k] = canonical_ratfunc(r, v, params, "rebind");
    }
    if (c.has("result_slots")) std::tie(d.result_first, d.result_second) = read_slots(c, c.at("result_slots"), "result_slots");
    e.contraction = std::move(d);
  }

  if (e.kind == EntryKind::Hom) {
    Reader h(r.at("hom"), where + ": hom");
    HomDef d;
    d.source = h.str("source");
    d.target = h.str("target");
    const Json& ij = h.at("images");
    if (!ij.is_object()) h.fail("field 'images' must be an object");
    for (const auto& [g, v] : ij.items()) {
      Reader im(v, where + ": hom.images." + g);
      d.images[g] = HomImage{im.has("power") ? im.str("power") : "", im.has("base") ? im.str("base") : ""};
    }
    d.param_map = h.string_map(h.at("param_map"), "param_map");
    for (const auto& [k, v] : d.param_map) check_hom_template(r, v, params, "param_map." + k);
    if (h.has("N")) {
      d.exponents.clear();
      for (const auto& n : h.at("N")) {
        if (!n.is_number_integer() || n.get<int>() == 0) h.fail("N must be nonzero integers");
        d.exponents.push_back(n.get<int>());
      }
    }
    if (h.has("controls")) {
      for (const auto& cj : h.at("controls")) {
        Reader c(cj, where + ": hom.controls");
        HomControl hc{c.str("name"), c.string_map(c.at("override"), "override")};
        for (const auto& [k, v] : hc.override_map) check_hom_template(r, v, params, "controls." + k);
        d.controls.push_back(std::move(hc));
      }
    }
    if (h.has("exponent_twin")) {
      Reader t(h.at("exponent_twin"), where + ": hom.exponent_twin");
      ExponentTwin tw;
      tw.spec = t.str("spec");
      auto pairs = [&](const char* key) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& p : t.at(key)) {
          auto v = t.string_list(p, key);
          if (v.size() != 2) t.fail(std::string(key) + " entries must be pairs");
          out.emplace_back(v[0], v[1]);
        }
        return out;
      };
      tw.params = pairs("params");
      tw.variables = pairs("variables");
      d.twin = std::move(tw);
    }
    e.hom = std::move(d);
  }

  if (r.has("flags")) e.flags = r.strings("flags");
  {
    Reader p(r.at("provenance"), where + ": provenance");
    e.provenance.source = p.str("source");
    e.provenance.note = p.has("note") ? p.str("note") : "";
    if (std::find(kProvenance.begin(), kProvenance.end(), e.provenance.source) == kProvenance.end())
      p.fail("unknown provenance source '" + e.provenance.source + "'");
  }
  return e;
}

Json to_json(const CatalogEntry& e) {
  Json j;
  j["name"] = e.name;
  j["kind"] = to_string(e.kind);
  j["params"] = e.params;
  if (e.colour_slots) j["colour_slots"] = slots_json(e.colour_slots->first, e.colour_slots->second);
  if (!e.colours.empty()) j["colours"] = e.colours;
  if (e.kind == EntryKind::RMatrix || e.kind == EntryKind::ColouredFamily) {
    j["dim"] = e.dim;
    j["entries"] = matrix_strings(e.matrix);
  }
  if (e.presentation) {
    const Presentation& p = *e.presentation;
    j["pattern"] = p.pattern.to_strings();
    j["generators"] = p.alphabet.names();
    if (!p.invertible.empty()) j["invertible"] = p.invertible;
    std::vector<std::string> rels;
    for (const auto& rel : p.relations) rels.push_back(rel.to_string(p.alphabet));
    j["relations"] = rels;
  }
  if (e.hecke) j["hecke"] = {e.hecke->first.to_string(), e.hecke->second.to_string()};
  if (!e.classical_point.empty()) {
    Json c = Json::object();
    for (const auto& [k, v] : e.classical_point) c[k] = v.to_string();
    j["classical_point"] = c;
  }
  if (e.quasi_central) {
    j["quasi_central"] = {{"name", e.quasi_central->first},
                          {"element", e.quasi_central->second.to_string(e.presentation->alphabet)}};
  }
  if (!e.antipode.empty()) {
    Alphabet la = e.local_alphabet();
    Json a = Json::object();
    for (const auto& [g, v] : e.antipode) a[g] = v.to_string(la);
    j["antipode"] = a;
  }
  if (!e.grouplike.empty()) {
    Json g = Json::array();
    for (const auto& c : e.grouplike)
      g.push_back({{"element", c.element}, {"grouplike", c.grouplike}, {"central", c.central}});
    j["grouplike"] = g;
  }
  if (e.quotient) {
    j["quotient_of"] = {{"source", e.quotient->source},
                        {"kill", e.quotient->kill},
                        {"level", e.quotient->pattern_only ? "pattern" : "relations"}};
  }
  if (!e.subalgebras.empty()) {
    Json s = Json::array();
    for (const auto& c : e.subalgebras) {
      Json x;
      x["keep"] = c.keep;
      x["target"] = c.target;
      Json b = Json::object();
      for (const auto& [k, v] : c.target_bindings) b[k] = v;
      x["target_bindings"] = b;
      s.push_back(x);
    }
    j["subalgebras"] = s;
  }
  if (e.contraction) {
    const ContractionDef& d = *e.contraction;
    Json c;
    c["source"] = d.source;
    c["target"] = d.target;
    c["transform"] = {{"dim", d.transform_dim}, {"entries", d.transform}};
    c["eta_symbol"] = d.eta_symbol;
    c["eta"] = d.eta;
    c["limit"] = {{"param", d.limit_param}, {"value", d.limit_value}};
    Json rb = Json::object();
    for (const auto& [k, v] : d.rebind) rb[k] = v;
    c["rebind"] = rb;
    if (!d.result_first.empty()) c["result_slots"] = slots_json(d.result_first, d.result_second);
    j["contraction"] = c;
  }
  if (e.hom) {
    const HomDef& d = *e.hom;
    Json h;
    h["source"] = d.source;
    h["target"] = d.target;
    Json im = Json::object();
    for (const auto& [g, v] : d.images) {
      Json x = Json::object();
      if (!v.power.empty()) x["power"] = v.power;
      if (!v.base.empty()) x["base"] = v.base;
      im[g] = x;
    }
    h["images"] = im;
    Json pm = Json::object();
    for (const auto& [k, v] : d.param_map) pm[k] = v;
    h["param_map"] = pm;
    h["N"] = d.exponents;
    Json cs = Json::array();
    for (const auto& c : d.controls) {
      Json o = Json::object();
      for (const auto& [k, v] : c.override_map) o[k] = v;
      cs.push_back({{"name", c.name}, {"override", o}});
    }
    h["controls"] = cs;
    if (d.twin) {
      Json ps = Json::array(), vs = Json::array();
      for (const auto& [a, b] : d.twin->params) ps.push_back({a, b});
      for (const auto& [a, b] : d.twin->variables) vs.push_back({a, b});
      h["exponent_twin"] = {{"spec", d.twin->spec}, {"params", ps}, {"variables", vs}};
    }
    j["hom"] = h;
  }
  j["flags"] = e.flags;
  j["provenance"] = {{"source", e.provenance.source}, {"note", e.provenance.note}};
  return j;
}

std::string dump_definition(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace qdeform
