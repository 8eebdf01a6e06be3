#include "foliate/cli/documents.hpp"

#include <fstream>
#include <set>

#include "foliate/cli/expression.hpp"
#include "foliate/error.hpp"

namespace foliate::cli {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidDocument, msg); }

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) invalid(std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) invalid(what + " must be a string");
  return j.get<std::string>();
}

VarList name_list(const json& obj, const char* key, bool required) {
  if (!obj.contains(key)) {
    if (required) invalid(std::string("missing \"") + key + "\"");
    return {};
  }
  const json& arr = obj.at(key);
  if (!arr.is_array()) invalid(std::string("\"") + key + "\" must be a list of names");
  VarList out;
  for (const auto& item : arr) {
    const std::string name = as_string(item, std::string("entry of \"") + key + "\"");
    if (name == "i") invalid("'i' is reserved for the imaginary unit");
    out.push_back(name);
  }
  return out;
}

int read_order(const json& doc, int fallback) {
  if (!doc.contains("order")) return fallback;
  const json& o = doc.at("order");
  if (!o.is_number_integer() || o.get<int>() < 0) invalid("\"order\" must be a nonnegative integer");
  return o.get<int>();
}

void require_subset(const VarList& sub, const VarList& of, const std::string& what) {
  for (const auto& name : sub) {
    if (std::find(of.begin(), of.end(), name) == of.end()) invalid(what + " '" + name + "' is not tangential");
  }
}

std::map<std::string, MultiPoly> parse_component_map(const json& obj, const IdealSpec& ideal, const std::string& what) {
  if (!obj.is_object()) invalid(what + " must be an object of expressions");
  std::map<std::string, MultiPoly> out;
  for (const auto& [name, expr] : obj.items()) {
    ideal.index_of(name);
    out.emplace(name, ideal.adopt(parse_polynomial(as_string(expr, what + "." + name), ideal.variables())));
  }
  return out;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    invalid(path.string() + " is not valid JSON: " + e.what());
  }
}

FieldDocument parse_field_document(const json& doc) {
  const json& vars = member(doc, "variables");
  FieldDocument out;
  const VarList normal = name_list(vars, "normal", true);
  const VarList tangential = name_list(vars, "tangential", true);
  out.foliation = name_list(vars, "foliation", false);
  require_subset(out.foliation, tangential, "foliation variable");
  try {
    out.ideal = IdealSpec(normal, tangential, read_order(doc, 1));
  } catch (const Error& e) {
    invalid(e.what());
  }
  if (doc.contains("mode")) {
    const std::string mode = as_string(doc.at("mode"), "\"mode\"");
    if (mode == "tangential") {
      out.mode = SurfaceMode::Tangential;
    } else if (mode == "transversal") {
      out.mode = SurfaceMode::Transversal;
    } else {
      invalid("\"mode\" must be \"tangential\" or \"transversal\"");
    }
  }
  if (doc.contains("components")) out.components = parse_component_map(doc.at("components"), out.ideal, "components");
  if (doc.contains("fields")) {
    if (!doc.at("fields").is_array()) invalid("\"fields\" must be a list");
    for (const auto& f : doc.at("fields")) out.fields.push_back(parse_component_map(f, out.ideal, "fields"));
  }
  if (doc.contains("function")) {
    out.function = out.ideal.adopt(parse_polynomial(as_string(doc.at("function"), "\"function\""), out.ideal.variables()));
  }
  if (doc.contains("form")) out.form = parse_component_map(doc.at("form"), out.ideal, "form");
  return out;
}

VectorFieldJet document_field(const FieldDocument& doc) {
  if (doc.components) return classify_field(*doc.components, doc.ideal);
  if (!doc.fields.empty()) return classify_field(doc.fields.front(), doc.ideal);
  invalid("document has no \"components\"");
}

std::vector<VectorFieldJet> document_fields(const FieldDocument& doc) {
  std::vector<VectorFieldJet> out;
  for (const auto& f : doc.fields) out.push_back(classify_field(f, doc.ideal));
  return out;
}

SurfaceFieldInput surface_input(const FieldDocument& doc) {
  if (doc.ideal.normal_vars().size() != 1 || doc.ideal.tangential_vars().size() != 1) {
    invalid("residue commands need exactly one normal and one tangential variable");
  }
  if (!doc.components) invalid("document has no \"components\"");
  const std::string& x = doc.ideal.normal_vars().front();
  const std::string& y = doc.ideal.tangential_vars().front();
  // Same exponent layout (normal first), so terms carry over under the names x, y.
  auto rename = [&](const std::string& var) {
    MultiPoly out(SurfaceFieldInput::variables());
    if (auto it = doc.components->find(var); it != doc.components->end()) {
      for (const auto& [e, c] : it->second.terms()) out.add_term(e, c);
    }
    return out;
  };
  return SurfaceFieldInput::make(rename(x), rename(y), doc.mode);
}

TransitionAtlas parse_atlas_document(const json& doc) {
  const json& roles_json = member(doc, "roles");
  VariableRoles roles{name_list(roles_json, "normal", true), name_list(roles_json, "tangential", true),
                      name_list(roles_json, "foliation", false)};
  require_subset(roles.foliation, roles.tangential, "foliation variable");
  const VarList all = roles.all();
  const VarList charts = name_list(doc, "charts", true);
  std::vector<Transition> transitions;
  const json& ts = member(doc, "transitions");
  if (!ts.is_array()) invalid("\"transitions\" must be a list");
  for (const auto& t : ts) {
    Transition tr{as_string(member(t, "from"), "\"from\""), as_string(member(t, "to"), "\"to\""), {}};
    const json& map = member(t, "map");
    if (!map.is_object()) invalid("transition map must be an object");
    for (const auto& [name, expr] : map.items()) {
      tr.map.emplace(name, parse_rational(as_string(expr, "transition component"), all));
    }
    transitions.push_back(std::move(tr));
  }
  std::vector<ChartPair> overlaps;
  if (doc.contains("overlaps")) {
    for (const auto& p : doc.at("overlaps")) {
      if (!p.is_array() || p.size() != 2) invalid("each overlap is a pair of chart names");
      overlaps.emplace_back(as_string(p[0], "chart"), as_string(p[1], "chart"));
    }
  }
  std::vector<ChartTriple> triples;
  if (doc.contains("triples")) {
    for (const auto& t : doc.at("triples")) {
      if (!t.is_array() || t.size() != 3) invalid("each triple is a list of three chart names");
      triples.push_back({as_string(t[0], "chart"), as_string(t[1], "chart"), as_string(t[2], "chart")});
    }
  }
  return TransitionAtlas(roles, read_order(doc, 2), charts, std::move(transitions), overlaps, triples);
}

std::string pair_key(const ChartPair& p) { return p.first + "|" + p.second; }

CechCochain parse_cochain(const json& doc, const TransitionAtlas& atlas) {
  const std::string kind = as_string(member(doc, "kind"), "\"kind\"");
  CochainKind k;
  if (kind == "atiyah") {
    k = CochainKind::Atiyah;
  } else if (kind == "normal") {
    k = CochainKind::NormalExtension;
  } else {
    invalid("cochain kind must be \"atiyah\" or \"normal\"");
  }
  const json& degree = member(doc, "degree");
  if (!degree.is_number_integer()) invalid("\"degree\" must be 0 or 1");
  CechCochain c = empty_cochain(k, degree.get<int>(), atlas);
  const json& comps = member(doc, "components");
  if (!comps.is_object()) invalid("\"components\" must be an object");
  for (const auto& [key, entries] : comps.items()) {
    if (!entries.is_array() || entries.size() != c.entry_count()) {
      throw Error(ErrorCode::FrameMismatch, "component " + key + " needs " + std::to_string(c.entry_count()) + " entries");
    }
    Tensor t;
    for (const auto& e : entries) {
      t.push_back(RationalJet::from_function(c.ideal, parse_rational(as_string(e, "cochain entry"), c.ideal.variables())));
    }
    if (c.degree == 0) {
      if (!atlas.has_chart(key)) invalid("unknown chart '" + key + "'");
      c.chart_components.emplace(key, std::move(t));
    } else {
      const auto bar = key.find('|');
      if (bar == std::string::npos) invalid("degree-1 keys look like \"A|B\"");
      ChartPair p{key.substr(0, bar), key.substr(bar + 1)};
      if (p.first > p.second) invalid("degree-1 key " + key + " must list the charts in sorted order");
      c.pair_components.emplace(std::move(p), std::move(t));
    }
  }
  return c;
}

json cochain_to_json(const CechCochain& c) {
  json out;
  out["kind"] = std::string(cochain_kind_name(c.kind));
  out["degree"] = c.degree;
  json slots = json::array();
  for (const auto& s : c.slots) slots.push_back({{"kind", std::string(slot_name(s.kind))}, {"indices", s.indices}});
  out["slots"] = slots;
  json comps = json::object();
  auto dump = [](const Tensor& t) {
    json arr = json::array();
    for (const auto& e : t) arr.push_back(e.to_string());
    return arr;
  };
  for (const auto& [chart, t] : c.chart_components) comps[chart] = dump(t);
  for (const auto& [pair, t] : c.pair_components) comps[pair_key(pair)] = dump(t);
  out["components"] = comps;
  out["zero"] = c.is_zero();
  return out;
}

}  // namespace foliate::cli
