#include "foliate/cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "foliate/cli/documents.hpp"
#include "foliate/error.hpp"
#include "foliate/involutive.hpp"
#include "foliate/laurent.hpp"
#include "foliate/oracle.hpp"

namespace foliate::cli {

namespace {

struct Report {
  int exit_code = kExitPass;
  json data = json::object();
  std::vector<std::string> lines;
};

json field_json(const VectorFieldJet& v) {
  json comps = json::object();
  for (std::size_t i = 0; i < v.components().size(); ++i) {
    comps[v.ideal().variables()[i]] = v.component(i).to_string();
  }
  return {{"components", comps}, {"status", std::string(status_name(v.status()))}, {"order", v.ideal().order()}};
}

std::string exact(const GaussianRational& g) { return g.to_string(); }

FieldDocument load_field(const std::string& path) { return parse_field_document(read_json_file(path)); }

Report cmd_bracket(const std::string& input) {
  const FieldDocument doc = load_field(input);
  const auto fields = document_fields(doc);
  if (fields.size() != 2) throw Error(ErrorCode::InvalidDocument, "bracket needs exactly two \"fields\"");
  const VectorFieldJet w = jet_bracket(fields[0], fields[1]);
  Report r;
  r.data["bracket"] = field_json(w);
  r.lines.push_back("[u, v] = " + w.to_string());
  r.lines.push_back("status = " + std::string(status_name(w.status())));
  return r;
}

Report cmd_apply(const std::string& input) {
  const FieldDocument doc = load_field(input);
  if (!doc.function) throw Error(ErrorCode::InvalidDocument, "apply needs a \"function\"");
  const JetClass out = jet_apply(document_field(doc), truncate(*doc.function, doc.ideal));
  Report r;
  r.data["result"] = out.to_string();
  r.lines.push_back("v(f) = " + out.to_string());
  return r;
}

Report cmd_classify(const std::string& input) {
  const FieldDocument doc = load_field(input);
  const VectorFieldJet v = document_field(doc);
  Report r;
  r.data["field"] = field_json(v);
  r.data["tangential"] = v.is_logarithmic();
  r.lines.push_back("field = " + v.to_string());
  r.lines.push_back("status = " + std::string(status_name(v.status())));
  r.lines.push_back(std::string("tangent to S(k) = ") + (v.is_logarithmic() ? "yes" : "no"));
  return r;
}

Report cmd_primitive(const std::string& input) {
  const FieldDocument doc = load_field(input);
  if (doc.form.empty()) throw Error(ErrorCode::InvalidDocument, "primitive needs a nonempty \"form\"");
  std::map<std::string, JetClass> coeffs;
  for (const auto& [name, p] : doc.form) coeffs.emplace(name, truncate(p, doc.ideal));
  const JetClass h = primitive_of_closed_1form(coeffs);
  Report r;
  r.data["primitive"] = h.to_string();
  r.lines.push_back("h = " + h.to_string());
  return r;
}

Report cmd_involutive(const std::string& input, int bound) {
  const FieldDocument doc = load_field(input);
  const InvolutivityResult res = involutivity_check(document_fields(doc), bound);
  Report r;
  r.data["verdict"] = std::string(verdict_name(res.verdict));
  r.data["degree_bound"] = bound;
  r.lines.push_back("verdict = " + std::string(verdict_name(res.verdict)));
  json witnesses = json::array();
  for (const auto& w : res.witnesses) {
    json coeffs = json::array();
    std::string text;
    for (std::size_t j = 0; j < w.coefficients.size(); ++j) {
      coeffs.push_back(w.coefficients[j].to_string());
      text += (j ? ", " : "") + w.coefficients[j].to_string();
    }
    witnesses.push_back({{"pair", {w.first, w.second}}, {"coefficients", coeffs}});
    r.lines.push_back("[g" + std::to_string(w.first) + ", g" + std::to_string(w.second) + "] coefficients: " + text);
  }
  r.data["witnesses"] = witnesses;
  if (res.failure) {
    const auto& f = *res.failure;
    r.data["failure"] = {{"pair", {f.first, f.second}}, {"bracket", field_json(f.bracket)}};
    r.lines.push_back("[g" + std::to_string(f.first) + ", g" + std::to_string(f.second) + "] = " + f.bracket.to_string() +
                      " is not in the span");
    if (res.obstruction_degree >= 0) {
      r.data["obstruction_degree"] = res.obstruction_degree;
      r.lines.push_back("obstruction on S modulo degree " + std::to_string(res.obstruction_degree + 1));
    }
  }
  r.exit_code = res.verdict == InvolutivityVerdict::Involutive ? kExitPass : kExitFail;
  return r;
}

void add_check(Report& r, const CheckReport& c) {
  json failures = json::array();
  std::string label = c.check;
  if (c.check != "adapted") label += " k=" + std::to_string(c.order);
  r.lines.push_back(label + ": " + (c.passed() ? "pass" : "FAIL"));
  for (const auto& f : c.failures) {
    failures.push_back({{"from", f.from}, {"to", f.to}, {"component", f.component}, {"value", f.value}});
    r.lines.push_back("  " + f.from + "->" + f.to + " " + f.component + " = " + f.value);
  }
  r.data["checks"].push_back({{"check", c.check}, {"order", c.order}, {"passed", c.passed()}, {"failures", failures}});
  if (!c.passed()) r.exit_code = kExitFail;
}

Report cmd_check_atlas(const std::string& input, std::optional<int> extend, std::optional<int> split) {
  const TransitionAtlas atlas = parse_atlas_document(read_json_file(input));
  Report r;
  r.data["checks"] = json::array();
  const CheckReport adapted = check_adapted(atlas);
  add_check(r, adapted);
  if (!adapted.passed()) {
    if (extend || split) r.lines.push_back("further checks need an adapted atlas; skipped");
    return r;
  }
  if (extend) add_check(r, check_extension_condition(atlas, *extend));
  if (split) add_check(r, check_k_splitting(atlas, *split));
  return r;
}

CochainKind parse_kind(const std::string& kind) {
  if (kind == "atiyah") return CochainKind::Atiyah;
  if (kind == "normal") return CochainKind::NormalExtension;
  throw Error(ErrorCode::InvalidArgument, "--kind must be atiyah or normal");
}

void describe_cochain(Report& r, const CechCochain& c) {
  std::string frames;
  for (const auto& s : c.slots) {
    std::string idx;
    for (const auto& i : s.indices) idx += (idx.empty() ? "" : ",") + i;
    frames += (frames.empty() ? "" : " x ") + std::string(slot_name(s.kind)) + "(" + idx + ")";
  }
  r.lines.push_back("frames = " + frames);
  auto emit = [&](const std::string& key, const Tensor& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].is_zero()) continue;
      std::string idx;
      for (std::size_t k : c.multi_index(i)) idx += (idx.empty() ? "" : ",") + std::to_string(k);
      r.lines.push_back(key + " [" + idx + "] = " + t[i].to_string());
    }
  };
  for (const auto& [chart, t] : c.chart_components) emit(chart, t);
  for (const auto& [pair, t] : c.pair_components) emit(pair_key(pair), t);
}

Report cmd_obstruction(const std::string& input, const std::string& kind) {
  const TransitionAtlas atlas = parse_atlas_document(read_json_file(input));
  const CechCochain c = parse_kind(kind) == CochainKind::Atiyah ? atiyah_obstruction(atlas)
                                                                 : normal_extension_obstruction(atlas);
  Report r;
  r.data["cochain"] = cochain_to_json(c);
  const bool cocycle = verify_cocycle(c, atlas);
  r.data["cocycle"] = cocycle;
  r.lines.push_back("kind = " + kind);
  r.lines.push_back(std::string("zero = ") + (c.is_zero() ? "true" : "false"));
  r.lines.push_back(std::string("cocycle on declared triples = ") + (cocycle ? "true" : "false"));
  describe_cochain(r, c);
  return r;
}

Report cmd_verify_splitting(const std::string& input) {
  const json doc = read_json_file(input);
  const TransitionAtlas atlas = parse_atlas_document(doc);
  if (!doc.contains("sigma")) throw Error(ErrorCode::InvalidDocument, "verify-splitting needs a \"sigma\" cochain");
  const CechCochain sigma = parse_cochain(doc.at("sigma"), atlas);
  CechCochain c;
  if (doc.contains("cochain")) {
    c = parse_cochain(doc.at("cochain"), atlas);
  } else {
    c = sigma.kind == CochainKind::Atiyah ? atiyah_obstruction(atlas) : normal_extension_obstruction(atlas);
  }
  const bool ok = verify_splitting(c, sigma, atlas);
  Report r;
  r.data["verified"] = ok;
  r.data["coboundary"] = cochain_to_json(coboundary(sigma, atlas));
  r.lines.push_back(std::string("splitting = ") + (ok ? "verified" : "rejected"));
  r.exit_code = ok ? kExitPass : kExitFail;
  return r;
}

Report cmd_extension_generators(const std::string& input) {
  const json doc = read_json_file(input);
  const TransitionAtlas atlas = parse_atlas_document(doc);
  if (!doc.contains("sigma")) throw Error(ErrorCode::InvalidDocument, "extension-generators needs a \"sigma\" cochain");
  const auto gens = extension_generators(parse_cochain(doc.at("sigma"), atlas), atlas);
  Report r;
  r.data["generators"] = json::object();
  for (const auto& [chart, fields] : gens) {
    json list = json::array();
    for (const auto& f : fields) {
      list.push_back(field_json(f));
      r.lines.push_back(chart + ": " + f.to_string());
    }
    r.data["generators"][chart] = list;
  }
  return r;
}

json form_json(const MeromorphicForm1D& f) {
  return {{"num", f.f.num().to_string()}, {"den", f.f.den().to_string()}, {"text", f.to_string()}};
}

Report cmd_connection_matrix(const std::string& input) {
  const MeromorphicForm1D f = connection_matrix_2d(surface_input(load_field(input)));
  Report r;
  r.data["form"] = form_json(f);
  r.lines.push_back("omega = " + f.to_string());
  return r;
}

Report cmd_bott_form(const std::string& input) {
  const MeromorphicForm1D f = bott_difference_form_2d(surface_input(load_field(input)));
  Report r;
  r.data["form"] = form_json(f);
  r.lines.push_back("bott = " + f.to_string());
  return r;
}

Report cmd_residue(const std::string& input, bool transversal) {
  const SurfaceFieldInput s = surface_input(load_field(input));
  const GaussianRational value = transversal ? transversal_residue(s) : kls_residue(s);
  Report r;
  r.data["residue"] = exact(value);
  r.lines.push_back("residue = " + exact(value));
  return r;
}

Report cmd_oracle(const std::string& input, double radius, int samples) {
  const SurfaceFieldInput s = surface_input(load_field(input));
  const std::complex<double> z = contour_residue_numeric(s, ContourSpec{radius, samples});
  Report r;
  r.data["residue"] = {{"re", round15(z.real())}, {"im", round15(z.imag())}};
  r.data["radius"] = round15(radius);
  r.data["samples"] = samples;
  const double im = round15(z.imag());
  r.lines.push_back("oracle residue = " + format_double(z.real()) + (im < 0 ? " - " : " + ") +
                    format_double(std::abs(im)) + "*i");
  return r;
}

Report cmd_flatness(const std::string& input) {
  const FieldDocument doc = load_field(input);
  const auto fields = document_fields(doc);
  if (fields.size() != 2) throw Error(ErrorCode::InvalidDocument, "flatness needs exactly two \"fields\"");
  const auto curvature = flatness_check(fields[0], fields[1], doc.foliation);
  Report r;
  json rows = json::array();
  bool zero = true;
  for (const auto& row : curvature) {
    json jr = json::array();
    std::string text;
    for (const auto& e : row) {
      jr.push_back(e.to_string());
      text += (text.empty() ? "" : ", ") + e.to_string();
      zero = zero && e.is_zero();
    }
    rows.push_back(jr);
    r.lines.push_back("  [" + text + "]");
  }
  r.lines.insert(r.lines.begin(), std::string("curvature zero = ") + (zero ? "true" : "false"));
  r.data["curvature"] = rows;
  r.data["flat"] = zero;
  r.exit_code = zero ? kExitPass : kExitFail;
  return r;
}

void emit(const Report& r, const std::string& command, bool as_json, std::ostream& out) {
  if (as_json) {
    json doc = r.data;
    doc["command"] = command;
    doc["exit_code"] = r.exit_code;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& line : r.lines) out << line << "\n";
  }
}

}  // namespace

double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", round15(v));
  return buf;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact jet calculus, atlas checks, obstruction cocycles and residues", "foliate"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON report");

  std::string input;
  int degree_bound = 2;
  std::optional<int> extend;
  std::optional<int> split;
  bool adapted = false;
  std::string kind = "atiyah";
  double radius = 0.5;
  int samples = 512;

  std::vector<std::pair<CLI::App*, std::function<Report()>>> commands;
  auto add = [&](const std::string& name, const std::string& help, std::function<Report()> run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input, "Input JSON document")->required();
    commands.emplace_back(sub, std::move(run));
    return sub;
  };
  add("bracket", "Bracket of the two fields of a document", [&] { return cmd_bracket(input); });
  add("apply", "Apply a field to a function", [&] { return cmd_apply(input); });
  add("classify", "Truncate a field and report whether it is logarithmic", [&] { return cmd_classify(input); });
  add("primitive", "Primitive of a closed 1-form", [&] { return cmd_primitive(input); });
  add("involutive", "Degree-bounded involutivity test", [&] { return cmd_involutive(input, degree_bound); })
      ->add_option("--degree-bound", degree_bound, "Total degree of the coefficient ansatz")
      ->check(CLI::NonNegativeNumber);
  auto* check = add("check-atlas", "Adaptedness, extension and k-splitting checks",
                    [&] { return cmd_check_atlas(input, extend, split); });
  check->add_flag("--adapted", adapted, "Check adaptedness (always run)");
  check->add_option("--extend", extend, "Check extendability to order K")->check(CLI::NonNegativeNumber);
  check->add_option("--k-split", split, "Check the K-splitting condition")->check(CLI::NonNegativeNumber);
  add("obstruction", "Atiyah or normal-extension obstruction cochain", [&] { return cmd_obstruction(input, kind); })
      ->add_option("--kind", kind, "atiyah or normal")
      ->check(CLI::IsMember({"atiyah", "normal"}));
  add("verify-splitting", "Check that a degree-0 cochain bounds the obstruction",
      [&] { return cmd_verify_splitting(input); });
  add("extension-generators", "Generators of the extended foliation", [&] { return cmd_extension_generators(input); });
  add("connection-matrix", "Connection form on the normal sheaf of a surface field",
      [&] { return cmd_connection_matrix(input); });
  add("bott-form", "Bott difference form of a surface field", [&] { return cmd_bott_form(input); });
  add("residue", "Exact residue of a tangential surface field", [&] { return cmd_residue(input, false); });
  add("transversal-residue", "Exact residue of a transversal surface field", [&] { return cmd_residue(input, true); });
  auto* oracle = add("oracle-residue", "Residue by numerical contour integration",
                     [&] { return cmd_oracle(input, radius, samples); });
  oracle->add_option("--radius", radius, "Contour radius");
  oracle->add_option("--samples", samples, "Number of trapezoidal samples");
  add("flatness", "Curvature of the universal connection on two fields", [&] { return cmd_flatness(input); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  for (const auto& [sub, run] : commands) {
    if (!sub->parsed()) continue;
    try {
      const Report r = run();
      emit(r, sub->get_name(), as_json, out);
      return r.exit_code;
    } catch (const Error& e) {
      if (as_json) {
        out << json{{"command", sub->get_name()},
                    {"error", {{"code", std::string(code_name(e.code()))}, {"message", e.what()}}},
                    {"exit_code", kExitInput}}
                   .dump(2)
            << "\n";
      }
      err << "error: " << e.what() << "\n";
      return kExitInput;
    }
  }
  return kExitInput;
}

}  // namespace foliate::cli
