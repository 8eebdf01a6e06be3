#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "foliate/cli/cli.hpp"
#include "foliate/cli/documents.hpp"
#include "foliate/error.hpp"

using namespace foliate;
using foliate::cli::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FOLIATE_TEST_DATA) + "/" + name; }

ErrorCode document_error(const std::string& text) {
  try {
    cli::parse_field_document(json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("field documents") {
  const cli::FieldDocument doc = cli::parse_field_document(json::parse(
      R"J({"variables": {"normal": ["x"], "tangential": ["y", "z"], "foliation": ["y"]}, "order": 2,
          "components": {"x": "x*y", "z": "1"}, "function": "x + z"})J"));
  CHECK(doc.ideal.order() == 2);
  CHECK(doc.foliation == VarList{"y"});
  CHECK(cli::document_field(doc).to_string() == "x*y*d/dx + d/dz");
  CHECK(document_error(R"J({"variables": {"normal": ["x"]}})J") == ErrorCode::InvalidDocument);
  CHECK(document_error(R"J({"variables": {"normal": ["x"], "tangential": ["y"], "foliation": ["q"]}})J") ==
        ErrorCode::InvalidDocument);
  CHECK(document_error(R"J({"variables": {"normal": ["x"], "tangential": ["i"]}})J") == ErrorCode::InvalidDocument);
  CHECK(document_error(R"J({"variables": {"normal": ["x"], "tangential": ["y"]}, "components": {"q": "1"}})J") ==
        ErrorCode::UnknownVariable);
  CHECK(document_error(R"J({"variables": {"normal": ["x"], "tangential": ["y"]}, "order": -1})J") ==
        ErrorCode::InvalidDocument);
}

TEST_CASE("surface documents rename their variables") {
  const cli::FieldDocument doc = cli::parse_field_document(
      json::parse(R"J({"variables": {"normal": ["u"], "tangential": ["t"]}, "components": {"u": "u*t", "t": "t^2"}})J"));
  const SurfaceFieldInput in = cli::surface_input(doc);
  CHECK(in.a.to_string() == "x*y");
  CHECK(in.b.to_string() == "y^2");
}

TEST_CASE("cochain documents round trip") {
  const TransitionAtlas a = cli::parse_atlas_document(json::parse(
      R"J({"roles": {"normal": ["x"], "tangential": ["y"], "foliation": ["y"]}, "charts": ["A", "B"],
          "transitions": [{"from": "A", "to": "B", "map": {"x": "x*(1+y)", "y": "y"}},
                          {"from": "B", "to": "A", "map": {"x": "x/(1+y)", "y": "y"}}]})J"));
  const CechCochain c = cli::parse_cochain(
      json::parse(R"J({"kind": "normal", "degree": 0, "components": {"B": ["-v_x/(1+y)"]}})J"), a);
  const json j = cli::cochain_to_json(c);
  CHECK(j["components"]["B"][0] == "-v_x/(y + 1)");
  CHECK(cli::cochain_to_json(cli::parse_cochain(j, a)) == j);
  CHECK_THROWS_AS(cli::parse_cochain(json::parse(R"J({"kind": "atiyah", "degree": 1, "components": {"B|A": ["1"]}})J"), a),
                  Error);
  CHECK_THROWS_AS(cli::parse_cochain(json::parse(R"J({"kind": "atiyah", "degree": 1, "components": {"A|B": []}})J"), a),
                  Error);
}

TEST_CASE("exit codes") {
  CHECK(run({"residue", "--input", data("residue_xy.json")}).code == 0);
  CHECK(run({"check-atlas", "--input", data("atlas_counter.json"), "--extend", "1"}).code == 1);
  CHECK(run({"involutive", "--input", data("involutive_open.json")}).code == 1);
  CHECK(run({"residue", "--input", data("missing.json")}).code == 2);
  CHECK(run({"residue"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"obstruction", "--input", data("atlas_counter.json"), "--kind", "bogus"}).code == 2);
  CHECK(run({"connection-matrix", "--input", data("transversal.json")}).code == 2);
}

TEST_CASE("json reports") {
  const Run r = run({"--json", "residue", "--input", data("residue_log.json")});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["residue"] == "4");
  CHECK(j["command"] == "residue");
  const Run e = run({"--json", "residue", "--input", data("transversal.json")});
  CHECK(e.code == 2);
  CHECK(json::parse(e.out)["error"]["code"] == "InvalidArgument");
  const Run o = run({"--json", "oracle-residue", "--input", data("residue_log.json"), "--samples", "64"});
  CHECK(std::abs(json::parse(o.out)["residue"]["re"].get<double>() - 4.0) < 1e-12);
}

TEST_CASE("doubles print with fifteen significant digits") {
  CHECK(cli::format_double(0.1 + 0.2) == "0.3");
  CHECK(cli::format_double(1.0 / 3.0) == "0.333333333333333");
  CHECK(cli::format_double(-0.0) == "0");
  CHECK(cli::round15(2.0000000000000004) == 2.0);
}

TEST_CASE("residue and oracle-residue commands agree") {
  for (const char* name : {"residue_xy.json", "residue_log.json"}) {
    const Run exact = run({"--json", "residue", "--input", data(name)});
    const Run numeric = run({"--json", "oracle-residue", "--input", data(name), "--radius", "0.5", "--samples", "512"});
    REQUIRE(exact.code == 0);
    REQUIRE(numeric.code == 0);
    const double value = std::stod(json::parse(exact.out)["residue"].get<std::string>());
    CHECK(std::abs(json::parse(numeric.out)["residue"]["re"].get<double>() - value) < 1e-8);
  }
  const Run exact = run({"--json", "transversal-residue", "--input", data("transversal.json")});
  const Run numeric = run({"--json", "oracle-residue", "--input", data("transversal.json")});
  CHECK(std::abs(json::parse(numeric.out)["residue"]["re"].get<double>() -
                 std::stod(json::parse(exact.out)["residue"].get<std::string>())) < 1e-8);
}
