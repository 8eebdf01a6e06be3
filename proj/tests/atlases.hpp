#pragma once

#include <memory>
#include <string>

#include "foliate/atlas.hpp"
#include "foliate/cli/documents.hpp"
#include "support.hpp"

namespace testing {

inline foliate::TransitionAtlas atlas_from(const std::string& text) {
  return foliate::cli::parse_atlas_document(foliate::cli::json::parse(text));
}

// x' = 2x, y' = y/(1+y): no mixing, every check passes.
inline const char* kProduct = R"J({
  "roles": {"normal": ["x"], "tangential": ["y"], "foliation": ["y"]}, "order": 2, "charts": ["A", "B"],
  "transitions": [{"from": "A", "to": "B", "map": {"x": "2*x", "y": "y/(1+y)"}},
                  {"from": "B", "to": "A", "map": {"x": "x/2", "y": "y/(1-y)"}}]})J";

// x' = x(1+y): adapted to (S, F) but not extendable to first order.
inline const char* kCounter = R"J({
  "roles": {"normal": ["x"], "tangential": ["y"], "foliation": ["y"]}, "order": 2, "charts": ["A", "B"],
  "transitions": [{"from": "A", "to": "B", "map": {"x": "x*(1+y)", "y": "y"}},
                  {"from": "B", "to": "A", "map": {"x": "x/(1+y)", "y": "y"}}]})J";

// x' = x(1+xy), inverse exact modulo I^3.
inline const char* kFirstOrder = R"J({
  "roles": {"normal": ["x"], "tangential": ["y"], "foliation": ["y"]}, "order": 2, "charts": ["A", "B"],
  "transitions": [{"from": "A", "to": "B", "map": {"x": "x*(1+x*y)", "y": "y"}},
                  {"from": "B", "to": "A", "map": {"x": "x - x^2*y", "y": "y"}}]})J";

// y' = y + x^2 y: a 1-splitting that is not a 2-splitting.
inline const char* kSplit = R"J({
  "roles": {"normal": ["x"], "tangential": ["y"], "foliation": ["y"]}, "order": 3, "charts": ["A", "B"],
  "transitions": [{"from": "A", "to": "B", "map": {"x": "x", "y": "y + x^2*y"}},
                  {"from": "B", "to": "A", "map": {"x": "x", "y": "y/(1+x^2)"}}]})J";

// Three charts built from chart 0: x1 = x0(1+y0), y1 = y0; x2 = x1(1+y1^2), y2 = y1/(1+y1).
inline const char* kThreeCharts = R"J({
  "roles": {"normal": ["x"], "tangential": ["y"], "foliation": ["y"]}, "order": 2, "charts": ["0", "1", "2"],
  "transitions": [
    {"from": "0", "to": "1", "map": {"x": "x*(1+y)", "y": "y"}},
    {"from": "1", "to": "0", "map": {"x": "x/(1+y)", "y": "y"}},
    {"from": "1", "to": "2", "map": {"x": "x*(1+y^2)", "y": "y/(1+y)"}},
    {"from": "2", "to": "1", "map": {"x": "x*(1-y)^2/((1-y)^2+y^2)", "y": "y/(1-y)"}},
    {"from": "0", "to": "2", "map": {"x": "x*(1+y)*(1+y^2)", "y": "y/(1+y)"}},
    {"from": "2", "to": "0", "map": {"x": "x*(1-y)^3/((1-y)^2+y^2)", "y": "y/(1-y)"}}],
  "triples": [["0", "1", "2"]]})J";

// Two normal directions mixed by a unipotent matrix, plus a transverse w.
inline const char* kThreeDim = R"J({
  "roles": {"normal": ["x1", "x2"], "tangential": ["y", "w"], "foliation": ["y"]}, "order": 2, "charts": ["A", "B"],
  "transitions": [{"from": "A", "to": "B", "map": {"x1": "x1 + y*x2", "x2": "x2", "y": "y", "w": "w + x1*y"}},
                  {"from": "B", "to": "A", "map": {"x1": "x1 - y*x2", "x2": "x2", "y": "y", "w": "w - (x1 - y*x2)*y"}}]})J";

inline const char* kUnadapted = R"J({
  "roles": {"normal": ["x"], "tangential": ["y"], "foliation": ["y"]}, "charts": ["A", "B"],
  "transitions": [{"from": "A", "to": "B", "map": {"x": "x + y", "y": "y"}},
                  {"from": "B", "to": "A", "map": {"x": "x - y", "y": "y"}}]})J";

// x' = a(y) x, y' = y/(1 + c y) with a(y) = a0 + a1 y, a0 != 0.
inline std::string random_linear_atlas(Rng& rng, Rational& a1_out) {
  Rational a0;
  while (a0.is_zero()) a0 = random_rational(rng, 3, 2);
  const Rational a1 = random_rational(rng, 3, 2);
  const Rational c = random_rational(rng, 2, 2);
  a1_out = a1;
  const std::string a = "(" + a0.to_string() + " + " + a1.to_string() + "*y)";
  const std::string inv_y = "(y/(1 - " + c.to_string() + "*y))";
  const std::string a_back = "(" + a0.to_string() + " + " + a1.to_string() + "*" + inv_y + ")";
  const std::string head =
      R"J({"roles": {"normal": ["x"], "tangential": ["y"], "foliation": ["y"]}, "charts": ["A", "B"], "transitions": [)J";
  const std::string ab = R"J({"from": "A", "to": "B", "map": {"x": ")J" + a + "*x\", \"y\": \"y/(1 + " + c.to_string() + "*y)\"}}";
  const std::string ba = R"J({"from": "B", "to": "A", "map": {"x": "x/)J" + a_back + "\", \"y\": \"" + inv_y + "\"}}";
  return head + ab + ", " + ba + "]}";
}

}  // namespace testing
