#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "foliate/atlas.hpp"
#include "foliate/cech.hpp"
#include "foliate/jet.hpp"
#include "foliate/residue.hpp"

namespace foliate::cli {

using nlohmann::json;

/// {"variables": {"normal", "tangential", "foliation"}, "order", "mode",
///  "components": {var: expr}, "fields": [{var: expr}], "function": expr,
///  "form": {var: expr}}; everything past "variables" is optional.
struct FieldDocument {
  IdealSpec ideal;
  VarList foliation;
  SurfaceMode mode = SurfaceMode::Tangential;
  std::optional<std::map<std::string, MultiPoly>> components;
  std::vector<std::map<std::string, MultiPoly>> fields;
  std::optional<MultiPoly> function;
  std::map<std::string, MultiPoly> form;
};

json read_json_file(const std::filesystem::path& path);

FieldDocument parse_field_document(const json& doc);
/// The single field of a document: "components", else the first of "fields".
VectorFieldJet document_field(const FieldDocument& doc);
std::vector<VectorFieldJet> document_fields(const FieldDocument& doc);
/// A and B of a document with one normal and one tangential variable.
SurfaceFieldInput surface_input(const FieldDocument& doc);

/// {"roles": {"normal", "tangential", "foliation"}, "order", "charts",
///  "transitions": [{"from", "to", "map": {var: expr}}], "overlaps", "triples"}.
TransitionAtlas parse_atlas_document(const json& doc);

/// {"kind": "atiyah" | "normal", "degree": 0 | 1, "components": {key: [expr, ...]}}
/// with keys "A" (degree 0) or "A|B" (degree 1) and entries in row-major order.
CechCochain parse_cochain(const json& doc, const TransitionAtlas& atlas);
json cochain_to_json(const CechCochain& c);
std::string pair_key(const ChartPair& p);

}  // namespace foliate::cli
