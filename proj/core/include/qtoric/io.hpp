#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/char_pair.hpp"
#include "qtoric/explorer.hpp"
#include "qtoric/symmetry.hpp"

namespace qtoric {

/// The on-disk JSON form of a polytope, optionally with lambda values (in
/// which case the document encodes a characteristic pair).
struct PolytopeDocument {
  std::string schema_version = "1";
  int dim = 0;
  int facet_count = 0;  // derived: facet_names/lambda size, else max index + 1
  std::optional<std::vector<std::string>> facet_names;
  std::vector<std::vector<int>> vertices;
  std::optional<std::vector<std::vector<Int>>> lambda;

  friend bool operator==(const PolytopeDocument& a, const PolytopeDocument& b) {
    return a.schema_version == b.schema_version && a.dim == b.dim && a.facet_count == b.facet_count &&
           a.facet_names == b.facet_names && a.vertices == b.vertices && a.lambda == b.lambda;
  }
};

/// Parses and schema-checks a document. Malformed JSON raises SyntaxError;
/// structural problems raise SchemaError with a JSON-pointer-style path.
PolytopeDocument parse_document(const std::string& text);

/// Deterministic serialization (sorted keys, two-space indent).
std::string serialize_document(const PolytopeDocument& doc);

PolytopeDocument to_document(const Polytope& p);
PolytopeDocument to_document(const CharPair& cp);

Polytope polytope_from_document(const PolytopeDocument& doc);
CharPair pair_from_document(const PolytopeDocument& doc);  // SchemaError when lambda is absent

/// Named reference polytopes: {"refs": [{"name": ..., "polytope": {...}}]}.
std::vector<std::pair<std::string, Polytope>> parse_refs(const std::string& text);
std::string serialize_refs(const std::vector<std::pair<std::string, Polytope>>& refs);

// Machine-readable reports with stable key order and sorted group elements.
std::string aut_report_to_json(const AutReport& report);
std::string facet_report_to_json(const FacetTypeReport& report);
std::string search_summary_to_json(const SearchSummary& summary);

}  // namespace qtoric
