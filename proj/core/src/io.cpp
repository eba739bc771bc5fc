#include "qtoric/io.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

namespace qtoric {

using nlohmann::json;

namespace {

constexpr Int kEntryLimit = Int{1} << 31;  // parsed lambda entries stay far from overflow

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(Errc::SchemaError, "at " + path + ": " + what);
}

int require_int(const json& j, const std::string& path, long long lo, long long hi) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi) schema_error(path, "value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

PolytopeDocument document_from_json(const json& j, const std::string& base) {
  if (!j.is_object()) schema_error(base.empty() ? "/" : base, "expected an object");
  PolytopeDocument doc;

  if (j.contains("schema_version")) {
    const json& sv = j.at("schema_version");
    if (!sv.is_string()) schema_error(base + "/schema_version", "expected a string");
    doc.schema_version = sv.get<std::string>();
    if (doc.schema_version != "1")
      schema_error(base + "/schema_version", "unsupported version '" + doc.schema_version + "'");
  }

  if (!j.contains("dim")) schema_error(base + "/dim", "missing");
  doc.dim = require_int(j.at("dim"), base + "/dim", 1, 30);

  if (!j.contains("vertices")) schema_error(base + "/vertices", "missing");
  const json& verts = j.at("vertices");
  if (!verts.is_array()) schema_error(base + "/vertices", "expected an array");

  if (j.contains("facet_names")) {
    const json& names = j.at("facet_names");
    if (!names.is_array()) schema_error(base + "/facet_names", "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!names[i].is_string())
        schema_error(base + "/facet_names/" + std::to_string(i), "expected a string");
      out.push_back(names[i].get<std::string>());
    }
    doc.facet_names = std::move(out);
  }

  int max_index = -1;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::string vpath = base + "/vertices/" + std::to_string(i);
    if (!verts[i].is_array()) schema_error(vpath, "expected an array of facet indices");
    std::vector<int> v;
    for (std::size_t kidx = 0; kidx < verts[i].size(); ++kidx) {
      int f = require_int(verts[i][kidx], vpath + "/" + std::to_string(kidx), 0,
                          std::numeric_limits<int>::max());
      max_index = std::max(max_index, f);
      v.push_back(f);
    }
    doc.vertices.push_back(std::move(v));
  }

  if (j.contains("lambda")) {
    const json& lam = j.at("lambda");
    if (!lam.is_array()) schema_error(base + "/lambda", "expected an array");
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < lam.size(); ++i) {
      std::string lpath = base + "/lambda/" + std::to_string(i);
      if (!lam[i].is_array()) schema_error(lpath, "expected an array of integers");
      if (static_cast<int>(lam[i].size()) != doc.dim)
        schema_error(lpath, "length " + std::to_string(lam[i].size()) + " differs from dim " +
                                std::to_string(doc.dim));
      std::vector<Int> row;
      for (std::size_t kidx = 0; kidx < lam[i].size(); ++kidx) {
        std::string epath = lpath + "/" + std::to_string(kidx);
        if (!lam[i][kidx].is_number_integer()) schema_error(epath, "expected an integer");
        long long v = lam[i][kidx].get<long long>();
        if (v <= -kEntryLimit || v >= kEntryLimit) schema_error(epath, "entry magnitude too large");
        row.push_back(v);
      }
      rows.push_back(std::move(row));
    }
    doc.lambda = std::move(rows);
  }

  if (doc.facet_names && doc.lambda && doc.facet_names->size() != doc.lambda->size())
    schema_error(base + "/lambda", "count " + std::to_string(doc.lambda->size()) +
                                       " differs from facet_names count " +
                                       std::to_string(doc.facet_names->size()));
  if (doc.facet_names)
    doc.facet_count = static_cast<int>(doc.facet_names->size());
  else if (doc.lambda)
    doc.facet_count = static_cast<int>(doc.lambda->size());
  else
    doc.facet_count = max_index + 1;
  if (max_index >= doc.facet_count)
    schema_error(base + "/vertices", "facet index " + std::to_string(max_index) +
                                         " exceeds facet count " + std::to_string(doc.facet_count));
  return doc;
}

json document_to_json(const PolytopeDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["dim"] = doc.dim;
  if (doc.facet_names) j["facet_names"] = *doc.facet_names;
  j["vertices"] = doc.vertices;
  if (doc.lambda) j["lambda"] = *doc.lambda;
  return j;
}

json matrix_to_json(const IntMatrix& m) { return json(m.rows()); }

json lambda_list_to_json(const std::vector<CharVector>& lambda) {
  json arr = json::array();
  for (const auto& v : lambda) arr.push_back(v.entries());
  return arr;
}

}  // namespace

PolytopeDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::SyntaxError, e.what());
  }
  return document_from_json(j, "");
}

std::string serialize_document(const PolytopeDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

PolytopeDocument to_document(const Polytope& p) {
  PolytopeDocument doc;
  doc.dim = p.dim();
  doc.facet_count = p.facet_count();
  doc.vertices = p.vertices();
  return doc;
}

PolytopeDocument to_document(const CharPair& cp) {
  PolytopeDocument doc = to_document(cp.polytope());
  std::vector<std::vector<Int>> rows;
  for (const auto& v : cp.lambda()) rows.push_back(v.entries());
  doc.lambda = std::move(rows);
  return doc;
}

Polytope polytope_from_document(const PolytopeDocument& doc) {
  PolytopeData data;
  data.dim = doc.dim;
  data.facet_count = doc.facet_count;
  data.vertices = doc.vertices;
  return Polytope::checked(data);
}

CharPair pair_from_document(const PolytopeDocument& doc) {
  if (!doc.lambda) throw Error(Errc::SchemaError, "at /lambda: missing (document has no lambda values)");
  return CharPair::checked(polytope_from_document(doc), *doc.lambda);
}

std::vector<std::pair<std::string, Polytope>> parse_refs(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::SyntaxError, e.what());
  }
  if (!j.is_object() || !j.contains("refs")) schema_error("/refs", "missing");
  const json& refs = j.at("refs");
  if (!refs.is_array()) schema_error("/refs", "expected an array");
  std::vector<std::pair<std::string, Polytope>> out;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    std::string path = "/refs/" + std::to_string(i);
    if (!refs[i].is_object()) schema_error(path, "expected an object");
    if (!refs[i].contains("name") || !refs[i].at("name").is_string())
      schema_error(path + "/name", "expected a string");
    if (!refs[i].contains("polytope")) schema_error(path + "/polytope", "missing");
    PolytopeDocument doc = document_from_json(refs[i].at("polytope"), path + "/polytope");
    out.emplace_back(refs[i].at("name").get<std::string>(), polytope_from_document(doc));
  }
  return out;
}

std::string serialize_refs(const std::vector<std::pair<std::string, Polytope>>& refs) {
  json arr = json::array();
  for (const auto& [name, p] : refs) {
    json entry;
    entry["name"] = name;
    entry["polytope"] = document_to_json(to_document(p));
    arr.push_back(std::move(entry));
  }
  json j;
  j["refs"] = std::move(arr);
  j["schema_version"] = "1";
  return j.dump(2) + "\n";
}

std::string aut_report_to_json(const AutReport& report) {
  json j;
  j["condition_trivial"] = report.condition_trivial;
  j["pair_aut_order"] = report.pair_auts.size();
  j["poset_aut_order"] = report.poset_auts.size();
  j["image_order"] = report.image.size();
  j["kernel_order"] = report.kernel.size();

  json pair_auts = json::array();
  for (const auto& a : report.pair_auts) {
    json e;
    e["facet_perm"] = a.f.facet_perm;
    e["matrix"] = matrix_to_json(a.g);
    pair_auts.push_back(std::move(e));
  }
  j["pair_auts"] = std::move(pair_auts);

  json image = json::array();
  for (const auto& f : report.image) image.push_back(f.facet_perm);
  j["image"] = std::move(image);

  json kernel = json::array();
  for (const auto& a : report.kernel) kernel.push_back(matrix_to_json(a.g));
  j["kernel"] = std::move(kernel);

  json poset = json::array();
  for (const auto& f : report.poset_auts) poset.push_back(f.facet_perm);
  j["poset_auts"] = std::move(poset);
  return j.dump(2) + "\n";
}

std::string facet_report_to_json(const FacetTypeReport& report) {
  json facets = json::array();
  for (const auto& f : report.facets) {
    json e;
    e["facet"] = f.facet;
    e["lambda"] = f.lambda.entries();
    if (f.type.empty())
      e["type"] = nullptr;
    else
      e["type"] = f.type;
    facets.push_back(std::move(e));
  }
  json j;
  j["facets"] = std::move(facets);
  j["histogram"] = report.histogram;
  return j.dump(2) + "\n";
}

std::string search_summary_to_json(const SearchSummary& summary) {
  json j;
  j["counting"] = "lambda assignments up to sign; no quotient by lattice equivalence";
  j["polytope_id"] = summary.polytope_id;
  j["bound"] = summary.bound;
  j["mode"] = summary.mode == SearchMode::Exhaustive ? "exhaustive" : "random";
  if (summary.mode == SearchMode::Random) {
    j["samples"] = summary.samples;
    j["seed"] = summary.seed;
  }
  j["tested"] = summary.tested;
  j["nonsingular"] = summary.nonsingular;
  j["trivial"] = summary.trivial;
  j["witness_cap"] = summary.witness_cap;
  j["witnesses_trivial"] = json::array();
  for (const auto& w : summary.witnesses_trivial) j["witnesses_trivial"].push_back(lambda_list_to_json(w));
  j["witnesses_nontrivial"] = json::array();
  for (const auto& w : summary.witnesses_nontrivial)
    j["witnesses_nontrivial"].push_back(lambda_list_to_json(w));
  return j.dump(2) + "\n";
}

}  // namespace qtoric
