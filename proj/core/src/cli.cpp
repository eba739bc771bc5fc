#include "qtoric/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qtoric/constructors.hpp"
#include "qtoric/io.hpp"

namespace qtoric {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  file << text;
}

std::string format_vector(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string format_perm(const std::vector<int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

void print_aut_report(std::ostream& out, const AutReport& report) {
  out << "polytope automorphisms: " << report.poset_auts.size() << "\n";
  out << "pair automorphisms:     " << report.pair_auts.size() << "\n";
  out << "image order:            " << report.image.size() << "\n";
  out << "kernel order:           " << report.kernel.size() << "\n";
  out << "condition trivial:      " << (report.condition_trivial ? "yes" : "no") << "\n";
  if (!report.condition_trivial) {
    for (const auto& f : report.image) {
      if (f.is_identity()) continue;
      out << "non-identity image witness: facet permutation " << format_perm(f.facet_perm) << "\n";
      break;
    }
  }
}

void print_pair(std::ostream& out, const CharPair& cp) {
  for (int f = 0; f < cp.polytope().facet_count(); ++f)
    out << "F" << f << ": lambda = " << format_vector(cp.lambda_of(f).entries()) << "\n";
}

struct ValidateCmd {
  std::string input = "-";
  bool json = false;
};
struct AutCmd {
  std::string input = "-";
  bool json = false;
};
struct ConditionCmd {
  std::string input = "-";
  bool json = false;
};
struct ClassifyCmd {
  std::string input = "-";
  std::string refs = "table1";
  bool json = false;
};
struct SearchCmd {
  std::string input = "-";
  Int bound = 1;
  bool exhaustive = false;
  long long samples = 0;
  std::uint64_t seed = 0;
  long long budget = 1000000;
  int witness_cap = 10;
  bool json = false;
};
struct IsoCmd {
  std::string first;
  std::string second;
  bool json = false;
};
struct ConstructCmd {
  std::string output = "-";
  int simplex_n = 0;
  std::string product_a, product_b;
  std::string cut_input;
  int cut_vertex = 0;
  std::vector<Int> k;
  int m2_n = 0;
};

int do_validate(const ValidateCmd& cmd, std::istream& in, std::ostream& out) {
  PolytopeDocument doc = parse_document(read_input(cmd.input, in));
  Polytope p = polytope_from_document(doc);
  if (!doc.lambda) {
    if (cmd.json)
      out << "{\n  \"valid\": true\n}\n";
    else
      out << "valid polytope: dim " << p.dim() << ", " << p.facet_count() << " facets, "
          << p.vertex_count() << " vertices\n";
    return 0;
  }
  std::vector<CharVector> lambda;
  for (const auto& row : *doc.lambda) lambda.push_back(CharVector::expect_primitive(row));
  NonsingularityReport report = check_nonsingular(p, lambda);
  if (report.ok) {
    if (cmd.json)
      out << "{\n  \"valid\": true\n}\n";
    else
      out << "valid characteristic pair: rank " << p.dim() << ", " << p.facet_count() << " facets\n";
    return 0;
  }
  if (cmd.json) {
    std::string failures;
    for (std::size_t i = 0; i < report.failures.size(); ++i) {
      if (i) failures += ",";
      failures += "\n    {\"vertex\": " + std::to_string(report.failures[i].vertex) +
                  ", \"det\": " + std::to_string(report.failures[i].det) + "}";
    }
    out << "{\n  \"valid\": false,\n  \"failures\": [" << failures << "\n  ]\n}\n";
  } else {
    out << "not a characteristic pair; failing vertices:\n";
    for (const auto& f : report.failures)
      out << "  vertex " << f.vertex << " "
          << format_perm(p.vertex_facets(f.vertex)) << ": det " << f.det << "\n";
  }
  return 2;
}

int do_aut(const AutCmd& cmd, std::istream& in, std::ostream& out) {
  PolytopeDocument doc = parse_document(read_input(cmd.input, in));
  if (!doc.lambda) {
    Polytope p = polytope_from_document(doc);
    auto auts = poset_automorphisms(p);
    if (cmd.json) {
      out << "{\n  \"poset_aut_order\": " << auts.size() << ",\n  \"poset_auts\": [";
      for (std::size_t i = 0; i < auts.size(); ++i) {
        out << (i ? "," : "") << "\n    [";
        for (std::size_t j = 0; j < auts[i].facet_perm.size(); ++j)
          out << (j ? "," : "") << auts[i].facet_perm[j];
        out << "]";
      }
      out << "\n  ]\n}\n";
    } else {
      out << "polytope automorphisms: " << auts.size() << "\n";
      for (const auto& a : auts) out << "  " << format_perm(a.facet_perm) << "\n";
    }
    return 0;
  }
  CharPair cp = pair_from_document(doc);
  AutReport report = pair_automorphisms(cp);
  if (cmd.json)
    out << aut_report_to_json(report);
  else
    print_aut_report(out, report);
  return 0;
}

int do_condition(const ConditionCmd& cmd, std::istream& in, std::ostream& out) {
  CharPair cp = pair_from_document(parse_document(read_input(cmd.input, in)));
  ConditionResult result = check_condition(cp);
  if (cmd.json) {
    out << aut_report_to_json(result.report);
  } else {
    print_pair(out, cp);
    print_aut_report(out, result.report);
  }
  return result.trivial ? 0 : 3;
}

int do_classify(const ClassifyCmd& cmd, std::istream& in, std::ostream& out) {
  CharPair cp = pair_from_document(parse_document(read_input(cmd.input, in)));
  std::vector<std::pair<std::string, Polytope>> refs;
  if (cmd.refs == "table1")
    refs = table1_references(cp.rank());
  else
    refs = parse_refs(read_input(cmd.refs, in));
  FacetTypeReport report = classify_facets(cp, refs);
  if (cmd.json) {
    out << facet_report_to_json(report);
  } else {
    for (const auto& f : report.facets)
      out << "F" << f.facet << ": lambda = " << format_vector(f.lambda.entries()) << "  type = "
          << (f.type.empty() ? "unclassified" : f.type) << "\n";
    out << "histogram:\n";
    for (const auto& [name, count] : report.histogram) out << "  " << name << ": " << count << "\n";
  }
  return 0;
}

int do_search(const SearchCmd& cmd, std::istream& in, std::ostream& out) {
  PolytopeDocument doc = parse_document(read_input(cmd.input, in));
  Polytope p = polytope_from_document(doc);
  SearchOptions opts;
  opts.bound = cmd.bound;
  opts.mode = cmd.exhaustive ? SearchMode::Exhaustive : SearchMode::Random;
  opts.samples = cmd.samples;
  opts.seed = cmd.seed;
  opts.budget = cmd.budget;
  opts.witness_cap = cmd.witness_cap;
  opts.polytope_id = (cmd.input.empty() || cmd.input == "-") ? "stdin" : cmd.input;
  SearchSummary summary = enumerate_characteristic_functions(p, opts);
  if (cmd.json) {
    out << search_summary_to_json(summary);
  } else {
    out << "tested:      " << summary.tested << "\n";
    out << "nonsingular: " << summary.nonsingular << "\n";
    out << "trivial:     " << summary.trivial << "\n";
    out << "(counts are lambda assignments up to sign; no quotient by lattice equivalence)\n";
  }
  return 0;
}

int do_iso(const IsoCmd& cmd, std::istream& in, std::ostream& out) {
  PolytopeDocument da = parse_document(read_input(cmd.first, in));
  PolytopeDocument db = parse_document(read_input(cmd.second, in));
  if (da.lambda && db.lambda) {
    auto found = gl_equivalent(pair_from_document(da), pair_from_document(db));
    if (cmd.json) {
      if (found) {
        out << "{\n  \"equivalent\": true,\n  \"facet_map\": " << "[";
        for (std::size_t i = 0; i < found->facet_map.size(); ++i)
          out << (i ? "," : "") << found->facet_map[i];
        out << "]\n}\n";
      } else {
        out << "{\n  \"equivalent\": false\n}\n";
      }
    } else if (found) {
      out << "equivalent: facet map " << format_perm(found->facet_map) << "\n";
      out << "torus matrix rows:\n";
      for (const auto& row : found->g.rows()) out << "  " << format_vector(row) << "\n";
    } else {
      out << "not equivalent\n";
    }
  } else {
    auto found =
        combinatorial_isomorphism(polytope_from_document(da), polytope_from_document(db));
    if (cmd.json) {
      out << "{\n  \"isomorphic\": " << (found ? "true" : "false") << "\n}\n";
    } else if (found) {
      out << "isomorphic: facet map " << format_perm(found->facet_perm) << "\n";
    } else {
      out << "not isomorphic\n";
    }
  }
  return 0;
}

int do_construct(const ConstructCmd& cmd, const std::string& which, std::istream& in,
                 std::ostream& out) {
  CharPair pair = [&]() {
    if (which == "simplex") return simplex_pair(cmd.simplex_n);
    if (which == "product")
      return product_pair(pair_from_document(parse_document(read_input(cmd.product_a, in))),
                          pair_from_document(parse_document(read_input(cmd.product_b, in))));
    if (which == "vertex-cut")
      return vertex_cut(pair_from_document(parse_document(read_input(cmd.cut_input, in))),
                        cmd.cut_vertex);
    if (which == "bott") return bott_pair(cmd.k);
    return example_m2(cmd.m2_n, cmd.k);
  }();
  write_output(cmd.output, out, serialize_document(to_document(pair)));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"characteristic pairs of quasitoric orbit data"};
  app.set_help_all_flag("--help-all");

  ValidateCmd validate_cmd;
  auto* validate = app.add_subcommand("validate", "check a polytope or pair document");
  validate->add_option("input", validate_cmd.input, "document path, '-' for stdin");
  validate->add_flag("--json", validate_cmd.json, "machine-readable output");

  AutCmd aut_cmd;
  auto* aut = app.add_subcommand("aut", "compute the automorphism groups");
  aut->add_option("input", aut_cmd.input, "document path, '-' for stdin");
  aut->add_flag("--json", aut_cmd.json, "machine-readable output");

  ConditionCmd cond_cmd;
  auto* cond = app.add_subcommand("check-condition",
                                  "decide whether every pair automorphism fixes the polytope");
  cond->add_option("input", cond_cmd.input, "document path, '-' for stdin");
  cond->add_flag("--json", cond_cmd.json, "machine-readable output");

  ConstructCmd construct_cmd;
  auto* construct = app.add_subcommand("construct", "build a characteristic pair document");
  construct->require_subcommand(1);
  auto* simplex = construct->add_subcommand("simplex", "the n-simplex with the standard lambda");
  simplex->add_option("--n", construct_cmd.simplex_n, "dimension")->required();
  auto* product = construct->add_subcommand("product", "product of two pairs");
  product->add_option("first", construct_cmd.product_a, "document path")->required();
  product->add_option("second", construct_cmd.product_b, "document path")->required();
  auto* cut = construct->add_subcommand("vertex-cut", "truncate at a vertex");
  cut->add_option("input", construct_cmd.cut_input, "document path")->required();
  cut->add_option("--vertex", construct_cmd.cut_vertex, "vertex index (canonical order)")->required();
  auto* bott = construct->add_subcommand("bott", "projectivized line-bundle sum over the projective line");
  bott->add_option("--k", construct_cmd.k, "twist degrees, comma separated")
      ->required()
      ->delimiter(',');
  auto* m2 = construct->add_subcommand("m2", "the rank-n blow-up example");
  m2->add_option("--n", construct_cmd.m2_n, "rank")->required();
  m2->add_option("--k", construct_cmd.k, "twist degrees, comma separated")->required()->delimiter(',');
  for (auto* sc : {simplex, product, cut, bott, m2})
    sc->add_option("-o,--output", construct_cmd.output, "output path, '-' for stdout");

  ClassifyCmd classify_cmd;
  auto* classify = app.add_subcommand("classify-facets", "match facets against reference polytopes");
  classify->add_option("input", classify_cmd.input, "document path, '-' for stdin");
  classify->add_option("--refs", classify_cmd.refs, "'table1' or a refs JSON path");
  classify->add_flag("--json", classify_cmd.json, "machine-readable output");

  SearchCmd search_cmd;
  auto* search = app.add_subcommand("search", "sweep characteristic functions over a polytope");
  search->add_option("input", search_cmd.input, "document path, '-' for stdin");
  search->add_option("--bound", search_cmd.bound, "max |entry|")->required();
  auto* exhaustive_flag = search->add_flag("--exhaustive", search_cmd.exhaustive, "try every assignment");
  auto* samples_opt = search->add_option("--samples", search_cmd.samples, "random sample count");
  search->add_option("--seed", search_cmd.seed, "random seed");
  search->add_option("--budget", search_cmd.budget, "exhaustive-mode assignment cap");
  search->add_option("--witness-cap", search_cmd.witness_cap, "witnesses kept per outcome");
  search->add_flag("--json", search_cmd.json, "machine-readable output");
  exhaustive_flag->excludes(samples_opt);

  IsoCmd iso_cmd;
  auto* iso = app.add_subcommand("iso", "compare two documents up to isomorphism/equivalence");
  iso->add_option("first", iso_cmd.first, "document path")->required();
  iso->add_option("second", iso_cmd.second, "document path")->required();
  iso->add_flag("--json", iso_cmd.json, "machine-readable output");

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("qtoric");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) return do_validate(validate_cmd, in, out);
    if (aut->parsed()) return do_aut(aut_cmd, in, out);
    if (cond->parsed()) return do_condition(cond_cmd, in, out);
    if (construct->parsed()) {
      for (auto* sc : construct->get_subcommands())
        return do_construct(construct_cmd, sc->get_name(), in, out);
    }
    if (classify->parsed()) return do_classify(classify_cmd, in, out);
    if (search->parsed()) {
      if (!search_cmd.exhaustive && search_cmd.samples <= 0) {
        err << "search: pass --exhaustive or --samples N\n";
        return 1;
      }
      return do_search(search_cmd, in, out);
    }
    if (iso->parsed()) return do_iso(iso_cmd, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace qtoric
