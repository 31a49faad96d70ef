// Command-line front end: validation, duals, duality search, reduction,
// expansion, census generation and cross-checking, square graphs, and
// exports.  Exit codes: 0 success/pass, 1 validation or check failure,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sipoly/census.hpp"
#include "sipoly/duality.hpp"
#include "sipoly/expansion.hpp"
#include "sipoly/io.hpp"
#include "sipoly/reduction.hpp"
#include "sipoly/squares.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sipoly;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
  out << text;
}

Polyhedron load_polyhedron(const std::string& path) {
  return Polyhedron::validate(parse_input(read_file(path)));
}

StrongInvolution require_strong_involution(const Polyhedron& p) {
  std::vector<StrongInvolution> sis = strong_involutions(p);
  if (sis.empty())
    throw Error(ErrorKind::InvalidInput, "input polyhedron has no strong involution");
  return sis.front();
}

ordered_json face_list(const Polyhedron& p, FaceId f) {
  ordered_json out = ordered_json::array();
  for (VertexId v : p.face_walk(f)) out.push_back(v);
  return out;
}

int run_check(const std::string& file) {
  Polyhedron p = load_polyhedron(file);
  std::cout << "polyhedron: ok\n";
  std::cout << "vertices: " << p.vertex_count() << "\nedges: " << p.edge_count()
            << "\nfaces: " << p.face_count() << "\n";
  std::cout << "wheel: " << (is_wheel(p) ? "yes" : "no") << "\n";
  return 0;
}

int run_dual(const std::string& file, const std::string& out) {
  Polyhedron p = load_polyhedron(file);
  DualResult d = dual(p);
  ordered_json doc = ordered_json::parse(map_document(d.polyhedron.map()));
  doc["edge_map"] = d.edge_map;
  write_output(out, doc.dump(2) + "\n");
  return 0;
}

int run_dualities(const std::string& file, bool strong_only, const std::string& out) {
  Polyhedron p = load_polyhedron(file);
  ordered_json doc;
  ordered_json list = ordered_json::array();
  if (strong_only) {
    for (const StrongInvolution& tau : strong_involutions(p)) {
      ordered_json images = ordered_json::array();
      for (VertexId v = 0; v < p.vertex_count(); ++v) images.push_back(face_list(p, tau(v)));
      list.push_back(images);
    }
  } else {
    for (const DualityIso& d : find_dualities(p)) {
      ordered_json images = ordered_json::array();
      for (VertexId v = 0; v < p.vertex_count(); ++v) images.push_back(face_list(p, d(v)));
      list.push_back(images);
    }
  }
  doc["count"] = list.size();
  doc[strong_only ? "strong_involutions" : "dualities"] = list;
  write_output(out, doc.dump(2) + "\n");
  return 0;
}

int run_reduce(const std::string& file, bool with_trace, const std::string& out) {
  Polyhedron p = load_polyhedron(file);
  StrongInvolution tau = require_strong_involution(p);
  ReductionTrace trace = reduce_to_wheel(p, tau);
  ordered_json doc;
  doc["steps"] = trace.steps.size();
  doc["terminal_rim"] = trace.terminal_rim;
  if (with_trace) {
    ordered_json steps = ordered_json::array();
    for (const ReductionStepRecord& s : trace.steps) {
      ordered_json step;
      step["contract"] = {s.contracted.first, s.contracted.second};
      step["delete"] = {s.deleted.first, s.deleted.second};
      step["code"] = s.result_code.str();
      steps.push_back(step);
    }
    doc["trace"] = steps;
  }
  write_output(out, doc.dump(2) + "\n");
  return 0;
}

int run_expand(const std::string& file, bool all, const std::string& out) {
  Polyhedron p = load_polyhedron(file);
  StrongInvolution tau = require_strong_involution(p);
  auto results = enumerate_expansions_with_results(p, tau);
  ordered_json doc;
  doc["count"] = results.size();
  ordered_json list = ordered_json::array();
  for (const auto& [move, expansion] : results) {
    ordered_json item;
    item["vertex"] = move.vertex;
    item["arc_start"] = move.arc_start;
    item["arc_len"] = move.arc_len;
    item["diagonal"] = {move.diag_x, move.diag_y};
    item["swap"] = move.swap_assignment;
    item["result"] = ordered_json::parse(map_document(expansion.polyhedron.map()));
    list.push_back(item);
    if (!all) break;
  }
  doc["expansions"] = list;
  write_output(out, doc.dump(2) + "\n");
  return 0;
}

int run_census(int max_v, bool oracle, bool compare, const std::string& out) {
  if (compare) {
    Census expand = si_census_expand(max_v);
    Census filter = si_census_oracle(max_v);
    CensusDiff diff = compare_censuses(expand, filter);
    std::cout << diff.report();
    for (int v = 4; v <= max_v; ++v) {
      auto it = expand.by_v.find(v);
      std::cout << "V=" << v << ": " << (it == expand.by_v.end() ? 0 : it->second.size())
                << " strongly involutive polyhedra\n";
    }
    return diff.empty() ? 0 : 1;
  }
  Census census = oracle ? si_census_oracle(max_v) : si_census_expand(max_v);
  write_output(out, census_to_json(census).dump(2) + "\n");
  return 0;
}

int run_squares(const std::string& file, const std::string& out) {
  Polyhedron p = load_polyhedron(file);
  SquareGraph sq = graph_of_squares(p);
  ordered_json doc = ordered_json::parse(map_document(sq.graph.map()));
  ordered_json tags = ordered_json::array();
  for (int cell = 0; cell < sq.graph.vertex_count(); ++cell) {
    const char* kind = sq.kind(cell) == SquareGraph::CellKind::Vertex ? "v"
                       : sq.kind(cell) == SquareGraph::CellKind::Edge ? "e"
                                                                      : "f";
    tags.push_back(std::string(kind) + std::to_string(sq.source_index(cell)));
  }
  doc["tags"] = tags;
  std::vector<StrongInvolution> sis = strong_involutions(p);
  if (!sis.empty()) {
    CellMap cm = induced_cell_map(p, sis.front(), sq);
    doc["cell_map"] = cm.image;
    doc["fixed_point_free"] =
        is_automorphism(sq, cm) && is_involution(cm) && is_fixed_point_free(sq, cm);
  }
  write_output(out, doc.dump(2) + "\n");
  return 0;
}

int run_export(const std::string& file, const std::string& format, const std::string& out) {
  Polyhedron p = load_polyhedron(file);
  write_output(out, export_polyhedron(p, parse_format(format)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strongly involutive self-dual polyhedra toolkit"};
  app.require_subcommand(1);

  std::string file, out_path, format;
  bool strong_only = false, with_trace = false, expand_all = false;
  bool oracle = false, compare = false;
  int max_v = 0;

  auto* check = app.add_subcommand("check", "validate a map and report counts");
  check->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* dual_cmd = app.add_subcommand("dual", "write the dual polyhedron");
  dual_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  dual_cmd->add_option("-o,--output", out_path);

  auto* dualities = app.add_subcommand("dualities", "list duality isomorphisms");
  dualities->add_option("file", file)->required()->check(CLI::ExistingFile);
  dualities->add_flag("--strong", strong_only, "only strong involutions");
  dualities->add_option("-o,--output", out_path);

  auto* reduce = app.add_subcommand("reduce", "reduce to a wheel by remove-contract steps");
  reduce->add_option("file", file)->required()->check(CLI::ExistingFile);
  reduce->add_flag("--trace", with_trace, "include every step");
  reduce->add_option("-o,--output", out_path);

  auto* expand = app.add_subcommand("expand", "enumerate one-step expansions");
  expand->add_option("file", file)->required()->check(CLI::ExistingFile);
  expand->add_flag("--all", expand_all, "emit every expansion, not just the first");
  expand->add_option("-o,--output", out_path);

  auto* census = app.add_subcommand("census", "strongly involutive census up to a vertex bound");
  census->add_option("--max-vertices", max_v)->required()->check(CLI::Range(4, 1000));
  census->add_flag("--oracle", oracle, "generate-and-filter instead of expansion");
  census->add_flag("--compare", compare, "run both generators and compare");
  census->add_option("-o,--output", out_path);

  auto* squares = app.add_subcommand("squares", "vertex-edge-face incidence graph");
  squares->add_option("file", file)->required()->check(CLI::ExistingFile);
  squares->add_option("-o,--output", out_path);

  auto* export_cmd = app.add_subcommand("export", "write json, dot, or svg");
  export_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  export_cmd->add_option("--format", format)->required();
  export_cmd->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(file);
    if (dual_cmd->parsed()) return run_dual(file, out_path);
    if (dualities->parsed()) return run_dualities(file, strong_only, out_path);
    if (reduce->parsed()) return run_reduce(file, with_trace, out_path);
    if (expand->parsed()) return run_expand(file, expand_all, out_path);
    if (census->parsed()) return run_census(max_v, oracle, compare, out_path);
    if (squares->parsed()) return run_squares(file, out_path);
    if (export_cmd->parsed()) return run_export(file, format, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::UnsupportedFormat ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
