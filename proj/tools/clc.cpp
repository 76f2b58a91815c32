// Command-line front end: graph invariants, exhaustive patch census,
// verification battery, catalog sweep, strip search, and the constructive
// tuple patch.  All reports are deterministic; identical inputs and flags
// produce byte-identical output.
//
// Exit codes: 0 success (findings included), 1 input error, 2 verification
// failure under --strict, 3 resource cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clc/json_io.hpp"

namespace {

struct CommonOpts {
  std::string input;
  std::string out_path;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_input = true) {
  if (needs_input) {
    cmd->add_option("input", opts.input, "graph JSON file")->required();
  }
  cmd->add_option("--out", opts.out_path, "write the report to this file");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw clc::graph_error("cannot write output file: " + out_path);
  f << text;
}

void require_json(const CommonOpts& opts, const std::string& command) {
  if (opts.format != "json") {
    throw clc::graph_error("csv export is not available for '" + command +
                           "'; use --format json");
  }
}

// Rotation precedence: an explicit rotation in the input file wins; otherwise
// use the genus-minimizing rotation (planar whenever one exists).
clc::RotationSystem pick_rotation(const clc::ParsedGraph& pg,
                                  std::vector<std::string>* warnings) {
  if (pg.rotation.has_value()) return *pg.rotation;
  clc::RotationSearch search = clc::planar_rotation(pg.graph);
  if (!search.complete && warnings != nullptr) {
    warnings->push_back(
        "rotation search space too large; using the best rotation found");
  }
  return search.rotation;
}

struct PreparedGraph {
  clc::MultiGraph graph;
  clc::RotationSystem rotation;
  std::vector<std::string> notes;
};

// Optionally contract to the cyclic part, then optionally resolve vertices of
// degree four or more into cubic trees along the rotation.
PreparedGraph prepare(const clc::ParsedGraph& pg, bool to_cyclic_part,
                      bool resolve_cubic) {
  PreparedGraph out{pg.graph, {}, {}};
  std::optional<clc::RotationSystem> rot = pg.rotation;

  if (to_cyclic_part) {
    clc::CyclicPart cp = clc::cyclic_part(pg.graph);
    if (cp.changed) {
      out.graph = cp.graph;
      out.notes.push_back("input contracted to its cyclic part");
      if (rot.has_value()) {
        rot.reset();
        out.notes.push_back(
            "input rotation discarded: it does not transfer to the cyclic part");
      }
    }
  }

  if (!rot.has_value()) {
    clc::RotationSearch search = clc::planar_rotation(out.graph);
    if (!search.complete) {
      out.notes.push_back(
          "rotation search space too large; using the best rotation found");
    }
    rot = search.rotation;
  }
  out.rotation = *rot;

  if (resolve_cubic) {
    clc::ExpansionResult res = clc::cubic_resolution(out.graph, out.rotation);
    if (!res.expansion_edges.empty()) {
      out.graph = res.graph;
      out.rotation = res.rotation;
      std::string ids;
      for (const std::string& id : res.expansion_edges) {
        if (!ids.empty()) ids += ",";
        ids += id;
      }
      out.notes.push_back("cubic resolution added edges: " + ids);
    }
  }
  return out;
}

int cmd_analyze(const CommonOpts& opts, const std::string& basis_mode) {
  require_json(opts, "analyze");
  clc::ParsedGraph pg = clc::load_graph_file(opts.input);
  clc::CyclicPart cp = clc::cyclic_part(pg.graph);

  clc::CycleBasis basis;
  std::vector<std::string> warnings;
  if (basis_mode == "min-c") {
    if (cp.graph.edge_count() <= 10) {
      auto found = clc::min_c_basis(cp.graph);
      basis = found.has_value() ? *found : clc::fundamental_basis(cp.graph);
    } else {
      warnings.push_back(
          "min-c basis search skipped (too many edges); using bfs basis");
      basis = clc::fundamental_basis(cp.graph);
    }
  } else if (basis_mode == "bfs") {
    basis = clc::fundamental_basis(cp.graph);
  } else {
    throw clc::graph_error("unknown basis mode: " + basis_mode);
  }

  clc::HGraph h = clc::build_H(cp.graph, basis);
  uint64_t p = clc::p_of(cp.graph, basis);
  uint64_t bridges = clc::bridge_mask(cp.graph);
  int m_bc = 0;
  for (int e = 0; e < cp.graph.edge_count(); ++e)
    if (!(bridges >> e & 1)) ++m_bc;
  int64_t bound = (int64_t{1} << m_bc) - static_cast<int64_t>(p);

  clc::json rep = clc::analyze_report(pg.graph, cp, basis, basis_mode, h, p, bound);
  if (!warnings.empty()) rep["warnings"] = warnings;
  emit(clc::to_text(rep), opts.out_path);
  return 0;
}

int cmd_census(const CommonOpts& opts, bool resolve_cubic,
               const std::string& basis_mode, int max_mbc, bool strict) {
  clc::ParsedGraph pg = clc::load_graph_file(opts.input);
  PreparedGraph prep = prepare(pg, /*to_cyclic_part=*/false, resolve_cubic);

  clc::VerifyOptions vo;
  vo.basis_mode = basis_mode;
  vo.census.max_mbc = max_mbc;
  clc::VerifyResult vr = clc::verify_all(prep.graph, prep.rotation, vo);
  for (const std::string& note : prep.notes)
    vr.warnings.insert(vr.warnings.begin(), note);

  if (opts.format == "csv") {
    emit(clc::census_csv(vr), opts.out_path);
  } else {
    emit(clc::to_text(clc::census_report(vr, basis_mode)), opts.out_path);
  }
  return (strict && (vr.any_fail() || vr.any_finding())) ? 2 : 0;
}

int cmd_verify(const CommonOpts& opts, bool resolve_cubic,
               const std::string& basis_mode, int max_mbc, bool strict) {
  require_json(opts, "verify");
  clc::ParsedGraph pg = clc::load_graph_file(opts.input);
  PreparedGraph prep = prepare(pg, /*to_cyclic_part=*/true, resolve_cubic);

  clc::VerifyOptions vo;
  vo.basis_mode = basis_mode;
  vo.census.max_mbc = max_mbc;
  clc::VerifyResult vr = clc::verify_all(prep.graph, prep.rotation, vo);
  for (const std::string& note : prep.notes)
    vr.warnings.insert(vr.warnings.begin(), note);

  emit(clc::to_text(clc::verify_report(vr, basis_mode)), opts.out_path);
  return (strict && (vr.any_fail() || vr.any_finding())) ? 2 : 0;
}

int cmd_sweep(const CommonOpts& opts, const clc::CatalogSpec& spec,
              bool list_only, bool strict) {
  if (list_only) {
    require_json(opts, "sweep --list");
    std::vector<clc::MultiGraph> graphs = clc::generate(spec);
    std::string out;
    for (const clc::MultiGraph& g : graphs) {
      out += clc::graph_to_json(g).dump() + "\n";
    }
    emit(out, opts.out_path);
    return 0;
  }
  clc::SweepReport report = clc::sweep(spec);
  if (opts.format == "csv") {
    emit(clc::sweep_csv(report), opts.out_path);
  } else {
    emit(clc::to_text(clc::sweep_report(report)), opts.out_path);
  }
  return (strict && (report.any_fail() || report.checks_finding != 0)) ? 2 : 0;
}

int cmd_strip(const CommonOpts& opts, int max_mbc) {
  require_json(opts, "strip");
  clc::ParsedGraph pg = clc::load_graph_file(opts.input);
  std::vector<std::string> warnings;
  clc::RotationSystem rot = pick_rotation(pg, &warnings);
  clc::StripSearch search = clc::find_strip(pg.graph, rot, max_mbc);
  clc::json rep = clc::strip_report(pg.graph, search);
  if (search.found) {
    clc::Census census = clc::enumerate_patches(pg.graph, rot);
    rep["orientable"] = census.classes[search.counter].orientable;
    rep["surface"] =
        clc::surface_to_json(clc::surface_of_class(census, search.counter));
  }
  if (!warnings.empty()) rep["warnings"] = warnings;
  emit(clc::to_text(rep), opts.out_path);
  return 0;
}

// Legend so tuple indices in the report can be interpreted: every simple
// path of the intersection graph with its basis cycles and carrier edges.
void json_paths_legend(clc::json& rep, const clc::MultiGraph& g,
                       const clc::CycleBasis& basis, const clc::HGraph& h,
                       const std::vector<clc::HPath>& paths) {
  clc::json cycles = clc::json::array();
  for (const clc::EdgeSet& cyc : basis.cycles)
    cycles.push_back(clc::edge_ids_of(g, cyc));
  rep["basis_cycles"] = std::move(cycles);
  clc::json legend = clc::json::array();
  for (size_t i = 0; i < paths.size(); ++i) {
    clc::json entry;
    entry["index"] = i;
    entry["cycles"] = paths[i].vertices;
    clc::json carriers = clc::json::array();
    for (int e : paths[i].edges) carriers.push_back(h.edges[e].carrier);
    entry["carriers"] = std::move(carriers);
    legend.push_back(std::move(entry));
  }
  rep["paths"] = std::move(legend);
}

int cmd_tuple_patch(const CommonOpts& opts, bool resolve_cubic,
                    const std::string& basis_mode, int max_mbc,
                    const std::string& paths_json) {
  require_json(opts, "tuple-patch");
  clc::ParsedGraph pg = clc::load_graph_file(opts.input);
  PreparedGraph prep = prepare(pg, /*to_cyclic_part=*/true, resolve_cubic);

  clc::CycleBasis basis;
  if (basis_mode == "min-c" && prep.graph.edge_count() <= 10) {
    auto found = clc::min_c_basis(prep.graph);
    basis = found.has_value() ? *found : clc::fundamental_basis(prep.graph);
  } else if (basis_mode == "min-c" || basis_mode == "bfs") {
    basis = clc::fundamental_basis(prep.graph);
  } else {
    throw clc::graph_error("unknown basis mode: " + basis_mode);
  }

  clc::HGraph h = clc::build_H(prep.graph, basis);
  std::vector<clc::HPath> paths = clc::simple_paths(h);

  std::vector<std::vector<int>> tuples;
  if (paths_json.empty()) {
    tuples = clc::disjoint_tuples(paths);
  } else {
    clc::json doc;
    try {
      doc = clc::json::parse(paths_json);
    } catch (const clc::json::parse_error& e) {
      throw clc::graph_error(std::string("--paths is not valid JSON: ") + e.what());
    }
    if (!doc.is_array())
      throw clc::graph_error("--paths must be a JSON array of path indices");
    std::vector<int> tuple;
    for (const clc::json& v : doc) {
      if (!v.is_number_integer())
        throw clc::graph_error("--paths entries must be integers");
      int idx = v.get<int>();
      if (idx < 0 || idx >= static_cast<int>(paths.size()))
        throw clc::graph_error("--paths index " + std::to_string(idx) +
                               " out of range (the intersection graph has " +
                               std::to_string(paths.size()) + " simple paths)");
      tuple.push_back(idx);
    }
    tuples.push_back(std::move(tuple));
  }

  std::vector<clc::TuplePatchRecord> records;
  records.reserve(tuples.size());
  for (const std::vector<int>& tuple : tuples) {
    records.push_back(clc::build_patch_from_tuple(prep.graph, prep.rotation,
                                                  basis, h, paths, tuple,
                                                  max_mbc));
  }

  clc::json rep = clc::tuple_patch_report(prep.graph, records);
  json_paths_legend(rep, prep.graph, basis, h, paths);
  if (!prep.notes.empty()) rep["warnings"] = prep.notes;
  emit(clc::to_text(rep), opts.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "clc: patches and strips on multigraphs as rotation systems with edge "
      "twists — census, verification battery, and catalog sweep"};
  app.require_subcommand(1);

  CommonOpts analyze_opts, census_opts, verify_opts, sweep_opts, strip_opts,
      tuple_opts;
  std::string analyze_basis = "bfs", census_basis = "bfs", verify_basis = "bfs",
              tuple_basis = "bfs";
  bool census_resolve = false, verify_resolve = false, tuple_resolve = false;
  bool verify_strict = false, census_strict = false, sweep_strict = false;
  int census_mbc = 24, verify_mbc = 24, strip_mbc = 24, tuple_mbc = 24;
  std::string tuple_paths;
  clc::CatalogSpec spec;
  bool sweep_no_loops = false, sweep_list = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "graph invariants: q, cyclic part, basis, intersection graph, "
                 "p, c, and the strip-count bound");
  add_common(analyze, analyze_opts);
  analyze->add_option("--basis", analyze_basis, "cycle basis mode")
      ->check(CLI::IsMember({"bfs", "min-c"}));

  CLI::App* census = app.add_subcommand(
      "census", "enumerate all twist classes, classify strips and surfaces, "
                "and run the verification battery");
  add_common(census, census_opts);
  census->add_flag("--resolve-cubic", census_resolve,
                   "expand vertices of degree 4+ into cubic trees first");
  census->add_option("--basis", census_basis, "cycle basis mode")
      ->check(CLI::IsMember({"bfs", "min-c"}));
  census->add_option("--max-mbc", census_mbc,
                     "refuse instances with more non-bridge edges than this");
  census->add_flag("--strict", census_strict,
                   "exit 2 if any check fails");

  CLI::App* verify = app.add_subcommand(
      "verify", "run every check on the input's cyclic part");
  add_common(verify, verify_opts);
  verify->add_flag("--resolve-cubic", verify_resolve,
                   "expand vertices of degree 4+ into cubic trees first");
  verify->add_option("--basis", verify_basis, "cycle basis mode")
      ->check(CLI::IsMember({"bfs", "min-c"}));
  verify->add_option("--max-mbc", verify_mbc,
                     "refuse instances with more non-bridge edges than this");
  verify->add_flag("--strict", verify_strict, "exit 2 if any check fails");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "generate the graph catalog and run the battery over it");
  add_common(sweep, sweep_opts, /*needs_input=*/false);
  sweep->add_option("--max-edges", spec.max_edges, "largest edge count")
      ->required();
  sweep->add_flag("--cubic", spec.cubic_only, "3-regular graphs only");
  sweep->add_flag("--bridgeless", spec.bridgeless_only, "bridgeless graphs only");
  sweep->add_flag("--no-loops", sweep_no_loops, "exclude loop edges");
  sweep->add_flag("--include-degree-two", spec.include_degree_two_cyclic,
                  "also emit the single loop and the k-cycles");
  sweep->add_flag("--list", sweep_list,
                  "emit the catalog as JSONL instead of sweeping it");
  sweep->add_flag("--strict", sweep_strict, "exit 2 if any check fails");

  CLI::App* strip = app.add_subcommand(
      "strip", "find the first twist vector whose patch is a strip");
  add_common(strip, strip_opts);
  strip->add_option("--max-mbc", strip_mbc,
                    "refuse instances with more non-bridge edges than this");

  CLI::App* tuple = app.add_subcommand(
      "tuple-patch", "build the patch with b = k + 1 from a tuple of disjoint "
                     "paths in the intersection graph");
  add_common(tuple, tuple_opts);
  tuple->add_flag("--resolve-cubic", tuple_resolve,
                  "expand vertices of degree 4+ into cubic trees first");
  tuple->add_option("--basis", tuple_basis, "cycle basis mode")
      ->check(CLI::IsMember({"bfs", "min-c"}));
  tuple->add_option("--max-mbc", tuple_mbc,
                    "refuse instances with more non-bridge edges than this");
  tuple->add_option("--paths", tuple_paths,
                    "JSON array of path indices forming one tuple "
                    "(default: every tuple of pairwise disjoint paths)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(analyze_opts, analyze_basis);
    if (app.got_subcommand(census))
      return cmd_census(census_opts, census_resolve, census_basis, census_mbc,
                        census_strict);
    if (app.got_subcommand(verify))
      return cmd_verify(verify_opts, verify_resolve, verify_basis, verify_mbc,
                        verify_strict);
    if (app.got_subcommand(sweep)) {
      spec.allow_loops = !sweep_no_loops;
      return cmd_sweep(sweep_opts, spec, sweep_list, sweep_strict);
    }
    if (app.got_subcommand(strip)) return cmd_strip(strip_opts, strip_mbc);
    if (app.got_subcommand(tuple))
      return cmd_tuple_patch(tuple_opts, tuple_resolve, tuple_basis, tuple_mbc,
                             tuple_paths);
  } catch (const clc::resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const clc::graph_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
