#pragma once
// JSON input (graph documents, optionally carrying a rotation system) and the
// serializers for every report the command-line tool emits.  Reports are
// fully deterministic: field order is fixed, nothing time- or host-dependent
// is ever written, and repeated runs produce byte-identical output.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clc/catalog.hpp"
#include "clc/census.hpp"
#include "clc/cycle_space.hpp"
#include "clc/intersection.hpp"
#include "clc/multigraph.hpp"
#include "clc/ribbon.hpp"

namespace clc {

using json = nlohmann::ordered_json;

// ----- graph input -----

struct ParsedGraph {
  MultiGraph graph;
  std::optional<RotationSystem> rotation;
};

// Parse a graph document:
//   {"name": str, "vertices": [str],
//    "edges": [{"id": str, "ends": [str, str]}],
//    "rotations": {vertex: [[edge id, end index], ...]}?,
//    "allow_degree_two": bool?}
// Every malformation maps to graph_error with a message naming the offending
// field; the caller translates those into the input-error exit code.
inline ParsedGraph parse_graph(const json& doc) {
  if (!doc.is_object()) throw graph_error("graph document must be a JSON object");

  std::string name = "graph";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw graph_error("'name' must be a string");
    name = doc["name"].get<std::string>();
  }

  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw graph_error("'vertices' must be an array of vertex ids");
  std::vector<std::string> vertices;
  for (const json& v : doc["vertices"]) {
    if (!v.is_string()) throw graph_error("'vertices' entries must be strings");
    vertices.push_back(v.get<std::string>());
  }

  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw graph_error("'edges' must be an array of {id, ends} objects");
  std::vector<EdgeSpec> edges;
  for (const json& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e["id"].is_string())
      throw graph_error("every edge needs a string 'id'");
    if (!e.contains("ends") || !e["ends"].is_array() || e["ends"].size() != 2 ||
        !e["ends"][0].is_string() || !e["ends"][1].is_string())
      throw graph_error("edge '" + e["id"].get<std::string>() +
                        "': 'ends' must be [vertex, vertex]");
    edges.push_back({e["id"].get<std::string>(),
                     e["ends"][0].get<std::string>(),
                     e["ends"][1].get<std::string>()});
  }

  bool allow_degree_two = false;
  if (doc.contains("allow_degree_two")) {
    if (!doc["allow_degree_two"].is_boolean())
      throw graph_error("'allow_degree_two' must be a boolean");
    allow_degree_two = doc["allow_degree_two"].get<bool>();
  }

  ParsedGraph out{MultiGraph::create(name, vertices, edges, allow_degree_two),
                  std::nullopt};

  if (doc.contains("rotations")) {
    const json& rots = doc["rotations"];
    if (!rots.is_object())
      throw graph_error("'rotations' must map vertex ids to dart lists");
    RotationSystem rot;
    rot.at.resize(static_cast<size_t>(out.graph.vertex_count()));
    std::vector<bool> seen(static_cast<size_t>(out.graph.vertex_count()), false);
    for (const auto& [vid, darts] : rots.items()) {
      int v = out.graph.vertex_index(vid);  // throws on unknown vertex
      if (!darts.is_array())
        throw graph_error("rotation at '" + vid + "' must be an array");
      for (const json& d : darts) {
        if (!d.is_array() || d.size() != 2 || !d[0].is_string() ||
            !d[1].is_number_integer())
          throw graph_error("rotation at '" + vid +
                            "': darts are [edge id, end index]");
        int end = d[1].get<int>();
        if (end != 0 && end != 1)
          throw graph_error("rotation at '" + vid + "': end index must be 0 or 1");
        rot.at[static_cast<size_t>(v)].push_back(
            {out.graph.edge_index(d[0].get<std::string>()), end});
      }
      seen[static_cast<size_t>(v)] = true;
    }
    for (int v = 0; v < out.graph.vertex_count(); ++v) {
      if (!seen[static_cast<size_t>(v)])
        throw graph_error("rotation missing vertex '" + out.graph.vertex_id(v) + "'");
    }
    validate_rotation(out.graph, rot);  // exact dart-set check per vertex
    out.rotation = std::move(rot);
  }
  return out;
}

inline ParsedGraph parse_graph_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw graph_error(std::string("malformed JSON: ") + e.what());
  }
  return parse_graph(doc);
}

inline ParsedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw graph_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

// ----- graph output -----

inline json rotation_to_json(const MultiGraph& g, const RotationSystem& rot) {
  json out = json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json darts = json::array();
    for (const Dart& d : rot.at[static_cast<size_t>(v)]) {
      darts.push_back(json::array({g.edge(d.edge).id, d.end}));
    }
    out[g.vertex_id(v)] = std::move(darts);
  }
  return out;
}

inline json graph_to_json(const MultiGraph& g,
                          const RotationSystem* rot = nullptr) {
  json out;
  out["name"] = g.name();
  out["vertices"] = g.vertex_ids();
  json edges = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    edges.push_back(json{{"id", ed.id},
                         {"ends", json::array({g.vertex_id(ed.ends[0]),
                                               g.vertex_id(ed.ends[1])})}});
  }
  out["edges"] = std::move(edges);
  if (rot != nullptr) out["rotations"] = rotation_to_json(g, *rot);
  if (g.allow_degree_two()) out["allow_degree_two"] = true;
  return out;
}

// ----- surface naming -----

// Human name of the compact surface with `b` boundary circles, `genus`
// handles when orientable, `crosscaps` crosscaps otherwise.
inline std::string surface_name(bool orientable, int genus, int crosscaps, int b) {
  std::string base;
  if (orientable) {
    if (genus == 0) base = "sphere";
    else if (genus == 1) base = "torus";
    else base = "orientable surface of genus " + std::to_string(genus);
  } else {
    if (crosscaps == 1) base = "projective plane";
    else if (crosscaps == 2) base = "Klein bottle";
    else base = "non-orientable surface with " + std::to_string(crosscaps) +
                " crosscaps";
  }
  if (b == 0) return base;
  // Familiar names for the small bounded cases.
  if (orientable && genus == 0 && b == 1) return "disk";
  if (orientable && genus == 0 && b == 2) return "annulus";
  if (!orientable && crosscaps == 1 && b == 1) return "Mobius band";
  return base + " minus " + std::to_string(b) +
         (b == 1 ? " disk" : " disks");
}

inline json surface_to_json(const SurfaceInfo& s) {
  json out;
  out["b"] = s.b;
  out["orientable"] = s.orientable;
  if (s.orientable) out["genus"] = s.genus;
  else out["crosscaps"] = s.crosscaps;
  out["name"] = surface_name(s.orientable, s.genus, s.crosscaps, s.b);
  if (s.capped_genus.has_value()) {
    out["capped"] = json{{"orientable", true},
                         {"genus", *s.capped_genus},
                         {"name", surface_name(true, *s.capped_genus, 0, 0)}};
  } else if (s.capped_crosscaps.has_value()) {
    out["capped"] = json{{"orientable", false},
                         {"crosscaps", *s.capped_crosscaps},
                         {"name", surface_name(false, 0, *s.capped_crosscaps, 0)}};
  }
  return out;
}

// ----- report fragments -----

// Twist pattern over the edges in index order: 'x' switched, '=' flat.
inline std::string twist_pattern(const MultiGraph& g, TwistVector t) {
  std::string s;
  for (int e = 0; e < g.edge_count(); ++e) s += t.test(e) ? 'x' : '=';
  return s;
}

inline json check_to_json(const CheckRecord& r) {
  json out;
  out["name"] = r.name;
  out["status"] = r.status;
  out["statement"] = r.statement;
  json witness = json::array();
  for (const auto& [k, v] : r.witness)
    witness.push_back(json{{"key", k}, {"value", v}});
  out["witness"] = std::move(witness);
  return out;
}

inline json flag_to_json(const ConjectureFlag& f) {
  json out;
  out["question"] = f.question;
  out["detail"] = f.detail;
  json witness = json::array();
  for (const auto& [k, v] : f.witness)
    witness.push_back(json{{"key", k}, {"value", v}});
  out["witness"] = std::move(witness);
  return out;
}

inline json context_to_json(const CheckContext& ctx) {
  return json{{"cyclic", ctx.cyclic},
              {"cubic", ctx.cubic},
              {"bridgeless", ctx.bridgeless},
              {"planar_rotation", ctx.planar_rot}};
}

inline json basis_to_json(const MultiGraph& g, const CycleBasis& basis,
                          const std::string& mode) {
  json out;
  out["mode"] = mode;
  out["q"] = basis.q;
  out["c"] = basis.c;
  out["min_c"] = basis.min_c;
  out["tree"] = edge_ids_of(g, basis.tree);
  json cycles = json::array();
  for (const EdgeSet& cyc : basis.cycles) cycles.push_back(edge_ids_of(g, cyc));
  out["cycles"] = std::move(cycles);
  return out;
}

inline json hgraph_to_json(const HGraph& h) {
  json out;
  out["q"] = h.q;
  json edges = json::array();
  for (const HEdge& e : h.edges) {
    edges.push_back(json{{"i", e.i},
                         {"j", e.j},
                         {"type", e.vertex_type ? "vertex" : "edge"},
                         {"carrier", e.carrier}});
  }
  out["edges"] = std::move(edges);
  return out;
}

inline json phi_to_json(const Census& c, const PhiRecord& r) {
  return json{{"source", twist_pattern(c.graph, c.expand(r.source))},
              {"edge", r.edge},
              {"target", twist_pattern(c.graph, c.expand(r.target))},
              {"target_strip", r.target_strip},
              {"target_nonorientable", r.target_nonorientable}};
}

// ----- full reports -----

// Shared summary block for census-backed reports.
inline json census_summary_json(const VerifyResult& vr,
                                const std::string& basis_mode) {
  const Census& c = vr.census;
  json out;
  out["graph"] = c.graph_name;
  out["n"] = c.graph.vertex_count();
  out["m"] = c.graph.edge_count();
  out["q"] = c.q;
  out["m_bc"] = c.m_bc;
  out["b_untwisted"] = c.b0;
  out["patch_count"] = c.patch_count;
  out["S"] = c.S;
  out["O"] = c.O;
  out["N"] = c.N;
  if (vr.strips_iso.has_value()) out["strips_up_to_iso"] = *vr.strips_iso;
  out["p"] = vr.p;
  out["c"] = vr.c;
  out["bound_T4"] = vr.bound;
  out["basis"] = basis_to_json(c.graph, vr.basis, basis_mode);
  out["intersection_graph"] = hgraph_to_json(vr.h);
  out["context"] = context_to_json(vr.context);
  return out;
}

// Edge order legend plus per-class and per-strip detail.
inline void append_class_detail(json& out, const VerifyResult& vr) {
  const Census& c = vr.census;
  json edge_order = json::array();
  for (int e = 0; e < c.graph.edge_count(); ++e)
    edge_order.push_back(c.graph.edge(e).id);
  out["edge_order"] = std::move(edge_order);
  out["bridges"] = edge_ids_of(c.graph, EdgeSet{c.bridge_bits});

  json classes = json::array();
  for (uint64_t k = 0; k < c.patch_count; ++k) {
    TwistVector t = c.expand(k);
    const PatchClass& pc = c.classes[k];
    json rec;
    rec["twists"] = twist_pattern(c.graph, t);
    rec["switched"] = edge_ids_of(c.graph, t);
    rec["b"] = pc.b;
    rec["orientable"] = pc.orientable;
    rec["strip"] = (pc.b == 1);
    rec["surface"] = surface_to_json(surface_of_class(c, k));
    classes.push_back(std::move(rec));
  }
  out["classes"] = std::move(classes);

  json strips = json::array();
  for (uint64_t k : c.strips) {
    TwistVector t = c.expand(k);
    json rec;
    rec["twists"] = twist_pattern(c.graph, t);
    rec["switched"] = edge_ids_of(c.graph, t);
    rec["orientable"] = c.classes[k].orientable;
    json characters = json::object();
    for (size_t i = 0; i < c.nonbridge.size(); ++i) {
      if (!(k >> i & 1)) continue;
      EdgeCharacter ch = edge_character(c, k, i);
      characters[c.graph.edge(c.nonbridge[i]).id] =
          ch == EdgeCharacter::longitudinal ? "longitudinal" : "transversal";
    }
    rec["switched_edge_characters"] = std::move(characters);
    rec["surface"] = surface_to_json(surface_of_class(c, k));
    strips.push_back(std::move(rec));
  }
  out["strips"] = std::move(strips);
}

inline void append_checks(json& out, const VerifyResult& vr) {
  json checks = json::array();
  for (const CheckRecord& r : vr.checks) checks.push_back(check_to_json(r));
  out["checks"] = std::move(checks);
  json phi = json::array();
  for (const PhiRecord& r : vr.phi) phi.push_back(phi_to_json(vr.census, r));
  out["phi"] = std::move(phi);
  json flags = json::array();
  for (const ConjectureFlag& f : vr.flags) flags.push_back(flag_to_json(f));
  out["conjecture_flags"] = std::move(flags);
  out["warnings"] = vr.warnings;
}

inline json census_report(const VerifyResult& vr, const std::string& basis_mode) {
  json out;
  out["command"] = "census";
  json summary = census_summary_json(vr, basis_mode);
  for (auto& [k, v] : summary.items()) out[k] = std::move(v);
  append_class_detail(out, vr);
  append_checks(out, vr);
  return out;
}

inline json verify_report(const VerifyResult& vr, const std::string& basis_mode) {
  json out;
  out["command"] = "verify";
  json summary = census_summary_json(vr, basis_mode);
  for (auto& [k, v] : summary.items()) out[k] = std::move(v);
  out["pass"] = !vr.any_fail();
  out["findings_present"] = vr.any_finding();
  append_checks(out, vr);
  return out;
}

inline json analyze_report(const MultiGraph& g, const CyclicPart& cp,
                           const CycleBasis& basis, const std::string& basis_mode,
                           const HGraph& h, uint64_t p, int64_t bound) {
  json out;
  out["command"] = "analyze";
  out["graph"] = json{{"name", g.name()},
                      {"n", g.vertex_count()},
                      {"m", g.edge_count()},
                      {"q", cyclomatic_number(g)},
                      {"bridges", edge_ids_of(g, EdgeSet{bridge_mask(g)})}};
  uint64_t cp_bridges = bridge_mask(cp.graph);
  int m_bc = 0;
  for (int e = 0; e < cp.graph.edge_count(); ++e)
    if (!(cp_bridges >> e & 1)) ++m_bc;
  out["cyclic_part"] = json{{"n", cp.graph.vertex_count()},
                            {"m", cp.graph.edge_count()},
                            {"m_bc", m_bc},
                            {"changed", cp.changed}};
  out["basis"] = basis_to_json(cp.graph, basis, basis_mode);
  out["intersection_graph"] = hgraph_to_json(h);
  out["p"] = p;
  out["c"] = basis.c;
  out["bound_T4"] = bound;
  return out;
}

inline json sweep_report(const SweepReport& report) {
  json out;
  out["command"] = "sweep";
  out["spec"] = json{{"max_edges", report.spec.max_edges},
                     {"cubic_only", report.spec.cubic_only},
                     {"bridgeless_only", report.spec.bridgeless_only},
                     {"allow_loops", report.spec.allow_loops},
                     {"include_degree_two_cyclic",
                      report.spec.include_degree_two_cyclic}};
  out["graph_count"] = report.graph_count;
  out["checks_passed"] = report.checks_passed;
  out["checks_failed"] = report.checks_failed;
  out["checks_finding"] = report.checks_finding;
  out["conjecture_flag_count"] = report.flag_count;

  json rows = json::array();
  for (const SweepRow& row : report.rows) {
    json r;
    r["name"] = row.name;
    r["n"] = row.n;
    r["m"] = row.m;
    r["q"] = row.q;
    r["m_bc"] = row.m_bc;
    r["patch_count"] = row.patch_count;
    r["S"] = row.S;
    r["O"] = row.O;
    r["N"] = row.N;
    r["p"] = row.p;
    r["c"] = row.c;
    if (row.strips_iso.has_value()) r["strips_up_to_iso"] = *row.strips_iso;
    r["rotation_planar"] = row.rotation_planar;
    json checks = json::array();
    for (const CheckRecord& rec : row.checks) checks.push_back(check_to_json(rec));
    r["checks"] = std::move(checks);
    json flags = json::array();
    for (const ConjectureFlag& f : row.flags) flags.push_back(flag_to_json(f));
    r["conjecture_flags"] = std::move(flags);
    r["warnings"] = row.warnings;
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);

  json failures = json::array();
  for (const SweepFinding& f : report.failures)
    failures.push_back(json{{"graph", f.graph}, {"check", check_to_json(f.record)}});
  out["failures"] = std::move(failures);
  json findings = json::array();
  for (const SweepFinding& f : report.findings)
    findings.push_back(json{{"graph", f.graph}, {"check", check_to_json(f.record)}});
  out["findings"] = std::move(findings);
  return out;
}

inline json strip_report(const MultiGraph& g, const StripSearch& search) {
  json out;
  out["command"] = "strip";
  out["graph"] = g.name();
  out["found"] = search.found;
  if (search.found) {
    out["twists"] = twist_pattern(search.patch.graph, search.patch.twists);
    out["switched"] = edge_ids_of(search.patch.graph, search.patch.twists);
  }
  return out;
}

inline json tuple_patch_report(const MultiGraph& g,
                               const std::vector<TuplePatchRecord>& records) {
  json out;
  out["command"] = "tuple-patch";
  out["graph"] = g.name();
  json recs = json::array();
  for (const TuplePatchRecord& r : records) {
    json rec;
    rec["tuple"] = r.tuple;
    rec["k"] = r.k;
    rec["contracted"] = r.contracted;
    rec["found"] = r.found;
    rec["enclosure_ok"] = r.enclosure_ok;
    rec["b"] = r.b;
    rec["expected_b"] = r.k + 1;
    if (r.found) {
      rec["twists"] = twist_pattern(r.patch.graph, r.patch.twists);
      rec["switched"] = edge_ids_of(r.patch.graph, r.patch.twists);
    }
    if (!r.note.empty()) rec["note"] = r.note;
    recs.push_back(std::move(rec));
  }
  out["patches"] = std::move(recs);
  return out;
}

// ----- CSV exports (lossy convenience views) -----

// One row per twist class.
inline std::string census_csv(const VerifyResult& vr) {
  const Census& c = vr.census;
  std::string out = "graph,twists,switched,b,orientable,strip,surface\n";
  for (uint64_t k = 0; k < c.patch_count; ++k) {
    TwistVector t = c.expand(k);
    const PatchClass& pc = c.classes[k];
    SurfaceInfo s = surface_of_class(c, k);
    std::string switched;
    for (const std::string& id : edge_ids_of(c.graph, t)) {
      if (!switched.empty()) switched += ";";
      switched += id;
    }
    out += c.graph_name + "," + twist_pattern(c.graph, t) + "," + switched +
           "," + std::to_string(pc.b) + "," + (pc.orientable ? "1" : "0") +
           "," + (pc.b == 1 ? "1" : "0") + "," +
           surface_name(s.orientable, s.genus, s.crosscaps, s.b) + "\n";
  }
  return out;
}

// One row per catalog graph.
inline std::string sweep_csv(const SweepReport& report) {
  std::string out =
      "graph,n,m,q,m_bc,patch_count,S,O,N,p,c,strips_up_to_iso,"
      "rotation_planar,checks_failed,checks_finding,conjecture_flags\n";
  for (const SweepRow& row : report.rows) {
    uint64_t failed = 0, finding = 0;
    for (const CheckRecord& rec : row.checks) {
      if (rec.status == "fail") ++failed;
      if (rec.status == "finding") ++finding;
    }
    out += row.name + "," + std::to_string(row.n) + "," +
           std::to_string(row.m) + "," + std::to_string(row.q) + "," +
           std::to_string(row.m_bc) + "," + std::to_string(row.patch_count) +
           "," + std::to_string(row.S) + "," + std::to_string(row.O) + "," +
           std::to_string(row.N) + "," + std::to_string(row.p) + "," +
           std::to_string(row.c) + "," +
           (row.strips_iso.has_value() ? std::to_string(*row.strips_iso) : "") +
           "," + (row.rotation_planar ? "1" : "0") + "," +
           std::to_string(failed) + "," + std::to_string(finding) + "," +
           std::to_string(row.flags.size()) + "\n";
  }
  return out;
}

// Serialize with a trailing newline: reports are files, files end in newlines.
inline std::string to_text(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace clc
