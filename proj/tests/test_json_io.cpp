// Graph JSON parsing (schema validation and the error taxonomy) and the
// report serializers: exact content on the worked examples, byte-level
// determinism, and the CSV exports.

#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "clc/census.hpp"
#include "clc/intersection.hpp"
#include "clc/json_io.hpp"
#include "clc/multigraph.hpp"

#include "test_helpers.hpp"

using clc::json;

namespace {

const char* kThetaDoc = R"({
  "name": "theta",
  "vertices": ["u", "v"],
  "edges": [
    {"id": "a", "ends": ["u", "v"]},
    {"id": "b", "ends": ["u", "v"]},
    {"id": "c", "ends": ["u", "v"]}
  ],
  "rotations": {
    "u": [["a", 0], ["b", 0], ["c", 0]],
    "v": [["c", 1], ["b", 1], ["a", 1]]
  }
})";

}  // namespace

TEST_CASE("graph documents parse") {
  clc::ParsedGraph pg = clc::parse_graph_text(kThetaDoc);
  CHECK(pg.graph.name() == "theta");
  CHECK(pg.graph.vertex_count() == 2);
  CHECK(pg.graph.edge_count() == 3);
  REQUIRE(pg.rotation.has_value());
  clc::validate_rotation(pg.graph, *pg.rotation);
  // The explicit rotation puts a,b,c in the same cyclic order at both ends:
  // the planar drawing.  Its untwisted patch has q+1 = 3 boundary circles.
  clc::Census census = clc::enumerate_patches(pg.graph, *pg.rotation);
  CHECK(census.b0 == 3);

  SECTION("smallest valid graph: one vertex, no edges") {
    clc::ParsedGraph tiny =
        clc::parse_graph_text(R"({"vertices": ["z"], "edges": []})");
    CHECK(tiny.graph.vertex_count() == 1);
    CHECK(tiny.graph.edge_count() == 0);
    CHECK(tiny.graph.name() == "graph");
    CHECK_FALSE(tiny.rotation.has_value());
  }

  SECTION("allow_degree_two gates degree-2 vertices") {
    const char* loop_doc =
        R"({"name": "loop", "vertices": ["w"],
            "edges": [{"id": "l", "ends": ["w", "w"]}],
            "allow_degree_two": true})";
    clc::ParsedGraph lg = clc::parse_graph_text(loop_doc);
    CHECK(lg.graph.edge_count() == 1);
    CHECK(lg.graph.degree(0) == 2);
  }
}

TEST_CASE("graph document round-trip") {
  clc::ParsedGraph pg = clc::parse_graph_text(kThetaDoc);
  json dumped = clc::graph_to_json(pg.graph, &*pg.rotation);
  clc::ParsedGraph again = clc::parse_graph_text(dumped.dump());
  CHECK(again.graph.name() == pg.graph.name());
  CHECK(again.graph.vertex_count() == pg.graph.vertex_count());
  CHECK(again.graph.edge_count() == pg.graph.edge_count());
  REQUIRE(again.rotation.has_value());
  for (int v = 0; v < pg.graph.vertex_count(); ++v) {
    CHECK(again.rotation->at[v] == pg.rotation->at[v]);
  }
  CHECK(clc::are_isomorphic(again.graph, pg.graph));

  // Serialization itself is deterministic.
  CHECK(clc::graph_to_json(pg.graph, &*pg.rotation).dump() == dumped.dump());

  // allow_degree_two survives the trip.
  clc::MultiGraph loop = clct::loop_graph();
  json loop_doc = clc::graph_to_json(loop);
  CHECK(loop_doc["allow_degree_two"] == true);
  CHECK(clc::parse_graph_text(loop_doc.dump()).graph.degree(0) == 2);
}

TEST_CASE("parse error taxonomy") {
  auto rejects = [](const std::string& text) {
    CHECK_THROWS_AS(clc::parse_graph_text(text), clc::graph_error);
  };
  rejects("not json at all");
  rejects("[1, 2, 3]");                                   // not an object
  rejects(R"({"edges": []})");                            // vertices missing
  rejects(R"({"vertices": "u", "edges": []})");           // vertices not array
  rejects(R"({"vertices": ["u"], "edges": [3]})");        // bad edge entry
  rejects(R"({"vertices": ["u"], "edges": [{"id": "a"}]})");  // ends missing
  rejects(R"({"vertices": ["u"],
              "edges": [{"id": "a", "ends": ["u"]}]})");  // ends not a pair
  rejects(R"({"vertices": ["u"],
              "edges": [{"id": "a", "ends": ["u", "zz"]}]})");  // unknown vertex
  rejects(R"({"vertices": ["u", "u"], "edges": []})");    // duplicate vertex
  rejects(R"({"vertices": ["u", "v"], "edges": []})");    // disconnected
  rejects(R"({"vertices": ["w"],
              "edges": [{"id": "l", "ends": ["w", "w"]}]})");  // degree 2
  // Rotation errors.
  rejects(R"({"vertices": ["w"],
              "edges": [{"id": "l", "ends": ["w", "w"]},
                        {"id": "m", "ends": ["w", "w"]}],
              "rotations": {"w": [["l", 0]]}})");  // incomplete dart set
  rejects(R"({"vertices": ["w"],
              "edges": [{"id": "l", "ends": ["w", "w"]},
                        {"id": "m", "ends": ["w", "w"]}],
              "rotations": {"w": [["l", 0], ["l", 1], ["m", 0], ["m", 2]]}})");
  rejects(R"({"vertices": ["w"],
              "edges": [{"id": "l", "ends": ["w", "w"]},
                        {"id": "m", "ends": ["w", "w"]}],
              "rotations": {"zz": [["l", 0], ["l", 1], ["m", 0], ["m", 1]]}})");
  rejects(R"({"vertices": ["u", "v", "w"],
              "edges": [{"id": "a", "ends": ["u", "v"]},
                        {"id": "b", "ends": ["v", "w"]},
                        {"id": "c", "ends": ["w", "u"]},
                        {"id": "d", "ends": ["u", "v"]}],
              "rotations": {"u": [["a", 0], ["c", 1], ["d", 0]],
                            "v": [["a", 1], ["b", 0], ["d", 1]]}})");
  // missing vertex w in rotations ^
}

TEST_CASE("surface names") {
  CHECK(clc::surface_name(true, 0, 0, 0) == "sphere");
  CHECK(clc::surface_name(true, 1, 0, 0) == "torus");
  CHECK(clc::surface_name(true, 2, 0, 0) == "orientable surface of genus 2");
  CHECK(clc::surface_name(false, 0, 1, 0) == "projective plane");
  CHECK(clc::surface_name(false, 0, 2, 0) == "Klein bottle");
  CHECK(clc::surface_name(true, 0, 0, 1) == "disk");
  CHECK(clc::surface_name(true, 0, 0, 2) == "annulus");
  CHECK(clc::surface_name(false, 0, 1, 1) == "Mobius band");
  CHECK(clc::surface_name(true, 1, 0, 1) == "torus minus 1 disk");
  CHECK(clc::surface_name(false, 0, 2, 3) == "Klein bottle minus 3 disks");
}

TEST_CASE("census report content for the planar theta") {
  clc::MultiGraph g = clct::theta();
  clc::RotationSystem rot = clct::theta_planar_rotation(g);
  clc::VerifyOptions opts;
  clc::VerifyResult vr = clc::verify_all(g, rot, opts);
  json rep = clc::census_report(vr, "bfs");

  CHECK(rep["command"] == "census");
  CHECK(rep["graph"] == "theta");
  CHECK(rep["q"] == 2);
  CHECK(rep["m_bc"] == 3);
  CHECK(rep["b_untwisted"] == 3);
  CHECK(rep["patch_count"] == 8);
  CHECK(rep["S"] == 4);
  CHECK(rep["O"] == 1);
  CHECK(rep["N"] == 3);
  CHECK(rep["strips_up_to_iso"] == 2);
  CHECK(rep["p"] == 4);
  CHECK(rep["c"] == 2);
  CHECK(rep["bound_T4"] == 4);
  CHECK(rep["edge_order"] == json::array({"a", "b", "c"}));
  CHECK(rep["classes"].size() == 8);
  CHECK(rep["strips"].size() == 4);

  // The all-switched strip is the orientable one; every switched edge is
  // longitudinal.  The two-switch strips are non-orientable with both
  // switched edges transversal.
  int orientable_strips = 0;
  for (const json& strip : rep["strips"]) {
    if (strip["orientable"] == true) {
      ++orientable_strips;
      CHECK(strip["twists"] == "xxx");
      for (const auto& [id, ch] : strip["switched_edge_characters"].items()) {
        CHECK(ch == "longitudinal");
      }
      CHECK(strip["surface"]["capped"]["name"] == "torus");
    } else {
      CHECK(strip["switched"].size() == 2);
      for (const auto& [id, ch] : strip["switched_edge_characters"].items()) {
        CHECK(ch == "transversal");
      }
      CHECK(strip["surface"]["capped"]["name"] == "Klein bottle");
    }
  }
  CHECK(orientable_strips == 1);

  // Untwisted class: three boundary circles, orientable, planar.
  CHECK(rep["classes"][0]["twists"] == "===");
  CHECK(rep["classes"][0]["b"] == 3);
  CHECK(rep["classes"][0]["orientable"] == true);
  CHECK(rep["classes"][0]["surface"]["name"] == "sphere minus 3 disks");

  // All checks pass; no conjecture flags; phi empty.
  for (const json& check : rep["checks"]) CHECK(check["status"] == "pass");
  CHECK(rep["conjecture_flags"].empty());
  CHECK(rep["phi"].empty());

  SECTION("serialization is byte-stable") {
    clc::VerifyResult vr2 = clc::verify_all(g, rot, opts);
    CHECK(clc::to_text(clc::census_report(vr2, "bfs")) == clc::to_text(rep));
  }

  SECTION("verify report mirrors the pass state") {
    json ver = clc::verify_report(vr, "bfs");
    CHECK(ver["command"] == "verify");
    CHECK(ver["pass"] == true);
    CHECK(ver["findings_present"] == false);
    CHECK(!ver.contains("classes"));
  }

  SECTION("census CSV has one row per class") {
    std::string csv = clc::census_csv(vr);
    size_t rows = 0;
    for (char ch : csv)
      if (ch == '\n') ++rows;
    CHECK(rows == 9);  // header + 8 classes
    CHECK(csv.find("theta,xxx,a;b;c,1,1,1,torus minus 1 disk") != std::string::npos);
  }
}

TEST_CASE("analyze report worked examples") {
  auto analyze = [](const clc::MultiGraph& g) {
    clc::CyclicPart cp = clc::cyclic_part(g);
    clc::CycleBasis basis = clc::fundamental_basis(cp.graph);
    clc::HGraph h = clc::build_H(cp.graph, basis);
    uint64_t p = clc::p_of(cp.graph, basis);
    uint64_t bridges = clc::bridge_mask(cp.graph);
    int m_bc = 0;
    for (int e = 0; e < cp.graph.edge_count(); ++e)
      if (!(bridges >> e & 1)) ++m_bc;
    int64_t bound = (int64_t{1} << m_bc) - static_cast<int64_t>(p);
    return clc::analyze_report(g, cp, basis, "bfs", h, p, bound);
  };

  json theta = analyze(clct::theta());
  CHECK(theta["graph"]["q"] == 2);
  CHECK(theta["cyclic_part"]["m_bc"] == 3);
  CHECK(theta["p"] == 4);
  CHECK(theta["c"] == 2);
  CHECK(theta["bound_T4"] == 4);

  json tree = analyze(clct::path4());
  CHECK(tree["graph"]["q"] == 0);
  CHECK(tree["cyclic_part"]["m_bc"] == 0);
  CHECK(tree["p"] == 0);
  CHECK(tree["bound_T4"] == 1);

  json dumbbell = analyze(clct::dumbbell());
  CHECK(dumbbell["graph"]["q"] == 2);
  CHECK(dumbbell["cyclic_part"]["m_bc"] == 2);
  CHECK(dumbbell["p"] == 3);
  CHECK(dumbbell["bound_T4"] == 1);
}

TEST_CASE("sweep report serialization") {
  clc::CatalogSpec spec;
  spec.max_edges = 3;
  clc::SweepReport report = clc::sweep(spec);
  json rep = clc::sweep_report(report);

  CHECK(rep["command"] == "sweep");
  CHECK(rep["spec"]["max_edges"] == 3);
  CHECK(rep["graph_count"] == 4);
  CHECK(rep["checks_failed"] == 0);
  CHECK(rep["rows"].size() == 4);

  // The theta row carries the same quantities cmd_analyze reports.
  bool saw_theta = false;
  for (const json& row : rep["rows"]) {
    if (row["name"] == "g3_2_1") {
      saw_theta = true;
      CHECK(row["q"] == 2);
      CHECK(row["m_bc"] == 3);
      CHECK(row["p"] == 4);
      CHECK(row["c"] == 2);
      CHECK(row["S"] == 4);
    }
  }
  CHECK(saw_theta);

  SECTION("byte-stable across recomputation") {
    clc::SweepReport again = clc::sweep(spec);
    CHECK(clc::to_text(clc::sweep_report(again)) == clc::to_text(rep));
  }

  SECTION("CSV export") {
    std::string csv = clc::sweep_csv(report);
    size_t rows = 0;
    for (char ch : csv)
      if (ch == '\n') ++rows;
    CHECK(rows == 5);  // header + 4 graphs
    CHECK(csv.find("g3_2_1,2,3,2,3,8,4,1,3,4,2,2,1,0,0,0") != std::string::npos);
  }
}
