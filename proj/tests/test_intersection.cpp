#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "clc/intersection.hpp"
#include "test_helpers.hpp"

using namespace clc;

namespace {

MultiGraph quad() {
  // two vertices joined by four parallel edges
  return MultiGraph::create("quad", {"u", "v"},
                            {{"p0", "u", "v"}, {"p1", "u", "v"}, {"p2", "u", "v"},
                             {"p3", "u", "v"}});
}

MultiGraph long_theta() {
  // three u-v paths of two edges each; interior vertices have degree 2
  return MultiGraph::create("long_theta", {"u", "v", "x1", "x2", "x3"},
                            {{"a1", "u", "x1"}, {"a2", "x1", "v"},
                             {"b1", "u", "x2"}, {"b2", "x2", "v"},
                             {"c1", "u", "x3"}, {"c2", "x3", "v"}},
                            true);
}

std::set<std::vector<int>> tuple_set(const std::vector<std::vector<int>>& ts) {
  return {ts.begin(), ts.end()};
}

}  // namespace

TEST_CASE("theta: one shared edge, four tuples") {
  MultiGraph g = clct::theta();
  CycleBasis basis = fundamental_basis(g);
  REQUIRE(basis.q == 2);

  HGraph h = build_H(g, basis);
  CHECK(h.q == 2);
  REQUIRE(h.edges.size() == 1);
  CHECK(h.edges[0].i == 0);
  CHECK(h.edges[0].j == 1);
  CHECK_FALSE(h.edges[0].vertex_type);
  CHECK(h.edges[0].carrier == "a");

  auto paths = simple_paths(h);
  REQUIRE(paths.size() == 3);
  CHECK(paths[0] == HPath{{0}, {}});
  CHECK(paths[1] == HPath{{1}, {}});
  CHECK(paths[2] == HPath{{0, 1}, {0}});
  CHECK(paths[0].constant());
  CHECK_FALSE(paths[2].constant());

  auto tuples = disjoint_tuples(paths);
  CHECK(tuple_set(tuples) ==
        std::set<std::vector<int>>{{0}, {0, 1}, {1}, {2}});
  CHECK(count_disjoint_tuples(paths) == 4);
  CHECK(p_of(g, basis) == 4);

  PathCountBound b = check_p_lower_bound(g, basis);
  CHECK(b.p == 4);
  CHECK(b.lower == 3);
  CHECK(b.h_edges == 1);
  CHECK(b.holds);
  CHECK_FALSE(b.equality);
  CHECK(b.equality_matches_edgeless);
}

TEST_CASE("dumbbell: edgeless pattern meets the lower bound exactly") {
  MultiGraph g = clct::dumbbell();
  CycleBasis basis = fundamental_basis(g);
  REQUIRE(basis.q == 2);

  HGraph h = build_H(g, basis);
  CHECK(h.edges.empty());

  auto paths = simple_paths(h);
  CHECK(paths.size() == 2);  // constants only
  CHECK(count_disjoint_tuples(paths) == 3);

  PathCountBound b = check_p_lower_bound(g, basis);
  CHECK(b.p == 3);
  CHECK(b.lower == 3);
  CHECK(b.equality);
  CHECK(b.equality_matches_edgeless);
}

TEST_CASE("tree: empty pattern, zero tuples, degenerate bound") {
  MultiGraph g = clct::path4();
  CycleBasis basis = fundamental_basis(g);
  REQUIRE(basis.q == 0);

  HGraph h = build_H(g, basis);
  CHECK(h.q == 0);
  CHECK(h.edges.empty());
  CHECK(simple_paths(h).empty());
  CHECK(p_of(g, basis) == 0);

  PathCountBound b = check_p_lower_bound(g, basis);
  CHECK(b.p == 0);
  CHECK(b.lower == 0);
  CHECK(b.holds);
  CHECK(b.equality);
  CHECK(b.equality_matches_edgeless);
}

TEST_CASE("figure-eight: vertex-type intersection edge, strict bound") {
  MultiGraph g = clct::fig8();
  CycleBasis basis = fundamental_basis(g);
  REQUIRE(basis.q == 2);

  HGraph h = build_H(g, basis);
  REQUIRE(h.edges.size() == 1);
  CHECK(h.edges[0].vertex_type);
  CHECK(h.edges[0].carrier == "v");

  CHECK(p_of(g, basis) == 4);

  PathCountBound b = check_p_lower_bound(g, basis);
  CHECK(b.p == 4);
  CHECK(b.lower == 3);
  CHECK(b.holds);
  CHECK_FALSE(b.equality);
  CHECK(b.equality_matches_edgeless);  // strict, and H has an edge
}

TEST_CASE("K4: triangle pattern with sixteen tuples") {
  MultiGraph g = clct::k4();
  CycleBasis basis = fundamental_basis(g);
  REQUIRE(basis.q == 3);

  HGraph h = build_H(g, basis);
  REQUIRE(h.edges.size() == 3);
  std::set<std::string> carriers;
  for (const HEdge& e : h.edges) {
    CHECK_FALSE(e.vertex_type);
    carriers.insert(e.carrier);
  }
  CHECK(carriers == std::set<std::string>{"e0", "e1", "e2"});

  auto paths = simple_paths(h);
  CHECK(paths.size() == 9);  // 3 constants + 3 edges + 3 two-edge paths
  CHECK(count_disjoint_tuples(paths) == 16);
  CHECK(p_of(g, basis) == 16);
  CHECK(check_p_lower_bound(g, basis).holds);
}

TEST_CASE("four parallel edges: triangle pattern on one carrier") {
  MultiGraph g = quad();
  CycleBasis basis = fundamental_basis(g);
  REQUIRE(basis.q == 3);

  HGraph h = build_H(g, basis);
  REQUIRE(h.edges.size() == 3);
  for (const HEdge& e : h.edges) {
    CHECK_FALSE(e.vertex_type);
    CHECK(e.carrier == "p0");
  }
  CHECK(p_of(g, basis) == 16);
}

TEST_CASE("subdivided theta: parallel pattern edges give distinct paths") {
  MultiGraph g = long_theta();
  CycleBasis basis = fundamental_basis(g);
  REQUIRE(basis.q == 2);

  HGraph h = build_H(g, basis);
  REQUIRE(h.edges.size() == 2);
  CHECK(h.edges[0].carrier == "a1");
  CHECK(h.edges[1].carrier == "a2");
  CHECK(h.edges[0].i == 0);
  CHECK(h.edges[0].j == 1);
  CHECK(h.edges[1].i == 0);
  CHECK(h.edges[1].j == 1);

  auto paths = simple_paths(h);
  REQUIRE(paths.size() == 4);
  CHECK(paths[2] == HPath{{0, 1}, {0}});
  CHECK(paths[3] == HPath{{0, 1}, {1}});

  CHECK(count_disjoint_tuples(paths) == 5);
  PathCountBound b = check_p_lower_bound(g, basis);
  CHECK(b.p == 5);
  CHECK(b.lower == 3);
  CHECK(b.holds);
  CHECK(b.equality_matches_edgeless);
}

TEST_CASE("tuple listing respects the cap") {
  MultiGraph g = clct::theta();
  auto paths = simple_paths(build_H(g, fundamental_basis(g)));
  CHECK_THROWS_AS(disjoint_tuples(paths, 2), graph_error);
}
