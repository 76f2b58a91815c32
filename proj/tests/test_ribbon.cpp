#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "clc/cycle_space.hpp"
#include "clc/multigraph.hpp"
#include "clc/ribbon.hpp"
#include "test_helpers.hpp"

using namespace clc;
using namespace clct;

namespace {

std::set<std::set<std::string>> support_sets(const MultiGraph& g,
                                             const std::vector<EdgeSet>& sup) {
  std::set<std::set<std::string>> out;
  for (auto& s : sup) {
    std::set<std::string> one;
    for (auto& id : edge_ids_of(g, s)) one.insert(id);
    out.insert(one);
  }
  return out;
}

}  // namespace

// --- calibration: the three fixtures every boundary-walk convention must hit ---

TEST_CASE("untwisted loop is an annulus") {
  auto g = loop_graph();
  auto p = make_patch(g, default_rotation(g), {});
  CHECK(boundary_count(p) == 2);
  auto r = surface_class(p);
  CHECK(r.b == 2);
  CHECK(r.euler == 0);
  CHECK(r.orientable);
  REQUIRE(r.genus.has_value());
  CHECK(*r.genus == 0);
  CHECK(!r.capped_genus.has_value());  // only strips get capped
  // each circle runs along one side of the band: support = the loop, twice
  CHECK(support_sets(g, r.edge_support) ==
        std::set<std::set<std::string>>{{"e"}});
  CHECK(r.edge_support.size() == 2);
}

TEST_CASE("twisted loop is a moebius band") {
  auto g = loop_graph();
  auto p = make_patch(g, default_rotation(g), tw(g, {"e"}));
  CHECK(boundary_count(p) == 1);
  CHECK(is_strip(p));
  auto r = surface_class(p);
  CHECK(!r.orientable);
  REQUIRE(r.crosscaps.has_value());
  CHECK(*r.crosscaps == 1);
  REQUIRE(r.capped_crosscaps.has_value());
  CHECK(*r.capped_crosscaps == 1);  // capping the band gives the projective plane
  // the single circle crosses the band twice: even count, empty support
  CHECK(r.edge_support.size() == 1);
  CHECK(r.edge_support[0].empty());
}

TEST_CASE("planar theta untwisted has three circles") {
  auto g = theta();
  auto rot = theta_planar_rotation(g);
  auto p = make_patch(g, rot, {});
  auto r = surface_class(p);
  CHECK(r.b == 3);
  CHECK(r.orientable);
  CHECK(*r.genus == 0);
  CHECK(support_sets(g, r.edge_support) ==
        std::set<std::set<std::string>>{{"a", "b"}, {"b", "c"}, {"a", "c"}});
  // every trace alternates side and corner arcs
  for (auto& walk : r.traces) {
    REQUIRE(walk.size() % 2 == 0);
    for (size_t i = 0; i < walk.size(); ++i)
      CHECK(walk[i].kind ==
            (i % 2 == 0 ? BoundaryArc::side : BoundaryArc::corner));
  }
  // 2m side arcs and sum(deg) corner arcs in total
  size_t total = 0;
  for (auto& walk : r.traces) total += walk.size();
  CHECK(total == 12);
}

// --- the full 8-patch table of the planar theta, frozen by hand ---

TEST_CASE("planar theta boundary table") {
  auto g = theta();
  auto rot = theta_planar_rotation(g);
  BoundaryTracer tr(g, rot);
  auto b_of = [&](std::initializer_list<const char*> ids) {
    return tr.count(tw(g, ids));
  };
  CHECK(b_of({}) == 3);
  CHECK(b_of({"a"}) == 2);
  CHECK(b_of({"b"}) == 2);
  CHECK(b_of({"c"}) == 2);
  CHECK(b_of({"a", "b"}) == 1);
  CHECK(b_of({"a", "c"}) == 1);
  CHECK(b_of({"b", "c"}) == 1);
  CHECK(b_of({"a", "b", "c"}) == 1);

  // orientability: exactly the all-switched strip is orientable
  auto basis = fundamental_basis(g);
  CHECK(is_orientable(g, tw(g, {"a", "b", "c"}), basis));
  CHECK(!is_orientable(g, tw(g, {"a", "b"}), basis));
  CHECK(!is_orientable(g, tw(g, {"a"}), basis));
  CHECK(is_orientable(g, {}, basis));

  // the orientable strip is a torus with one hole; capped: the torus
  auto px = make_patch(g, rot, tw(g, {"a", "b", "c"}));
  auto rx = surface_class(px);
  CHECK(rx.b == 1);
  CHECK(rx.orientable);
  CHECK(*rx.genus == 1);
  CHECK(*rx.capped_genus == 1);

  // a two-switch strip caps to the Klein bottle
  auto pn = make_patch(g, rot, tw(g, {"a", "b"}));
  auto rn = surface_class(pn);
  CHECK(!rn.orientable);
  CHECK(*rn.crosscaps == 2);
  CHECK(*rn.capped_crosscaps == 2);
}

TEST_CASE("default theta boundary table") {
  // identity rotation at both vertices embeds theta on the torus
  auto g = theta();
  BoundaryTracer tr(g, default_rotation(g));
  CHECK(tr.count({}) == 1);
  CHECK(tr.count(tw(g, {"a"})) == 1);
  CHECK(tr.count(tw(g, {"b"})) == 1);
  CHECK(tr.count(tw(g, {"c"})) == 1);
  CHECK(tr.count(tw(g, {"a", "b"})) == 2);
  CHECK(tr.count(tw(g, {"a", "c"})) == 2);
  CHECK(tr.count(tw(g, {"b", "c"})) == 2);
  CHECK(tr.count(tw(g, {"a", "b", "c"})) == 3);
}

TEST_CASE("dumbbell boundary table") {
  auto g = dumbbell();
  BoundaryTracer tr(g, default_rotation(g));
  CHECK(tr.count({}) == 3);
  CHECK(tr.count(tw(g, {"a"})) == 2);
  CHECK(tr.count(tw(g, {"b"})) == 2);
  CHECK(tr.count(tw(g, {"a", "b"})) == 1);
  // the bridge twist is a homeomorphism: same counts with f twisted
  CHECK(tr.count(tw(g, {"f"})) == 3);
  CHECK(tr.count(tw(g, {"a", "f"})) == 2);
  CHECK(tr.count(tw(g, {"a", "b", "f"})) == 1);

  // normalization pins bridge twists to zero
  auto p = make_patch(g, default_rotation(g), tw(g, {"a", "f"}));
  CHECK(p.twists == tw(g, {"a"}));

  auto s = make_patch(g, default_rotation(g), tw(g, {"a", "b"}));
  auto r = surface_class(s);
  CHECK(r.b == 1);
  CHECK(!r.orientable);
  CHECK(*r.crosscaps == 2);
  CHECK(*r.capped_crosscaps == 2);
}

TEST_CASE("figure eight tables for both rotations") {
  auto g = fig8();
  // nested loops (default order a0 a1 b0 b1): genus 0
  BoundaryTracer nested(g, default_rotation(g));
  CHECK(nested.count({}) == 3);
  CHECK(nested.count(tw(g, {"a"})) == 2);
  CHECK(nested.count(tw(g, {"b"})) == 2);
  CHECK(nested.count(tw(g, {"a", "b"})) == 1);

  // interleaved loops: genus 1
  BoundaryTracer inter(g, fig8_interleaved(g));
  CHECK(inter.count({}) == 1);
  CHECK(inter.count(tw(g, {"a"})) == 1);
  CHECK(inter.count(tw(g, {"b"})) == 1);
  CHECK(inter.count(tw(g, {"a", "b"})) == 2);

  // untwisted interleaved patch is orientable with genus 1
  auto p = make_patch(g, fig8_interleaved(g), {});
  auto r = surface_class(p);
  CHECK(r.b == 1);
  CHECK(r.orientable);
  CHECK(*r.genus == 1);
  CHECK(*r.capped_genus == 1);
}

// --- moves ---

TEST_CASE("switch edge toggles twists, bridges are pinned") {
  auto g = theta();
  auto p = make_patch(g, theta_planar_rotation(g), {});
  auto q = switch_edge(p, "b");
  CHECK(q.twists == tw(g, {"b"}));
  CHECK(switch_edge(q, "b").twists.empty());

  auto d = dumbbell();
  auto pd = make_patch(d, default_rotation(d), {});
  CHECK(switch_edge(pd, "f").twists.empty());
}

TEST_CASE("vertex flip is a homeomorphism") {
  auto g = theta();
  auto rot = default_rotation(g);
  BoundaryTracer before(g, rot);
  auto basis = fundamental_basis(g);
  for (uint32_t k = 0; k < 8; ++k) {
    TwistVector t{k};
    auto p = make_patch(g, rot, t);
    auto f = vertex_flip(p, "v");
    // flipping v reverses its rotation and toggles a, b, c
    CHECK(f.twists == sym_diff(t, tw(g, {"a", "b", "c"})));
    BoundaryTracer after(g, f.rotation);
    CHECK(before.count(t) == after.count(f.twists));
    CHECK(is_orientable(g, t, basis) == is_orientable(g, f.twists, basis));
  }
  // flipped default rotation at v equals the mirrored drawing
  auto f = vertex_flip(make_patch(g, rot, {}), "v");
  CHECK(f.rotation.at == theta_planar_rotation(g).at);

  // loops do not toggle: flipping the figure-eight vertex keeps twists
  auto e8 = fig8();
  auto p8 = make_patch(e8, default_rotation(e8), tw(e8, {"a"}));
  auto f8 = vertex_flip(p8, "v");
  CHECK(f8.twists == p8.twists);
  BoundaryTracer t8a(e8, default_rotation(e8)), t8b(e8, f8.rotation);
  for (uint32_t k = 0; k < 4; ++k) CHECK(t8a.count(TwistVector{k}) == t8b.count(TwistVector{k}));
}

// --- rotation search ---

TEST_CASE("planar rotation search") {
  // theta: the identity rotation has genus 1, the mirrored one genus 0
  auto g = theta();
  auto rs = planar_rotation(g);
  CHECK(rs.complete);
  CHECK(rs.planar);
  CHECK(rs.genus == 0);
  BoundaryTracer tr(g, rs.rotation);
  CHECK(tr.count({}) == cyclomatic_number(g) + 1);

  // figure eight: nested default is already planar
  auto f = fig8();
  auto rf = planar_rotation(f);
  CHECK(rf.planar);
  CHECK(rf.rotation.at == default_rotation(f).at);

  for (auto gg : {k4(), prism(), dumbbell(), loop_graph()}) {
    auto r = planar_rotation(gg);
    CHECK(r.complete);
    CHECK(r.planar);
    BoundaryTracer t(gg, r.rotation);
    CHECK(t.count({}) == cyclomatic_number(gg) + 1);
  }

  // tiny cap forces the incomplete fallback
  auto rk = planar_rotation(k4(), 1);
  CHECK(!rk.complete);
}

TEST_CASE("single vertex with no edges is a disk") {
  auto g = MultiGraph::create("dot", {"v"}, {}, true);
  auto p = make_patch(g, default_rotation(g), {});
  auto r = surface_class(p);
  CHECK(r.b == 1);
  CHECK(r.orientable);
  CHECK(*r.genus == 0);
  CHECK(*r.capped_genus == 0);
  REQUIRE(r.traces.size() == 1);
  CHECK(r.traces[0].empty());
}
