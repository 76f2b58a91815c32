#pragma once
// Connected multigraph with string ids; loops and parallel edges allowed.
// Edges are stored sorted by id, and every bit-vector downstream (twist
// vectors, cycle masks) indexes edges in that order. Vertices keep their
// input order; vertex 0 is the root for all deterministic traversals.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clc {

struct graph_error : std::runtime_error {
  explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

// One end of an edge: (edge index, end 0/1). A degree-d vertex carries d
// darts; a loop contributes both of its darts to the same vertex.
struct Dart {
  int edge = -1;
  int end = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct EdgeRec {
  std::string id;
  std::array<int, 2> ends;  // vertex indices
  bool is_loop() const { return ends[0] == ends[1]; }
};

// Input form of an edge, by vertex id.
struct EdgeSpec {
  std::string id;
  std::string u, v;
};

class MultiGraph {
 public:
  MultiGraph() = default;

  // Validates: non-empty vertex set, unique ids, known endpoints, connected,
  // m <= 64 (bit-vector layouts), and -- unless allow_degree_two -- no vertex
  // of degree exactly 2.
  static MultiGraph create(std::string name, std::vector<std::string> vertices,
                           const std::vector<EdgeSpec>& edges,
                           bool allow_degree_two = false) {
    MultiGraph g;
    g.name_ = std::move(name);
    g.vertex_ids_ = std::move(vertices);
    g.allow_degree_two_ = allow_degree_two;
    if (g.vertex_ids_.empty()) throw graph_error("graph has no vertices");
    for (int i = 0; i < (int)g.vertex_ids_.size(); ++i) {
      if (g.vertex_ids_[i].empty()) throw graph_error("empty vertex id");
      if (!g.vindex_.emplace(g.vertex_ids_[i], i).second)
        throw graph_error("duplicate vertex id: " + g.vertex_ids_[i]);
    }
    if (edges.size() > 64) throw graph_error("more than 64 edges unsupported");
    std::vector<EdgeSpec> sorted = edges;
    std::sort(sorted.begin(), sorted.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    for (const EdgeSpec& e : sorted) {
      if (e.id.empty()) throw graph_error("empty edge id");
      auto u = g.vindex_.find(e.u);
      auto v = g.vindex_.find(e.v);
      if (u == g.vindex_.end()) throw graph_error("unknown endpoint '" + e.u + "' of edge " + e.id);
      if (v == g.vindex_.end()) throw graph_error("unknown endpoint '" + e.v + "' of edge " + e.id);
      int idx = (int)g.edges_.size();
      if (!g.eindex_.emplace(e.id, idx).second)
        throw graph_error("duplicate edge id: " + e.id);
      g.edges_.push_back(EdgeRec{e.id, {u->second, v->second}});
    }
    g.build_darts();
    if (!g.connected()) throw graph_error("graph is not connected");
    if (!allow_degree_two) {
      for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2)
          throw graph_error("vertex '" + g.vertex_ids_[v] +
                            "' has degree 2 (pass allow_degree_two to accept)");
    }
    return g;
  }

  const std::string& name() const { return name_; }
  bool allow_degree_two() const { return allow_degree_two_; }
  int vertex_count() const { return (int)vertex_ids_.size(); }
  int edge_count() const { return (int)edges_.size(); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const EdgeRec& edge(int e) const { return edges_[e]; }
  const std::vector<EdgeRec>& edges() const { return edges_; }

  int vertex_index(const std::string& id) const {
    auto it = vindex_.find(id);
    if (it == vindex_.end()) throw graph_error("unknown vertex id: " + id);
    return it->second;
  }
  int edge_index(const std::string& id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end()) throw graph_error("unknown edge id: " + id);
    return it->second;
  }
  bool has_vertex(const std::string& id) const { return vindex_.count(id) > 0; }
  bool has_edge(const std::string& id) const { return eindex_.count(id) > 0; }

  // Vertex carrying the given dart.
  int dart_vertex(Dart d) const { return edges_[d.edge].ends[d.end]; }
  // Darts at v in (edge id, end) order -- also the default rotation.
  const std::vector<Dart>& darts_at(int v) const { return darts_[v]; }
  int degree(int v) const { return (int)darts_[v].size(); }
  int degree(const std::string& vid) const { return degree(vertex_index(vid)); }

  bool connected() const {
    if (vertex_ids_.empty()) return false;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Dart& d : darts_[v]) {
        int w = edges_[d.edge].ends[1 - d.end];
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == vertex_count();
  }

 private:
  void build_darts() {
    darts_.assign(vertex_count(), {});
    for (int e = 0; e < edge_count(); ++e)
      for (int end = 0; end < 2; ++end)
        darts_[edges_[e].ends[end]].push_back(Dart{e, end});
    // Edges are id-sorted, so per-vertex dart lists are already in
    // (edge id, end) order.
  }

  std::string name_;
  std::vector<std::string> vertex_ids_;
  std::vector<EdgeRec> edges_;
  std::vector<std::vector<Dart>> darts_;
  std::map<std::string, int> vindex_;
  std::map<std::string, int> eindex_;
  bool allow_degree_two_ = false;
};

// Cyclic order of darts around each vertex.
struct RotationSystem {
  std::vector<std::vector<Dart>> at;  // indexed by vertex
};

// Darts ordered by (edge id, end index) at every vertex.
inline RotationSystem default_rotation(const MultiGraph& g) {
  RotationSystem r;
  r.at.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) r.at.push_back(g.darts_at(v));
  return r;
}

inline void validate_rotation(const MultiGraph& g, const RotationSystem& rot) {
  if ((int)rot.at.size() != g.vertex_count())
    throw graph_error("rotation system does not cover every vertex");
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<Dart> got = rot.at[v];
    std::sort(got.begin(), got.end());
    if (got != g.darts_at(v))
      throw graph_error("rotation at vertex '" + g.vertex_id(v) +
                        "' does not list exactly its darts");
  }
}

// Id-level image of a rotation, for transfer across graphs that share
// edge ids but not edge indices.
using DartIdSeq = std::vector<std::pair<std::string, int>>;

inline DartIdSeq rotation_to_ids(const MultiGraph& g, const std::vector<Dart>& seq) {
  DartIdSeq out;
  out.reserve(seq.size());
  for (const Dart& d : seq) out.emplace_back(g.edge(d.edge).id, d.end);
  return out;
}

inline std::vector<Dart> rotation_from_ids(const MultiGraph& g, const DartIdSeq& seq) {
  std::vector<Dart> out;
  out.reserve(seq.size());
  for (const auto& [id, end] : seq) out.push_back(Dart{g.edge_index(id), end});
  return out;
}

// ----- connectivity helpers -----

// Connectivity of the graph with one edge removed (loops never disconnect).
inline bool connected_without_edge(const MultiGraph& g, int skip) {
  if (g.vertex_count() == 1) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Dart& d : g.darts_at(v)) {
      if (d.edge == skip) continue;
      int w = g.edge(d.edge).ends[1 - d.end];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

// Bridge edges (sorted by edge index, i.e. by id).
inline std::vector<int> bridges(const MultiGraph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) continue;
    // Parallel edges are never bridges.
    bool parallel = false;
    for (int f = 0; f < g.edge_count() && !parallel; ++f) {
      if (f == e) continue;
      auto a = g.edge(e).ends, b = g.edge(f).ends;
      if ((a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0]))
        parallel = true;
    }
    if (parallel) continue;
    if (!connected_without_edge(g, e)) out.push_back(e);
  }
  return out;
}

inline uint64_t bridge_mask(const MultiGraph& g) {
  uint64_t m = 0;
  for (int e : bridges(g)) m |= (uint64_t{1} << e);
  return m;
}

// ----- contraction and the cyclic part -----

struct ContractionResult {
  MultiGraph graph;
  std::map<std::string, std::string> vertex_map;  // old id -> surviving id
};

// Contract a non-loop edge; the lexicographically smaller endpoint id
// survives. The result admits degree-2 vertices.
inline ContractionResult contract_edge(const MultiGraph& g, const std::string& edge_id) {
  int e = g.edge_index(edge_id);
  if (g.edge(e).is_loop()) throw graph_error("cannot contract loop edge " + edge_id);
  const std::string u = g.vertex_id(g.edge(e).ends[0]);
  const std::string v = g.vertex_id(g.edge(e).ends[1]);
  const std::string keep = std::min(u, v);
  const std::string drop = (keep == u) ? v : u;

  ContractionResult res;
  for (const auto& id : g.vertex_ids()) res.vertex_map[id] = (id == drop) ? keep : id;
  std::vector<std::string> verts;
  for (const auto& id : g.vertex_ids())
    if (id != drop) verts.push_back(id);
  std::vector<EdgeSpec> specs;
  for (int f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    specs.push_back(EdgeSpec{g.edge(f).id,
                             res.vertex_map[g.vertex_id(g.edge(f).ends[0])],
                             res.vertex_map[g.vertex_id(g.edge(f).ends[1])]});
  }
  res.graph = MultiGraph::create(g.name(), std::move(verts), specs, true);
  return res;
}

struct CyclicPart {
  MultiGraph graph;
  // original edge id -> surviving edge id it was merged into, or "" if it
  // collapsed (pendant-tree edges).
  std::map<std::string, std::string> edge_map;
  std::map<std::string, std::string> vertex_map;
  bool changed = false;
};

// Repeatedly contract pendant edges, then suppress degree-2 vertices by
// contracting the lexicographically smaller incident edge. Stops at graphs
// whose only degree-2 vertices are lone loop carriers (single-vertex loop).
inline CyclicPart cyclic_part(const MultiGraph& g) {
  CyclicPart res;
  std::map<std::string, std::string> absorb;  // edge -> absorbing edge
  std::set<std::string> collapsed;
  for (const auto& id : g.vertex_ids()) res.vertex_map[id] = id;

  MultiGraph cur = g;
  bool changed = false;
  auto merge_vertex_map = [&](const std::map<std::string, std::string>& step) {
    for (auto& [orig, now] : res.vertex_map) {
      auto it = step.find(now);
      if (it != step.end()) now = it->second;
    }
  };

  for (;;) {
    int pendant = -1, deg2 = -1;
    for (int v = 0; v < cur.vertex_count() && pendant < 0; ++v)
      if (cur.degree(v) == 1) pendant = v;
    if (pendant >= 0) {
      const std::string eid = cur.edge(cur.darts_at(pendant)[0].edge).id;
      collapsed.insert(eid);
      auto step = contract_edge(cur, eid);
      merge_vertex_map(step.vertex_map);
      cur = std::move(step.graph);
      changed = true;
      continue;
    }
    for (int v = 0; v < cur.vertex_count() && deg2 < 0; ++v) {
      if (cur.degree(v) != 2) continue;
      const auto& ds = cur.darts_at(v);
      if (ds[0].edge == ds[1].edge) continue;  // lone loop: terminal case
      deg2 = v;
    }
    if (deg2 < 0) break;
    const auto& ds = cur.darts_at(deg2);
    const std::string a = cur.edge(ds[0].edge).id;
    const std::string b = cur.edge(ds[1].edge).id;
    const std::string gone = std::min(a, b);
    absorb[gone] = std::max(a, b);
    auto step = contract_edge(cur, gone);
    merge_vertex_map(step.vertex_map);
    cur = std::move(step.graph);
    changed = true;
  }

  for (int e = 0; e < g.edge_count(); ++e) {
    std::string x = g.edge(e).id;
    while (absorb.count(x)) x = absorb[x];
    res.edge_map[g.edge(e).id] = collapsed.count(x) ? std::string{} : x;
  }
  res.changed = changed;
  if (changed) {
    // Rebuild under a derived name so reports can tell the two apart.
    std::vector<EdgeSpec> specs;
    for (const auto& er : cur.edges())
      specs.push_back(EdgeSpec{er.id, cur.vertex_id(er.ends[0]), cur.vertex_id(er.ends[1])});
    res.graph = MultiGraph::create(g.name() + ".cp", cur.vertex_ids(), specs, true);
  } else {
    res.graph = cur;
  }
  return res;
}

inline bool is_cyclic_part(const MultiGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    if (d == 1) return false;
    if (d == 2) {
      const auto& ds = g.darts_at(v);
      if (ds[0].edge != ds[1].edge) return false;
    }
  }
  return true;
}

// Number of non-bridge edges of the cyclic part: the exponent of the patch
// count.
inline int m_bc(const MultiGraph& g) {
  CyclicPart cp = cyclic_part(g);
  return cp.graph.edge_count() - (int)bridges(cp.graph).size();
}

// ----- vertex expansion -----

struct ExpansionResult {
  MultiGraph graph;
  RotationSystem rotation;                 // rotation on the new graph
  std::vector<std::string> expansion_edges;
  int next_expansion_index = 0;
};

namespace detail {
inline std::string fresh_vertex_id(const MultiGraph& g, const std::string& base,
                                   int k, const std::vector<std::string>& taken) {
  std::string id = base + "#" + std::to_string(k);
  auto used = [&](const std::string& s) {
    if (g.has_vertex(s)) return true;
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  while (used(id)) id += "'";
  return id;
}
}  // namespace detail

// Replace a vertex of degree d >= 4 by a path of d-2 cubic vertices, fanning
// the rotation out along the path: the first new vertex takes the first two
// darts, interior ones take one each, the last takes the final two. The
// expanded rotation is the planar fan, so contracting the expansion edges
// (untwisted) restores the original patch.
inline ExpansionResult expand_vertex(const MultiGraph& g, const RotationSystem& rot,
                                     const std::string& vid, int next_expansion_index = 0) {
  validate_rotation(g, rot);
  int v = g.vertex_index(vid);
  int d = g.degree(v);
  if (d < 4) throw graph_error("expand_vertex needs degree >= 4 at " + vid);
  const std::vector<Dart>& fan = rot.at[v];

  int nw = d - 2;  // new vertices
  std::vector<std::string> wids;
  for (int k = 0; k < nw; ++k)
    wids.push_back(detail::fresh_vertex_id(g, vid, k, wids));
  ExpansionResult res;
  res.next_expansion_index = next_expansion_index;
  std::vector<std::string> xids;
  for (int j = 0; j < nw - 1; ++j) {
    std::string id;
    do {
      id = "_x" + std::to_string(res.next_expansion_index++);
    } while (g.has_edge(id));
    xids.push_back(id);
  }
  res.expansion_edges = xids;

  // Which new vertex each fan position lands on.
  auto fan_vertex = [&](int i) {
    if (i <= 1) return 0;
    if (i >= d - 2) return nw - 1;
    return i - 1;
  };

  std::vector<std::string> verts;
  for (const auto& id : g.vertex_ids())
    if (id != vid) verts.push_back(id);
  for (const auto& id : wids) verts.push_back(id);

  // Endpoint remap happens dart-by-dart so loops at v split correctly.
  std::map<std::pair<int, int>, int> dart_to_w;  // (edge,end) -> fan pos
  for (int i = 0; i < d; ++i) dart_to_w[{fan[i].edge, fan[i].end}] = fan_vertex(i);
  std::vector<EdgeSpec> specs;
  for (int e = 0; e < g.edge_count(); ++e) {
    std::array<std::string, 2> ends;
    for (int end = 0; end < 2; ++end) {
      int w = g.edge(e).ends[end];
      if (w != v) {
        ends[end] = g.vertex_id(w);
      } else {
        ends[end] = wids[dart_to_w.at({e, end})];
      }
    }
    specs.push_back(EdgeSpec{g.edge(e).id, ends[0], ends[1]});
  }
  for (int j = 0; j < nw - 1; ++j)
    specs.push_back(EdgeSpec{xids[j], wids[j], wids[j + 1]});

  res.graph = MultiGraph::create(g.name(), verts, specs, g.allow_degree_two());

  // Rotation transfer: untouched vertices keep their cyclic orders; the new
  // path vertices get (prev expansion dart, fan darts..., next expansion dart)
  // in the planar-fan arrangement.
  res.rotation.at.assign(res.graph.vertex_count(), {});
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == v) continue;
    DartIdSeq ids = rotation_to_ids(g, rot.at[w]);
    res.rotation.at[res.graph.vertex_index(g.vertex_id(w))] =
        rotation_from_ids(res.graph, ids);
  }
  auto dart_of = [&](const Dart& old) {
    return Dart{res.graph.edge_index(g.edge(old.edge).id), old.end};
  };
  for (int k = 0; k < nw; ++k) {
    std::vector<Dart> seq;
    if (k == 0) {
      seq = {dart_of(fan[0]), dart_of(fan[1]), Dart{res.graph.edge_index(xids[0]), 0}};
    } else if (k == nw - 1) {
      seq = {Dart{res.graph.edge_index(xids[k - 1]), 1}, dart_of(fan[d - 2]),
             dart_of(fan[d - 1])};
    } else {
      seq = {Dart{res.graph.edge_index(xids[k - 1]), 1}, dart_of(fan[k + 1]),
             Dart{res.graph.edge_index(xids[k]), 0}};
    }
    res.rotation.at[res.graph.vertex_index(wids[k])] = std::move(seq);
  }
  validate_rotation(res.graph, res.rotation);
  return res;
}

// Expand every vertex of degree >= 4 (lexicographically smallest first).
// Idempotent on graphs of maximum degree 3.
inline ExpansionResult cubic_resolution(const MultiGraph& g, const RotationSystem& rot) {
  ExpansionResult cur;
  cur.graph = g;
  cur.rotation = rot;
  cur.next_expansion_index = 0;
  for (;;) {
    std::string pick;
    for (int v = 0; v < cur.graph.vertex_count(); ++v) {
      if (cur.graph.degree(v) >= 4) {
        const std::string& id = cur.graph.vertex_id(v);
        if (pick.empty() || id < pick) pick = id;
      }
    }
    if (pick.empty()) break;
    ExpansionResult next =
        expand_vertex(cur.graph, cur.rotation, pick, cur.next_expansion_index);
    for (const auto& x : cur.expansion_edges) next.expansion_edges.push_back(x);
    std::sort(next.expansion_edges.begin(), next.expansion_edges.end());
    cur = std::move(next);
  }
  return cur;
}

// ----- isomorphism -----

struct Isomorphism {
  std::vector<int> vmap;  // g1 vertex index -> g2 vertex index
  std::vector<int> emap;  // g1 edge index -> g2 edge index
};

namespace detail {

// Multiset of edges between each vertex pair, keyed by sorted index pair.
inline std::map<std::pair<int, int>, std::vector<int>> pair_classes(const MultiGraph& g) {
  std::map<std::pair<int, int>, std::vector<int>> cls;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto ends = g.edge(e).ends;
    cls[{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])}].push_back(e);
  }
  return cls;
}

inline bool vmap_preserves_edges(const MultiGraph& g1, const MultiGraph& g2,
                                 const std::vector<int>& vmap) {
  auto c1 = pair_classes(g1), c2 = pair_classes(g2);
  if (c1.size() != c2.size()) return false;
  for (const auto& [key, edges] : c1) {
    std::pair<int, int> mapped{vmap[key.first], vmap[key.second]};
    if (mapped.first > mapped.second) std::swap(mapped.first, mapped.second);
    auto it = c2.find(mapped);
    if (it == c2.end() || it->second.size() != edges.size()) return false;
  }
  return true;
}

inline void all_vertex_bijections(const MultiGraph& g1, const MultiGraph& g2,
                                  const std::function<bool(const std::vector<int>&)>& emit) {
  int n = g1.vertex_count();
  if (n != g2.vertex_count()) return;
  auto signature = [](const MultiGraph& g, int v) {
    int loops = 0;
    for (const Dart& d : g.darts_at(v))
      if (g.edge(d.edge).is_loop()) ++loops;
    return std::pair<int, int>{g.degree(v), loops};
  };
  std::vector<int> vmap(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return emit(vmap);
    auto sig = signature(g1, v);
    for (int w = 0; w < n; ++w) {
      if (used[w] || signature(g2, w) != sig) continue;
      // Partial consistency: edges from v to already-mapped vertices.
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        int c1 = 0, c2 = 0;
        for (const auto& er : g1.edges())
          if ((er.ends[0] == v && er.ends[1] == u) || (er.ends[0] == u && er.ends[1] == v)) ++c1;
        for (const auto& er : g2.edges())
          if ((er.ends[0] == w && er.ends[1] == vmap[u]) ||
              (er.ends[0] == vmap[u] && er.ends[1] == w))
            ++c2;
        ok = (c1 == c2);
      }
      if (!ok) continue;
      vmap[v] = w;
      used[w] = 1;
      if (rec(v + 1)) return true;
      used[w] = 0;
      vmap[v] = -1;
    }
    return false;
  };
  rec(0);
}

inline std::vector<int> edge_map_for(const MultiGraph& g1, const MultiGraph& g2,
                                     const std::vector<int>& vmap) {
  // Parallel edges are matched in id order within each class.
  std::vector<int> emap(g1.edge_count(), -1);
  auto c2 = pair_classes(g2);
  std::map<std::pair<int, int>, int> cursor;
  for (const auto& [key, edges] : pair_classes(g1)) {
    std::pair<int, int> mapped{vmap[key.first], vmap[key.second]};
    if (mapped.first > mapped.second) std::swap(mapped.first, mapped.second);
    const auto& targets = c2.at(mapped);
    int& k = cursor[mapped];
    for (int e : edges) emap[e] = targets[k++];
  }
  return emap;
}

}  // namespace detail

inline std::optional<Isomorphism> find_isomorphism(const MultiGraph& g1, const MultiGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  std::optional<Isomorphism> found;
  detail::all_vertex_bijections(g1, g2, [&](const std::vector<int>& vmap) {
    if (!detail::vmap_preserves_edges(g1, g2, vmap)) return false;
    found = Isomorphism{vmap, detail::edge_map_for(g1, g2, vmap)};
    return true;  // stop at the first witness
  });
  return found;
}

inline bool are_isomorphic(const MultiGraph& g1, const MultiGraph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

// Every automorphism as (vertex map, edge map); parallel classes contribute
// all edge bijections, so the list is the full automorphism group action on
// edges.
inline std::vector<Isomorphism> automorphisms(const MultiGraph& g) {
  std::vector<Isomorphism> out;
  detail::all_vertex_bijections(g, g, [&](const std::vector<int>& vmap) {
    if (!detail::vmap_preserves_edges(g, g, vmap)) return false;
    // Expand to all edge bijections: permute within each parallel class.
    auto c2 = detail::pair_classes(g);
    std::vector<std::vector<int>> slots;   // per class: target edges
    std::vector<std::vector<int>> sources; // per class: source edges
    for (const auto& [key, edges] : detail::pair_classes(g)) {
      std::pair<int, int> mapped{vmap[key.first], vmap[key.second]};
      if (mapped.first > mapped.second) std::swap(mapped.first, mapped.second);
      sources.push_back(edges);
      slots.push_back(c2.at(mapped));
    }
    std::vector<int> emap(g.edge_count(), -1);
    std::function<void(size_t)> rec = [&](size_t c) {
      if (c == sources.size()) {
        out.push_back(Isomorphism{vmap, emap});
        return;
      }
      std::vector<int> perm = slots[c];
      std::sort(perm.begin(), perm.end());
      do {
        for (size_t i = 0; i < sources[c].size(); ++i) emap[sources[c][i]] = perm[i];
        rec(c + 1);
      } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
    return false;  // keep enumerating vertex maps
  });
  return out;
}

}  // namespace clc
