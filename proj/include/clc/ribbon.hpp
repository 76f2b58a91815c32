#pragma once
// Patches: a multigraph thickened along a rotation system, with a twist bit
// per edge (1 = the edge-strip is switched). Boundary circles are traced on
// an explicit arc model:
//   - every edge contributes two side arcs,
//   - every degree-d vertex contributes d corner arcs, the corner between
//     consecutive darts (h_i, h_{i+1}) joining (h_i, ccw) to (h_{i+1}, cw),
//   - an untwisted edge glues (end0,cw)<->(end1,ccw) and (end0,ccw)<->(end1,cw),
//     a twisted edge glues (end0,cw)<->(end1,cw) and (end0,ccw)<->(end1,ccw).
// Arc endpoints are (dart, side) pairs; each meets exactly one corner arc and
// one side arc, so the gluing decomposes into circles.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clc/cycle_space.hpp"
#include "clc/multigraph.hpp"

namespace clc {

using TwistVector = EdgeSet;  // bit e = edge e switched

// Drop twists on bridges: switching a bridge never changes the patch up to
// homeomorphism, so normalized patches carry 0 there.
inline TwistVector normalize_twists(const MultiGraph& g, TwistVector t) {
  return TwistVector{t.bits & ~bridge_mask(g)};
}

struct Patch {
  MultiGraph graph;
  RotationSystem rotation;
  TwistVector twists;  // normalized
};

inline Patch make_patch(const MultiGraph& g, const RotationSystem& rot, TwistVector t) {
  validate_rotation(g, rot);
  if (g.edge_count() < 64 && (t.bits >> g.edge_count()) != 0)
    throw graph_error("twist vector mentions edges beyond the graph");
  return Patch{g, rot, normalize_twists(g, t)};
}

// ----- boundary tracing -----

// Arc on the boundary: a side arc of an edge or a corner arc of a vertex.
struct BoundaryArc {
  enum Kind { side, corner } kind;
  int index;  // edge index for side arcs, vertex index for corners
  int which;  // side arc 0/1 within the edge; corner position within rotation
  friend bool operator==(const BoundaryArc&, const BoundaryArc&) = default;
};

struct BoundaryReport {
  int b = 0;
  int euler = 0;  // n - m of the carrier graph
  bool orientable = false;
  // Exactly one of genus/crosscaps is set once surface classification ran.
  std::optional<int> genus;
  std::optional<int> crosscaps;
  // For strips: the closed surface obtained by capping the boundary circle.
  std::optional<int> capped_genus;
  std::optional<int> capped_crosscaps;
  std::vector<std::vector<BoundaryArc>> traces;   // one cyclic arc walk per circle
  std::vector<EdgeSet> edge_support;              // edges visited an odd number of times
};

// Reusable tracer for one (graph, rotation): the corner pairing is fixed,
// only the side pairing depends on the twist vector. Node = (dart, side)
// encoded as dart*2 + side with side 0 = cw, 1 = ccw.
class BoundaryTracer {
 public:
  BoundaryTracer(const MultiGraph& g, const RotationSystem& rot) : g_(&g) {
    validate_rotation(g, rot);
    int nodes = 4 * g.edge_count();
    corner_.assign(nodes, -1);
    corner_which_.assign(nodes, -1);
    corner_vertex_.assign(nodes, -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto& seq = rot.at[v];
      int d = (int)seq.size();
      for (int i = 0; i < d; ++i) {
        const Dart& a = seq[i];
        const Dart& b = seq[(i + 1) % d];
        int na = node(a, 1);  // (h_i, ccw)
        int nb = node(b, 0);  // (h_{i+1}, cw)
        corner_[na] = nb;
        corner_[nb] = na;
        corner_which_[na] = corner_which_[nb] = i;
        corner_vertex_[na] = corner_vertex_[nb] = v;
      }
    }
    visited_.assign(nodes, 0);
  }

  int edge_count() const { return g_->edge_count(); }

  // Number of boundary circles for the given twists.
  int count(TwistVector t) {
    if (g_->edge_count() == 0) return 1;  // single vertex: a disk
    int nodes = 4 * g_->edge_count();
    std::fill(visited_.begin(), visited_.end(), 0);
    int circles = 0;
    for (int s = 0; s < nodes; ++s) {
      if (visited_[s]) continue;
      ++circles;
      int x = s;
      do {
        visited_[x] = 1;
        int y = side_partner(x, t);
        visited_[y] = 1;
        x = corner_[y];
      } while (x != s);
    }
    return circles;
  }

  // Full traces: per circle the alternating corner/side arc walk, plus the
  // odd-visit edge support.
  void trace(TwistVector t, std::vector<std::vector<BoundaryArc>>& traces,
             std::vector<EdgeSet>& support) {
    traces.clear();
    support.clear();
    if (g_->edge_count() == 0) {
      traces.push_back({});
      support.push_back({});
      return;
    }
    int nodes = 4 * g_->edge_count();
    std::fill(visited_.begin(), visited_.end(), 0);
    for (int s = 0; s < nodes; ++s) {
      if (visited_[s]) continue;
      std::vector<BoundaryArc> walk;
      EdgeSet sup;
      int x = s;
      do {
        // x enters a side arc of its edge, then the corner at the far end.
        visited_[x] = 1;
        int e = x / 4;
        walk.push_back(BoundaryArc{BoundaryArc::side, e, side_which(x, t)});
        sup = sym_diff(sup, EdgeSet::single(e));
        int y = side_partner(x, t);
        visited_[y] = 1;
        walk.push_back(BoundaryArc{BoundaryArc::corner, corner_vertex_[y], corner_which_[y]});
        x = corner_[y];
      } while (x != s);
      traces.push_back(std::move(walk));
      support.push_back(sup);
    }
  }

 private:
  static int node(Dart d, int side) { return (d.edge * 2 + d.end) * 2 + side; }

  // Side-arc partner of a node under the twist vector.
  int side_partner(int x, TwistVector t) const {
    int dart = x / 2, side = x & 1;
    int e = dart / 2, end = dart & 1;
    int oend = 1 - end;
    int oside = t.test(e) ? side : 1 - side;
    return ((e * 2 + oend) * 2) + oside;
  }

  // Which of the two side arcs of its edge the node lies on (0: the arc
  // containing (end0, cw); 1: the arc containing (end0, ccw)).
  int side_which(int x, TwistVector t) const {
    int dart = x / 2, side = x & 1;
    int end = dart & 1;
    int e = dart / 2;
    if (end == 0) return side;
    return t.test(e) ? side : 1 - side;
  }

  const MultiGraph* g_;
  std::vector<int> corner_;
  std::vector<int> corner_which_;
  std::vector<int> corner_vertex_;
  std::vector<char> visited_;
};

inline int boundary_count(const Patch& p) {
  BoundaryTracer tr(p.graph, p.rotation);
  return tr.count(p.twists);
}

inline bool is_strip(const Patch& p) { return boundary_count(p) == 1; }

// Orientable iff every cycle crosses an even number of switched edges;
// checked on a fundamental basis (basis-independent: parity is linear).
inline bool is_orientable(const MultiGraph& g, TwistVector t, const CycleBasis& basis) {
  for (const EdgeSet& cyc : basis.cycles)
    if (cycle_twist_parity(cyc, t)) return false;
  return true;
}

inline bool is_orientable(const Patch& p) {
  return is_orientable(p.graph, p.twists, fundamental_basis(p.graph));
}

// Boundary count, traces and surface classification in one report.
inline BoundaryReport surface_class(const Patch& p) {
  BoundaryReport r;
  BoundaryTracer tr(p.graph, p.rotation);
  tr.trace(p.twists, r.traces, r.edge_support);
  r.b = (int)r.traces.size();
  r.euler = p.graph.vertex_count() - p.graph.edge_count();
  r.orientable = is_orientable(p);
  int two_minus = 2 - r.b - r.euler;  // 2g or k
  if (r.orientable) {
    if (two_minus < 0 || (two_minus & 1))
      throw std::logic_error("orientable surface with chi+b not even: tracer bug");
    r.genus = two_minus / 2;
  } else {
    if (two_minus < 1)
      throw std::logic_error("non-orientable surface needs at least one crosscap: tracer bug");
    r.crosscaps = two_minus;
  }
  if (r.b == 1) {
    int closed = 2 - (r.euler + 1);
    if (r.orientable)
      r.capped_genus = closed / 2;
    else
      r.capped_crosscaps = closed;
  }
  return r;
}

// ----- patch moves -----

// Toggle the twist of one edge. On a bridge this is a no-op after
// normalization.
inline Patch switch_edge(const Patch& p, const std::string& edge_id) {
  int e = p.graph.edge_index(edge_id);
  TwistVector t = p.twists;
  t.bits ^= (uint64_t{1} << e);
  return make_patch(p.graph, p.rotation, t);
}

// Reverse the rotation at one vertex and toggle every non-loop edge with
// exactly one end there. A homeomorphism of the patch: boundary count,
// orientability and surface class are invariant.
inline Patch vertex_flip(const Patch& p, const std::string& vertex_id) {
  int v = p.graph.vertex_index(vertex_id);
  RotationSystem rot = p.rotation;
  std::reverse(rot.at[v].begin(), rot.at[v].end());
  TwistVector t = p.twists;
  for (int e = 0; e < p.graph.edge_count(); ++e) {
    const auto& ends = p.graph.edge(e).ends;
    if ((ends[0] == v) != (ends[1] == v)) t.bits ^= (uint64_t{1} << e);
  }
  return make_patch(p.graph, rot, t);
}

// ----- rotation search -----

struct RotationSearch {
  RotationSystem rotation;
  int genus = 0;       // genus of the untwisted patch under this rotation
  bool planar = false; // genus 0 reached
  bool complete = true; // false if the search space was too large to finish
};

// Deterministic search for a rotation system whose untwisted patch has as
// many boundary circles as possible (b = q+1 means a genus-0 embedding, the
// drawn-in-the-plane representation). First dart at each vertex is pinned,
// the rest run in lexicographic order; the first maximum wins. Graphs whose
// rotation space exceeds the cap fall back to the default rotation.
inline RotationSearch planar_rotation(const MultiGraph& g, uint64_t cap = 2000000) {
  RotationSearch out;
  int q = cyclomatic_number(g);
  uint64_t space = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    for (int k = 2; k < d; ++k) {
      space *= (uint64_t)k;
      if (space > cap) break;
    }
    if (space > cap) break;
  }
  if (space > cap) {
    out.rotation = default_rotation(g);
    BoundaryTracer tr(g, out.rotation);
    int b0 = tr.count(TwistVector{});
    out.genus = (q + 1 - b0) / 2;
    out.planar = (out.genus == 0);
    out.complete = false;
    return out;
  }

  // Odometer over per-vertex permutations of darts after the first.
  std::vector<std::vector<Dart>> base;
  for (int v = 0; v < g.vertex_count(); ++v) base.push_back(g.darts_at(v));
  std::vector<std::vector<int>> perm(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    for (int i = 1; i < d; ++i) perm[v].push_back(i);
  }
  int best_b = -1;
  RotationSystem best;
  std::function<void(int)> rec = [&](int v) {
    if (best_b == q + 1) return;  // genus 0 found, first hit kept
    if (v == g.vertex_count()) {
      RotationSystem rot;
      rot.at.resize(g.vertex_count());
      for (int w = 0; w < g.vertex_count(); ++w) {
        std::vector<Dart> seq;
        if (!base[w].empty()) {
          seq.push_back(base[w][0]);
          for (int i : perm[w]) seq.push_back(base[w][i]);
        }
        rot.at[w] = std::move(seq);
      }
      BoundaryTracer tr(g, rot);
      int b0 = tr.count(TwistVector{});
      if (b0 > best_b) {
        best_b = b0;
        best = rot;
      }
      return;
    }
    std::sort(perm[v].begin(), perm[v].end());
    do {
      rec(v + 1);
      if (best_b == q + 1) return;
    } while (std::next_permutation(perm[v].begin(), perm[v].end()));
  };
  rec(0);
  out.rotation = best;
  out.genus = (q + 1 - best_b) / 2;
  out.planar = (out.genus == 0);
  return out;
}

}  // namespace clc
