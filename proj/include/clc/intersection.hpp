#pragma once
// Intersection pattern of a cycle basis. One H-vertex per basis cycle; one
// H-edge per graph edge shared by two cycles; one extra H-edge per vertex
// shared by two cycles that touches none of their shared edges (such a
// vertex has degree >= 4). H may have parallel edges.
//
// On top of H we enumerate simple paths (constant paths included) and
// unordered tuples of vertex-disjoint simple paths. The tuple count p feeds
// the strip-count bound and the constructive patch search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clc/cycle_space.hpp"
#include "clc/multigraph.hpp"

namespace clc {

struct HEdge {
  int i = 0, j = 0;         // basis cycle indices, i < j
  bool vertex_type = false; // true: carrier is a shared vertex id
  std::string carrier;
};

struct HGraph {
  int q = 0;
  std::vector<HEdge> edges;
};

inline HGraph build_H(const MultiGraph& g, const CycleBasis& basis) {
  HGraph h;
  h.q = basis.q;
  std::vector<std::vector<int>> verts;
  for (int i = 0; i < basis.q; ++i) verts.push_back(cycle_vertices(g, basis.cycles[i]));
  for (int i = 0; i < basis.q; ++i) {
    for (int j = i + 1; j < basis.q; ++j) {
      EdgeSet shared = basis.cycles[i] & basis.cycles[j];
      for (int e = 0; e < g.edge_count(); ++e)
        if (shared.test(e)) h.edges.push_back(HEdge{i, j, false, g.edge(e).id});
      for (int v : verts[i]) {
        if (!std::binary_search(verts[j].begin(), verts[j].end(), v)) continue;
        bool clear = true;
        for (const Dart& d : g.darts_at(v))
          if (shared.test(d.edge)) { clear = false; break; }
        if (clear) h.edges.push_back(HEdge{i, j, true, g.vertex_id(v)});
      }
    }
  }
  return h;
}

// A simple path in H: the vertex sequence plus one H-edge index per step.
// A single vertex with no edges is a constant path. Non-constant paths are
// stored with the smaller endpoint first.
struct HPath {
  std::vector<int> vertices;
  std::vector<int> edges;

  bool constant() const { return edges.empty(); }
  friend bool operator==(const HPath& a, const HPath& b) = default;
};

inline bool path_less(const HPath& a, const HPath& b) {
  if (a.vertices.size() != b.vertices.size())
    return a.vertices.size() < b.vertices.size();
  if (a.vertices != b.vertices) return a.vertices < b.vertices;
  return a.edges < b.edges;
}

// All simple paths of H, constants first, then by length / vertex sequence /
// edge choice. Parallel H-edges give distinct paths.
inline std::vector<HPath> simple_paths(const HGraph& h) {
  std::vector<HPath> out;
  for (int v = 0; v < h.q; ++v) out.push_back(HPath{{v}, {}});

  std::vector<std::vector<std::pair<int, int>>> adj(h.q);  // (H-edge idx, other)
  for (int k = 0; k < (int)h.edges.size(); ++k) {
    adj[h.edges[k].i].push_back({k, h.edges[k].j});
    adj[h.edges[k].j].push_back({k, h.edges[k].i});
  }

  std::vector<char> used(h.q, 0);
  HPath cur;
  std::function<void(int)> grow = [&](int v) {
    for (auto [k, w] : adj[v]) {
      if (used[w]) continue;
      cur.vertices.push_back(w);
      cur.edges.push_back(k);
      used[w] = 1;
      if (cur.vertices.front() < w) out.push_back(cur);  // canonical direction
      grow(w);
      used[w] = 0;
      cur.vertices.pop_back();
      cur.edges.pop_back();
    }
  };
  for (int s = 0; s < h.q; ++s) {
    cur = HPath{{s}, {}};
    used.assign(h.q, 0);
    used[s] = 1;
    grow(s);
  }
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

// Unordered tuples of pairwise vertex-disjoint paths, as index lists into
// the path set (ascending). Tuples are emitted in lexicographic order of
// their index lists; with the path order above the four theta tuples come
// out as (1), (2), (12), (1)(2).
inline std::vector<std::vector<int>> disjoint_tuples(const std::vector<HPath>& paths,
                                                     uint64_t cap = 5000000) {
  int n = (int)paths.size();
  std::vector<uint64_t> masks(n, 0);
  for (int i = 0; i < n; ++i) {
    if (paths[i].vertices.size() > 64) throw graph_error("H too large for tuple masks");
    for (int v : paths[i].vertices) masks[i] |= (uint64_t{1} << v);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, uint64_t)> rec = [&](int from, uint64_t taken) {
    for (int i = from; i < n; ++i) {
      if (masks[i] & taken) continue;
      cur.push_back(i);
      if ((uint64_t)out.size() >= cap) throw graph_error("disjoint tuple cap exceeded");
      out.push_back(cur);
      rec(i + 1, taken | masks[i]);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

inline uint64_t count_disjoint_tuples(const std::vector<HPath>& paths) {
  int n = (int)paths.size();
  std::vector<uint64_t> masks(n, 0);
  for (int i = 0; i < n; ++i) {
    if (paths[i].vertices.size() > 64) throw graph_error("H too large for tuple masks");
    for (int v : paths[i].vertices) masks[i] |= (uint64_t{1} << v);
  }
  uint64_t total = 0;
  std::function<void(int, uint64_t)> rec = [&](int from, uint64_t taken) {
    for (int i = from; i < n; ++i) {
      if (masks[i] & taken) continue;
      ++total;
      rec(i + 1, taken | masks[i]);
    }
  };
  rec(0, 0);
  return total;
}

// p = number of nonempty tuples of disjoint simple paths.
inline uint64_t p_of(const MultiGraph& g, const CycleBasis& basis) {
  HGraph h = build_H(g, basis);
  return count_disjoint_tuples(simple_paths(h));
}

// p >= 2^q - 1 always, with equality exactly when H has no edges (then the
// only tuples are the nonempty sets of constant paths).
struct PathCountBound {
  uint64_t p = 0;
  uint64_t lower = 0;        // 2^q - 1
  uint64_t h_edges = 0;
  bool holds = false;        // p >= lower
  bool equality = false;     // p == lower
  bool equality_matches_edgeless = false;
};

inline PathCountBound check_p_lower_bound(const MultiGraph& g, const CycleBasis& basis) {
  if (basis.q > 40) throw graph_error("cyclomatic number too large for path counting");
  HGraph h = build_H(g, basis);
  PathCountBound r;
  r.p = count_disjoint_tuples(simple_paths(h));
  r.lower = (uint64_t{1} << basis.q) - 1;
  r.h_edges = h.edges.size();
  r.holds = r.p >= r.lower;
  r.equality = r.p == r.lower;
  r.equality_matches_edgeless = (r.equality == (r.h_edges == 0));
  return r;
}

}  // namespace clc
