#pragma once
// GF(2) cycle space of a multigraph. Edge sets are 64-bit masks in edge-id
// order (the MultiGraph edge index order).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clc/multigraph.hpp"

namespace clc {

// Subset of edges as a bit mask; bit e corresponds to edge index e.
struct EdgeSet {
  uint64_t bits = 0;

  static EdgeSet single(int e) { return EdgeSet{uint64_t{1} << e}; }
  bool test(int e) const { return (bits >> e) & 1; }
  void set(int e) { bits |= uint64_t{1} << e; }
  void reset(int e) { bits &= ~(uint64_t{1} << e); }
  int count() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  friend EdgeSet operator^(EdgeSet a, EdgeSet b) { return EdgeSet{a.bits ^ b.bits}; }
  friend EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet{a.bits & b.bits}; }
  friend EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet{a.bits | b.bits}; }
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;
};

inline EdgeSet sym_diff(EdgeSet a, EdgeSet b) { return a ^ b; }

inline std::vector<std::string> edge_ids_of(const MultiGraph& g, EdgeSet s) {
  std::vector<std::string> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (s.test(e)) out.push_back(g.edge(e).id);
  return out;
}

struct CycleBasis {
  EdgeSet tree;                 // spanning tree edges
  std::vector<EdgeSet> cycles;  // one fundamental cycle per non-tree edge
  int q = 0;                    // cyclomatic number = cycles.size()
  int c = 0;                    // max cycle length in the basis
  bool min_c = false;           // produced by the exhaustive min-c search
};

inline int cyclomatic_number(const MultiGraph& g) {
  return g.edge_count() - g.vertex_count() + 1;
}

namespace detail {

// BFS spanning tree from vertex 0, neighbors explored in edge-id order.
// Returns parent edge per vertex (-1 at the root).
inline std::vector<int> bfs_tree(const MultiGraph& g) {
  std::vector<int> parent_edge(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (const Dart& d : g.darts_at(v)) {
      int w = g.edge(d.edge).ends[1 - d.end];
      if (!seen[w]) {
        seen[w] = 1;
        parent_edge[w] = d.edge;
        queue.push_back(w);
      }
    }
  }
  return parent_edge;
}

// Tree path between two vertices: symmetric difference of their root paths.
inline EdgeSet tree_path(const MultiGraph& g, const std::vector<int>& parent_edge,
                         int u, int v) {
  auto to_root = [&](int x) {
    EdgeSet s;
    while (parent_edge[x] != -1) {
      int e = parent_edge[x];
      s.set(e);
      const auto& ends = g.edge(e).ends;
      x = (ends[0] == x) ? ends[1] : ends[0];
    }
    return s;
  };
  return to_root(u) ^ to_root(v);
}

}  // namespace detail

// Fundamental basis from the BFS spanning tree (root = first vertex, edges
// explored in id order). Loops contribute single-edge cycles.
inline CycleBasis fundamental_basis(const MultiGraph& g) {
  CycleBasis b;
  std::vector<int> parent_edge = detail::bfs_tree(g);
  std::vector<char> in_tree(g.edge_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (parent_edge[v] != -1) {
      in_tree[parent_edge[v]] = 1;
      b.tree.set(parent_edge[v]);
    }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    EdgeSet cyc = EdgeSet::single(e);
    const auto& ends = g.edge(e).ends;
    if (!g.edge(e).is_loop())
      cyc = cyc ^ detail::tree_path(g, parent_edge, ends[0], ends[1]);
    b.cycles.push_back(cyc);
  }
  b.q = (int)b.cycles.size();
  b.c = 0;
  for (const EdgeSet& cyc : b.cycles) b.c = std::max(b.c, cyc.count());
  return b;
}

// A basis from an arbitrary spanning tree given by its edge mask.
inline CycleBasis basis_from_tree(const MultiGraph& g, EdgeSet tree) {
  // Parent pointers by BFS over tree edges only.
  std::vector<int> parent_edge(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (const Dart& d : g.darts_at(v)) {
      if (!tree.test(d.edge)) continue;
      int w = g.edge(d.edge).ends[1 - d.end];
      if (!seen[w]) {
        seen[w] = 1;
        parent_edge[w] = d.edge;
        queue.push_back(w);
      }
    }
  }
  CycleBasis b;
  b.tree = tree;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (tree.test(e)) continue;
    EdgeSet cyc = EdgeSet::single(e);
    const auto& ends = g.edge(e).ends;
    if (!g.edge(e).is_loop())
      cyc = cyc ^ detail::tree_path(g, parent_edge, ends[0], ends[1]);
    b.cycles.push_back(cyc);
  }
  b.q = (int)b.cycles.size();
  for (const EdgeSet& cyc : b.cycles) b.c = std::max(b.c, cyc.count());
  return b;
}

// Exhaustive search over spanning trees for a fundamental basis minimizing
// the longest cycle; m <= 10 only (falls back to std::nullopt above that).
inline std::optional<CycleBasis> min_c_basis(const MultiGraph& g) {
  if (g.edge_count() > 10) return std::nullopt;
  int n = g.vertex_count(), m = g.edge_count();
  int want = n - 1;
  std::optional<CycleBasis> best;
  // Lexicographically first subset wins ties, so iterate in mask order of
  // ascending edge indices.
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if ((int)pick.size() == want) {
      EdgeSet tree;
      for (int e : pick) tree.set(e);
      // Spanning-tree test: acyclic on non-loops and connects everything.
      std::vector<int> uf(n);
      for (int i = 0; i < n; ++i) uf[i] = i;
      std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
      };
      int merges = 0;
      for (int e : pick) {
        const auto& ends = g.edge(e).ends;
        if (ends[0] == ends[1]) return;  // loop never in a tree
        int a = find(ends[0]), b = find(ends[1]);
        if (a == b) return;
        uf[a] = b;
        ++merges;
      }
      if (merges != want) return;
      CycleBasis b = basis_from_tree(g, tree);
      if (!best || b.c < best->c) {
        b.min_c = true;
        best = b;
      }
      return;
    }
    for (int e = from; e < m; ++e) {
      pick.push_back(e);
      rec(e + 1);
      pick.pop_back();
    }
  };
  if (want == 0) {
    CycleBasis b = basis_from_tree(g, EdgeSet{});
    b.min_c = true;
    best = b;
  } else {
    rec(0);
  }
  return best;
}

// Twist parity of a cycle: the number of switched edges it crosses, mod 2.
inline int cycle_twist_parity(EdgeSet cycle, EdgeSet twists) {
  return (cycle & twists).count() & 1;
}

// Membership in the cycle space: even degree at every vertex.
inline bool is_cycle_space_member(const MultiGraph& g, EdgeSet s) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!s.test(e)) continue;
    if (g.edge(e).is_loop()) continue;  // contributes 2 everywhere it sits
    deg[g.edge(e).ends[0]]++;
    deg[g.edge(e).ends[1]]++;
  }
  for (int d : deg)
    if (d & 1) return false;
  return true;
}

// Vertices touched by a cycle (endpoints of its edges), ascending.
inline std::vector<int> cycle_vertices(const MultiGraph& g, EdgeSet s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e)
    if (s.test(e)) {
      in[g.edge(e).ends[0]] = 1;
      in[g.edge(e).ends[1]] = 1;
    }
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

// Simple cycle: connected edge set in which every touched vertex has degree
// exactly 2 (a lone loop qualifies).
inline bool is_simple_cycle(const MultiGraph& g, EdgeSet s) {
  if (s.empty()) return false;
  std::vector<int> deg(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e)
    if (s.test(e)) {
      deg[g.edge(e).ends[0]]++;
      deg[g.edge(e).ends[1]]++;
    }
  std::vector<int> verts = cycle_vertices(g, s);
  for (int v : verts)
    if (deg[v] != 2) return false;
  // Connectivity over the cycle's edges.
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{verts[0]};
  seen[verts[0]] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Dart& d : g.darts_at(v)) {
      if (!s.test(d.edge)) continue;
      int w = g.edge(d.edge).ends[1 - d.end];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == (int)verts.size();
}

// All simple cycles of the graph (edge sets, deduplicated, ascending mask
// order). Desk-scale exhaustive scan over the cycle space when q is small,
// which is exactly how it gets used in lemma verification.
inline std::vector<EdgeSet> all_simple_cycles(const MultiGraph& g) {
  CycleBasis b = fundamental_basis(g);
  std::vector<EdgeSet> out;
  if (b.q > 20) throw graph_error("too many independent cycles for exhaustive scan");
  for (uint64_t k = 1; k < (uint64_t{1} << b.q); ++k) {
    EdgeSet s;
    for (int i = 0; i < b.q; ++i)
      if ((k >> i) & 1) s = s ^ b.cycles[i];
    if (!s.empty() && is_simple_cycle(g, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace clc
