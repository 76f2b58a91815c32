#pragma once
// Deterministic enumeration of small connected multigraphs that equal their
// own cyclic part (minimum degree 3; optionally the single-loop graph and the
// k-cycles via an explicit degree-two override), plus a sweep driver that runs
// the full verification battery over every generated graph and aggregates the
// outcomes.

#include <algorithm>
#include <cstdint>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clc/census.hpp"
#include "clc/cycle_space.hpp"
#include "clc/multigraph.hpp"
#include "clc/ribbon.hpp"

namespace clc {

// ----- catalog specification -----

struct CatalogSpec {
  // Upper bound on edge count; must lie in [1, 10] (hard safety cap).
  int max_edges = 8;
  // Keep only 3-regular graphs.
  bool cubic_only = false;
  // Keep only graphs whose bridge set is empty.
  bool bridgeless_only = false;
  // Permit loop edges in the enumeration (and the single-loop override graph).
  bool allow_loops = true;
  // Also emit the single-loop graph and the k-cycles (2 <= k <= max_edges).
  // These have degree-2 vertices, so the minimum-degree filter is relaxed for
  // exactly these two families; they bypass the cubic filter by design.
  bool include_degree_two_cyclic = false;
};

inline constexpr int kCatalogEdgeCap = 10;

inline void validate_spec(const CatalogSpec& spec) {
  if (spec.max_edges < 1) {
    throw graph_error("catalog spec: max_edges must be at least 1");
  }
  if (spec.max_edges > kCatalogEdgeCap) {
    throw graph_error("catalog spec: max_edges exceeds the safety cap of " +
                      std::to_string(kCatalogEdgeCap));
  }
}

// ----- generation -----

namespace detail {

// Build a MultiGraph from an explicit endpoint list.  Vertices are named
// v0..v{n-1} and edges e0..e{m-1} in the order given.
inline MultiGraph graph_from_pairs(const std::string& name, int n,
                                   const std::vector<std::pair<int, int>>& pairs,
                                   bool allow_degree_two = false) {
  std::vector<std::string> vertices;
  vertices.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<EdgeSpec> edges;
  edges.reserve(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    edges.push_back({"e" + std::to_string(i),
                     vertices[static_cast<size_t>(pairs[i].first)],
                     vertices[static_cast<size_t>(pairs[i].second)]});
  }
  return MultiGraph::create(name, vertices, edges, allow_degree_two);
}

// Connectivity of the endpoint list viewed as an abstract multigraph
// (isolated vertices count as disconnection).
inline bool pairs_connected(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n <= 0) return false;
  std::vector<int> parent(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) parent[static_cast<size_t>(v)] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  int components = n;
  for (const auto& [u, v] : pairs) {
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[static_cast<size_t>(ru)] = rv;
      --components;
    }
  }
  return components == 1;
}

// Cheap isomorphism-invariant fingerprint used to bucket candidates before
// running the exact isomorphism test.
inline std::string iso_fingerprint(const MultiGraph& g) {
  std::vector<int> degs;
  int loops = 0;
  for (int v = 0; v < g.vertex_count(); ++v) degs.push_back(g.degree(v));
  std::sort(degs.begin(), degs.end());
  std::map<std::pair<int, int>, int> mult;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.is_loop()) ++loops;
    auto ends = std::minmax(ed.ends[0], ed.ends[1]);
    ++mult[{ends.first, ends.second}];
  }
  std::vector<int> mults;
  for (const auto& [k, c] : mult) mults.push_back(c);
  std::sort(mults.begin(), mults.end());
  std::string key = std::to_string(g.vertex_count()) + ":" +
                    std::to_string(g.edge_count()) + ":" +
                    std::to_string(loops) + ":" +
                    std::to_string(std::popcount(bridge_mask(g))) + ":d";
  for (int d : degs) key += std::to_string(d) + ",";
  key += ":m";
  for (int c : mults) key += std::to_string(c) + ",";
  return key;
}

// Recursively extend a lexicographically nondecreasing sequence of endpoint
// pairs to a multiset of exactly `m` edges on `n` vertices, pruning branches
// whose remaining capacity cannot lift every vertex to degree 3.
inline void enumerate_pair_multisets(
    int n, int m, const std::vector<std::pair<int, int>>& universe,
    size_t from, std::vector<std::pair<int, int>>& chosen,
    std::vector<int>& degree, int deficit,
    const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  int remaining = m - static_cast<int>(chosen.size());
  if (deficit > 2 * remaining) return;  // cannot reach minimum degree 3
  if (remaining == 0) {
    if (deficit == 0 && pairs_connected(n, chosen)) emit(chosen);
    return;
  }
  for (size_t i = from; i < universe.size(); ++i) {
    const auto& [u, v] = universe[i];
    int drop = 0;
    if (u == v) {
      drop = std::min(2, std::max(0, 3 - degree[static_cast<size_t>(u)]));
      degree[static_cast<size_t>(u)] += 2;
    } else {
      drop = std::min(1, std::max(0, 3 - degree[static_cast<size_t>(u)])) +
             std::min(1, std::max(0, 3 - degree[static_cast<size_t>(v)]));
      degree[static_cast<size_t>(u)] += 1;
      degree[static_cast<size_t>(v)] += 1;
    }
    chosen.push_back(universe[i]);
    enumerate_pair_multisets(n, m, universe, i, chosen, degree, deficit - drop,
                             emit);
    chosen.pop_back();
    if (u == v) {
      degree[static_cast<size_t>(u)] -= 2;
    } else {
      degree[static_cast<size_t>(u)] -= 1;
      degree[static_cast<size_t>(v)] -= 1;
    }
  }
}

}  // namespace detail

// Generate all connected multigraphs with minimum degree 3 (equivalently:
// equal to their own cyclic part) and at most `max_edges` edges, filtered per
// the spec flags and deduplicated up to isomorphism.  Output order is
// deterministic: ascending edge count, then ascending vertex count, then the
// lexicographic order of the endpoint-pair multisets; override graphs (the
// single loop and the k-cycles) sit at the end of their (m, n) slot.
inline std::vector<MultiGraph> generate(const CatalogSpec& spec) {
  validate_spec(spec);
  std::vector<MultiGraph> out;
  std::vector<std::string> fingerprints;

  auto admit = [&](MultiGraph&& g) {
    std::string fp = detail::iso_fingerprint(g);
    for (size_t i = 0; i < out.size(); ++i) {
      if (fingerprints[i] == fp && are_isomorphic(out[i], g)) return;
    }
    fingerprints.push_back(std::move(fp));
    out.push_back(std::move(g));
  };

  for (int m = 1; m <= spec.max_edges; ++m) {
    // Minimum degree 3 forces 3n <= 2m.
    int n_max = (2 * m) / 3;
    for (int n = 1; n <= n_max; ++n) {
      std::vector<std::pair<int, int>> universe;
      for (int u = 0; u < n; ++u) {
        if (spec.allow_loops) universe.push_back({u, u});
        for (int v = u + 1; v < n; ++v) universe.push_back({u, v});
      }
      std::vector<std::pair<int, int>> chosen;
      std::vector<int> degree(static_cast<size_t>(n), 0);
      size_t seq = 0;
      detail::enumerate_pair_multisets(
          n, m, universe, 0, chosen, degree, 3 * n,
          [&](const std::vector<std::pair<int, int>>& pairs) {
            if (spec.cubic_only) {
              std::vector<int> deg(static_cast<size_t>(n), 0);
              for (const auto& [u, v] : pairs) {
                deg[static_cast<size_t>(u)] += (u == v) ? 2 : 1;
                if (u != v) deg[static_cast<size_t>(v)] += 1;
              }
              for (int d : deg) {
                if (d != 3) return;
              }
            }
            std::string name = "g" + std::to_string(m) + "_" +
                               std::to_string(n) + "_" + std::to_string(seq);
            MultiGraph g = detail::graph_from_pairs(name, n, pairs);
            if (spec.bridgeless_only && bridge_mask(g) != 0) return;
            ++seq;
            admit(std::move(g));
          });
    }
    if (spec.include_degree_two_cyclic) {
      if (m == 1 && spec.allow_loops) {
        out.push_back(detail::graph_from_pairs("loop", 1, {{0, 0}}, true));
        fingerprints.push_back(detail::iso_fingerprint(out.back()));
      }
      if (m >= 2) {
        std::vector<std::pair<int, int>> ring;
        for (int v = 0; v < m; ++v) ring.push_back({v, (v + 1) % m});
        out.push_back(detail::graph_from_pairs("cycle" + std::to_string(m), m,
                                               ring, true));
        fingerprints.push_back(detail::iso_fingerprint(out.back()));
      }
    }
  }
  return out;
}

// ----- sweep -----

// Per-graph outcome of the verification battery.
struct SweepRow {
  std::string name;
  int n = 0;
  int m = 0;
  int q = 0;
  int m_bc = 0;
  uint64_t patch_count = 0;
  uint64_t S = 0;
  uint64_t O = 0;
  uint64_t N = 0;
  uint64_t p = 0;
  int c = 0;
  std::optional<uint64_t> strips_iso;
  bool rotation_planar = false;
  std::vector<CheckRecord> checks;
  std::vector<ConjectureFlag> flags;
  std::vector<std::string> warnings;
};

struct SweepFinding {
  std::string graph;
  CheckRecord record;
};

struct SweepReport {
  CatalogSpec spec;
  int graph_count = 0;
  uint64_t checks_passed = 0;
  uint64_t checks_failed = 0;
  uint64_t checks_finding = 0;
  uint64_t flag_count = 0;
  std::vector<SweepRow> rows;
  std::vector<SweepFinding> failures;
  std::vector<SweepFinding> findings;
  bool any_fail() const { return checks_failed != 0; }
};

// Run the whole verification battery over every graph in the catalog.  Each
// graph is analyzed under its genus-minimizing rotation (planar whenever one
// exists), so the reported surfaces are the canonical drawings.  Census work
// inside each graph fans out to worker threads; rows are aggregated in
// generation order, so the report is byte-stable across worker counts.
inline SweepReport sweep(const CatalogSpec& spec,
                         const VerifyOptions& opts = {}) {
  SweepReport report;
  report.spec = spec;
  std::vector<MultiGraph> graphs = generate(spec);
  report.graph_count = static_cast<int>(graphs.size());
  for (const MultiGraph& g : graphs) {
    RotationSearch search = planar_rotation(g);
    VerifyOptions vo = opts;
    VerifyResult vr = verify_all(g, search.rotation, vo);
    SweepRow row;
    row.name = g.name();
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.q = vr.census.q;
    row.m_bc = vr.census.m_bc;
    row.patch_count = vr.census.patch_count;
    row.S = vr.census.S;
    row.O = vr.census.O;
    row.N = vr.census.N;
    row.p = vr.p;
    row.c = vr.basis.c;
    row.strips_iso = vr.strips_iso;
    row.rotation_planar = search.planar;
    row.checks = vr.checks;
    row.flags = vr.flags;
    row.warnings = vr.warnings;
    for (const CheckRecord& rec : vr.checks) {
      if (rec.status == "pass") {
        ++report.checks_passed;
      } else if (rec.status == "fail") {
        ++report.checks_failed;
        report.failures.push_back({row.name, rec});
      } else {
        ++report.checks_finding;
        report.findings.push_back({row.name, rec});
      }
    }
    report.flag_count += vr.flags.size();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace clc
