#pragma once
// Exhaustive census of patches over all normalized twist vectors, strip
// classification (orientable / non-orientable), iso-reduced strip counting,
// the switch relation on orientable strips and its fiber structure, bound
// checks, and the constructive patch attaining b = k + 1 from a tuple of
// disjoint paths in the intersection graph.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "clc/cycle_space.hpp"
#include "clc/intersection.hpp"
#include "clc/multigraph.hpp"
#include "clc/ribbon.hpp"

namespace clc {

// Thrown when an instance exceeds a configured size cap (distinct from bad
// input: callers map it to a separate exit code).
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ----- census core -----

struct PatchClass {
  uint16_t b = 0;
  bool orientable = false;
};

struct CensusOptions {
  int max_mbc = 24;
  int threads = 0;  // 0 = $CLC_THREADS if set, else hardware concurrency
};

inline int worker_count(int requested, uint64_t work_items) {
  int t = requested;
  if (t <= 0) {
    if (const char* env = std::getenv("CLC_THREADS")) t = std::atoi(env);
  }
  if (t <= 0) t = (int)std::thread::hardware_concurrency();
  if (t <= 0) t = 1;
  if ((uint64_t)t > work_items) t = (int)std::max<uint64_t>(1, work_items);
  return t;
}

struct Census {
  std::string graph_name;
  MultiGraph graph;
  RotationSystem rotation;
  std::vector<int> nonbridge;  // edge indices, ascending; bit i of a counter
  uint64_t bridge_bits = 0;
  int m_bc = 0;
  int q = 0;
  int b0 = 0;  // boundary circles of the untwisted patch
  uint64_t patch_count = 0;
  std::vector<PatchClass> classes;  // indexed by twist counter
  uint64_t S = 0, O = 0, N = 0;
  std::vector<uint64_t> strips;  // counters with b == 1, ascending
  std::vector<std::string> warnings;

  TwistVector expand(uint64_t counter) const {
    TwistVector t;
    for (size_t i = 0; i < nonbridge.size(); ++i)
      if (counter >> i & 1) t.set(nonbridge[i]);
    return t;
  }
  uint64_t compress(TwistVector t) const {
    uint64_t k = 0;
    for (size_t i = 0; i < nonbridge.size(); ++i)
      if (t.test(nonbridge[i])) k |= (uint64_t{1} << i);
    return k;
  }
  // All non-bridge edges switched.
  uint64_t px_counter() const { return patch_count - 1; }
  bool max_degree_le3() const {
    for (int v = 0; v < graph.vertex_count(); ++v)
      if (graph.degree(v) > 3) return false;
    return true;
  }
};

inline Census enumerate_patches(const MultiGraph& g, const RotationSystem& rot,
                                const CensusOptions& opts = {}) {
  validate_rotation(g, rot);
  Census c;
  c.graph_name = g.name();
  c.graph = g;
  c.rotation = rot;
  c.bridge_bits = bridge_mask(g);
  for (int e = 0; e < g.edge_count(); ++e)
    if (!(c.bridge_bits >> e & 1)) c.nonbridge.push_back(e);
  c.m_bc = (int)c.nonbridge.size();
  c.q = cyclomatic_number(g);
  if (!is_cyclic_part(g)) c.warnings.push_back("graph is not its own cyclic part");
  if (!c.max_degree_le3()) c.warnings.push_back("graph has vertices of degree > 3");
  if (c.m_bc > opts.max_mbc) {
    std::ostringstream os;
    os << "instance too large: " << c.m_bc << " non-bridge edges exceeds cap "
       << opts.max_mbc;
    throw resource_limit_error(os.str());
  }

  c.patch_count = uint64_t{1} << c.m_bc;
  c.classes.resize(c.patch_count);

  CycleBasis basis = fundamental_basis(g);
  BoundaryTracer probe(g, rot);
  c.b0 = probe.count({});

  auto fill = [&](uint64_t lo, uint64_t hi) {
    BoundaryTracer tr(g, rot);
    for (uint64_t k = lo; k < hi; ++k) {
      TwistVector t = c.expand(k);
      PatchClass& pc = c.classes[k];
      pc.b = (uint16_t)tr.count(t);
      pc.orientable = true;
      for (const EdgeSet& cyc : basis.cycles)
        if (cycle_twist_parity(cyc, t)) { pc.orientable = false; break; }
    }
  };
  int workers = worker_count(opts.threads, c.patch_count);
  if (workers <= 1) {
    fill(0, c.patch_count);
  } else {
    std::vector<std::thread> pool;
    uint64_t chunk = (c.patch_count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      uint64_t lo = chunk * w, hi = std::min(c.patch_count, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(fill, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (uint64_t k = 0; k < c.patch_count; ++k) {
    if (c.classes[k].b != 1) continue;
    ++c.S;
    c.strips.push_back(k);
    (c.classes[k].orientable ? c.O : c.N)++;
  }
  return c;
}

// Surface data for one class, derived from (b, orientable) and the Euler
// characteristic without re-tracing.
struct SurfaceInfo {
  int b = 0;
  bool orientable = false;
  int genus = 0;      // meaningful when orientable
  int crosscaps = 0;  // meaningful when not
  std::optional<int> capped_genus, capped_crosscaps;  // strips only
};

inline SurfaceInfo surface_of_class(const Census& c, uint64_t counter) {
  const PatchClass& pc = c.classes[counter];
  SurfaceInfo s;
  s.b = pc.b;
  s.orientable = pc.orientable;
  int euler = c.graph.vertex_count() - c.graph.edge_count();
  int two_minus = 2 - s.b - euler;
  if (s.orientable) {
    if (two_minus < 0 || (two_minus & 1))
      throw std::logic_error("orientable class with odd or negative 2-b-chi");
    s.genus = two_minus / 2;
  } else {
    if (two_minus < 1) throw std::logic_error("non-orientable class without crosscaps");
    s.crosscaps = two_minus;
  }
  if (s.b == 1) {
    int closed = 1 - euler;
    if (s.orientable)
      s.capped_genus = closed / 2;
    else
      s.capped_crosscaps = closed;
  }
  return s;
}

// ----- strips up to isomorphism -----

namespace detail {

inline bool cyclic_match(const std::vector<Dart>& a, const std::vector<Dart>& b,
                         bool reversed) {
  size_t n = a.size();
  if (b.size() != n) return false;
  if (n == 0) return true;
  std::vector<Dart> bb = b;
  if (reversed) std::reverse(bb.begin(), bb.end());
  for (size_t off = 0; off < n; ++off) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[(i + off) % n] == bb[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

// Twist-vector symmetries of a census: graph automorphisms (including the
// choice of loop-dart orientation) composed with vertex flips that restore
// the census rotation. Each action is an edge permutation plus a toggle set.
struct TwistAction {
  std::vector<int> emap;  // edge index permutation
  uint64_t toggle = 0;    // edge mask xored after permuting (bridges cleared)

  TwistVector apply(const TwistVector& t, uint64_t bridge_bits, int m) const {
    TwistVector out;
    for (int e = 0; e < m; ++e)
      if (t.test(e)) out.set(emap[e]);
    out.bits ^= toggle;
    out.bits &= ~bridge_bits;
    return out;
  }
};

inline std::vector<TwistAction> twist_actions(const Census& c) {
  const MultiGraph& g = c.graph;
  std::set<std::pair<std::vector<int>, uint64_t>> seen;
  std::vector<TwistAction> out;

  std::vector<int> loops;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).is_loop()) loops.push_back(e);

  for (const Isomorphism& iso : automorphisms(g)) {
    for (uint64_t lc = 0; lc < (uint64_t{1} << loops.size()); ++lc) {
      // dart image under (vmap, emap, loop-end choices)
      auto map_dart = [&](Dart d) -> Dart {
        int e2 = iso.emap[d.edge];
        if (g.edge(d.edge).is_loop()) {
          int li = (int)(std::find(loops.begin(), loops.end(), d.edge) - loops.begin());
          return Dart{e2, d.end ^ (int)(lc >> li & 1)};
        }
        int target = iso.vmap[g.edge(d.edge).ends[d.end]];
        int end2 = (g.edge(e2).ends[0] == target) ? 0 : 1;
        return Dart{e2, end2};
      };
      // rotation transported along the automorphism
      RotationSystem moved;
      moved.at.assign(g.vertex_count(), {});
      for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<Dart> seq;
        for (const Dart& d : c.rotation.at[v]) seq.push_back(map_dart(d));
        moved.at[iso.vmap[v]] = std::move(seq);
      }
      // per-vertex flip choices restoring the census rotation
      std::vector<char> flip(g.vertex_count(), 0);
      std::function<void(int)> pick = [&](int v) {
        if (v == g.vertex_count()) {
          uint64_t toggle = 0;
          for (int w = 0; w < g.vertex_count(); ++w) {
            if (!flip[w]) continue;
            for (int e = 0; e < g.edge_count(); ++e) {
              const auto& ends = g.edge(e).ends;
              if ((ends[0] == w) != (ends[1] == w)) toggle ^= (uint64_t{1} << e);
            }
          }
          if (seen.insert({iso.emap, toggle}).second)
            out.push_back(TwistAction{iso.emap, toggle});
          return;
        }
        if (detail::cyclic_match(c.rotation.at[v], moved.at[v], false)) {
          flip[v] = 0;
          pick(v + 1);
        }
        if (detail::cyclic_match(c.rotation.at[v], moved.at[v], true)) {
          flip[v] = 1;
          pick(v + 1);
        }
      };
      pick(0);
    }
  }
  return out;
}

// Orbits of the strip set under the twist actions.
inline uint64_t strips_up_to_iso(const Census& c) {
  std::map<uint64_t, size_t> pos;
  for (size_t i = 0; i < c.strips.size(); ++i) pos[c.strips[i]] = i;
  std::vector<size_t> parent(c.strips.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  auto actions = twist_actions(c);
  for (size_t i = 0; i < c.strips.size(); ++i) {
    TwistVector t = c.expand(c.strips[i]);
    for (const TwistAction& a : actions) {
      TwistVector u = a.apply(t, c.bridge_bits, c.graph.edge_count());
      auto it = pos.find(c.compress(u));
      if (it == pos.end())
        throw std::logic_error("twist symmetry mapped a strip to a non-strip");
      size_t ri = find(i), rj = find(it->second);
      if (ri != rj) parent[ri] = rj;
    }
  }
  uint64_t orbits = 0;
  for (size_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) ++orbits;
  return orbits;
}

// ----- check records -----

struct CheckRecord {
  std::string name;
  std::string status;  // pass | fail | finding
  std::string statement;
  std::vector<std::pair<std::string, std::string>> witness;
};

// Which hypotheses of the statements the instance satisfies. Violations on
// conforming instances are failures; otherwise they are reported findings.
struct CheckContext {
  bool cyclic = false;
  bool cubic = false;
  bool bridgeless = false;
  bool planar_rot = false;  // untwisted patch realizes b = q + 1
};

inline CheckContext check_context(const Census& c) {
  CheckContext ctx;
  ctx.cyclic = is_cyclic_part(c.graph);
  ctx.cubic = c.max_degree_le3();
  ctx.bridgeless = (c.bridge_bits == 0);
  ctx.planar_rot = (c.b0 == c.q + 1);
  return ctx;
}

namespace detail {

inline std::string status_of(bool violated, bool conformant) {
  if (!violated) return "pass";
  return conformant ? "fail" : "finding";
}

// Connectivity after deleting two edges (by index).
inline bool connected_without_edges(const MultiGraph& g, int e1, int e2) {
  if (g.vertex_count() <= 1) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  size_t reached = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const Dart& d : g.darts_at(queue[head])) {
      if (d.edge == e1 || d.edge == e2) continue;
      int w = g.edge(d.edge).ends[1 - d.end];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == (size_t)g.vertex_count();
}

inline std::string twist_string(const Census& c, uint64_t counter) {
  TwistVector t = c.expand(counter);
  std::string s;
  for (const std::string& id : edge_ids_of(c.graph, t)) {
    if (!s.empty()) s += ",";
    s += id;
  }
  return s.empty() ? "(none)" : s;
}

template <class T>
inline std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace detail

// patch_count = 2^m_bc and S = O + N; internal consistency, always strict.
inline CheckRecord check_patch_count(const Census& c) {
  CheckRecord r;
  r.name = "patch-count";
  r.statement = "census enumerates 2^m_bc twist classes and S = O + N";
  bool ok = c.patch_count == (uint64_t{1} << c.m_bc) &&
            c.patch_count == c.classes.size() && c.S == c.O + c.N;
  r.status = ok ? "pass" : "fail";
  r.witness = {{"patch_count", detail::str(c.patch_count)},
               {"m_bc", detail::str(c.m_bc)},
               {"S", detail::str(c.S)},
               {"O", detail::str(c.O)},
               {"N", detail::str(c.N)}};
  return r;
}

// S <= 2^m_bc - p.
inline CheckRecord check_strip_count_bound(const Census& c, uint64_t p,
                                           const CheckContext& ctx) {
  CheckRecord r;
  r.name = "strip-count-bound";
  r.statement = "number of strips is at most 2^m_bc - p";
  int64_t bound = (int64_t)c.patch_count - (int64_t)p;
  bool violated = (int64_t)c.S > bound;
  r.status = detail::status_of(violated, ctx.cyclic && ctx.cubic);
  r.witness = {{"S", detail::str(c.S)},
               {"p", detail::str(p)},
               {"bound", detail::str(bound)},
               {"slack", detail::str(bound - (int64_t)c.S)}};
  return r;
}

// p >= 2^q - 1, equality exactly for edgeless H. Pure combinatorics: strict
// on every instance.
inline CheckRecord check_path_count_bound(const MultiGraph& g, const CycleBasis& basis) {
  PathCountBound b = check_p_lower_bound(g, basis);
  CheckRecord r;
  r.name = "path-count-lower-bound";
  r.statement = "p >= 2^q - 1 with equality exactly when H has no edges";
  bool violated = !b.holds || !b.equality_matches_edgeless;
  r.status = violated ? "fail" : "pass";
  r.witness = {{"p", detail::str(b.p)},
               {"lower", detail::str(b.lower)},
               {"h_edges", detail::str(b.h_edges)}};
  return r;
}

// Switching any non-switched non-bridge edge of an ORIENTABLE strip gives a
// non-orientable strip. (The orientability hypothesis is essential: from a
// non-orientable strip a switch can land on an orientable twist class whose
// boundary count is forced even by the Euler characteristic, e.g. on K4.
// Splits from non-orientable sources are reported as information only.)
inline CheckRecord check_switch_lemma(const Census& c, const CheckContext&) {
  CheckRecord r;
  r.name = "switch-lemma";
  r.statement =
      "switching a non-switched edge of an orientable strip yields a "
      "non-orientable strip";
  int checked = 0, violations = 0, nonorientable_splits = 0;
  for (uint64_t k : c.strips) {
    bool orientable_source = c.classes[k].orientable;
    for (size_t i = 0; i < c.nonbridge.size(); ++i) {
      if (k >> i & 1) continue;  // already switched
      uint64_t k2 = k | (uint64_t{1} << i);
      if (!orientable_source) {
        if (c.classes[k2].b != 1) ++nonorientable_splits;
        continue;
      }
      ++checked;
      bool bad = c.classes[k2].b != 1 || c.classes[k2].orientable;
      if (bad && violations++ < 5) {
        r.witness.push_back({"violation",
                             "strip {" + detail::twist_string(c, k) + "} + edge " +
                                 c.graph.edge(c.nonbridge[i]).id + " -> b=" +
                                 detail::str(c.classes[k2].b)});
      }
    }
  }
  r.status = violations ? "fail" : "pass";
  r.witness.push_back({"checked", detail::str(checked)});
  r.witness.push_back({"violations", detail::str(violations)});
  r.witness.push_back({"nonorientable_source_splits", detail::str(nonorientable_splits)});
  return r;
}

// Un-switching any switched edge of a strip leaves at most two boundary
// circles. Holds for every rotation system: strict.
inline CheckRecord check_unswitch_bound(const Census& c) {
  CheckRecord r;
  r.name = "unswitch-two-boundaries";
  r.statement = "un-switching a switched edge of a strip yields b in {1,2}";
  int checked = 0, violations = 0;
  for (uint64_t k : c.strips) {
    for (size_t i = 0; i < c.nonbridge.size(); ++i) {
      if (!(k >> i & 1)) continue;
      uint64_t k2 = k & ~(uint64_t{1} << i);
      ++checked;
      int b = c.classes[k2].b;
      if (b != 1 && b != 2) {
        ++violations;
        if (violations <= 5)
          r.witness.push_back({"violation",
                               "strip {" + detail::twist_string(c, k) + "} - edge " +
                                   c.graph.edge(c.nonbridge[i]).id + " -> b=" +
                                   detail::str(b)});
      }
    }
  }
  r.status = violations ? "fail" : "pass";
  r.witness.push_back({"checked", detail::str(checked)});
  r.witness.push_back({"violations", detail::str(violations)});
  return r;
}

// Orientable classes satisfy b == chi (mod 2); universal, strict.
inline CheckRecord check_orientable_parity(const Census& c) {
  CheckRecord r;
  r.name = "orientable-euler-parity";
  r.statement = "every orientable class has b congruent to chi mod 2";
  int euler = c.graph.vertex_count() - c.graph.edge_count();
  uint64_t violations = 0;
  for (uint64_t k = 0; k < c.patch_count; ++k)
    if (c.classes[k].orientable && ((c.classes[k].b - euler) & 1)) ++violations;
  r.status = violations ? "fail" : "pass";
  r.witness = {{"violations", detail::str(violations)}};
  return r;
}

// q odd forces every strip non-orientable; universal, strict.
inline CheckRecord check_odd_q(const Census& c) {
  CheckRecord r;
  r.name = "odd-q-nonorientable";
  r.statement = "a graph with odd cyclomatic number has no orientable strip";
  if (c.q % 2 == 0) {
    r.status = "pass";
    r.witness = {{"note", "q even: not applicable"}, {"O", detail::str(c.O)}};
    return r;
  }
  r.status = c.O == 0 ? "pass" : "fail";
  r.witness = {{"q", detail::str(c.q)}, {"O", detail::str(c.O)}};
  return r;
}

// ----- the switch relation on orientable strips -----

struct PhiRecord {
  uint64_t source = 0;      // counter of an orientable strip, not all-switched
  std::string edge;         // the non-switched edge that was switched
  uint64_t target = 0;      // resulting counter
  bool target_strip = false;
  bool target_nonorientable = false;
};

inline std::vector<PhiRecord> phi_relation(const Census& c) {
  std::vector<PhiRecord> out;
  for (uint64_t k : c.strips) {
    if (!c.classes[k].orientable) continue;
    if (k == c.px_counter()) continue;
    for (size_t i = 0; i < c.nonbridge.size(); ++i) {
      if (k >> i & 1) continue;
      PhiRecord rec;
      rec.source = k;
      rec.edge = c.graph.edge(c.nonbridge[i]).id;
      rec.target = k | (uint64_t{1} << i);
      rec.target_strip = c.classes[rec.target].b == 1;
      rec.target_nonorientable = !c.classes[rec.target].orientable;
      out.push_back(rec);
    }
  }
  return out;
}

// For every target of the relation with two distinct sources, the switched
// edges e1, e2 satisfy: sources agree away from e1, e2; e1 and e2 lie on a
// common simple cycle; removing both disconnects the graph.
inline CheckRecord check_phi_pairs(const Census& c, const std::vector<PhiRecord>& phi,
                                   const CheckContext&) {
  CheckRecord r;
  r.name = "phi-fiber-pairs";
  r.statement =
      "two sources switching into one target differ only in their switched "
      "edges, which share a simple cycle and form a disconnecting pair";
  std::map<uint64_t, std::vector<const PhiRecord*>> fibers;
  for (const PhiRecord& rec : phi)
    if (rec.target_strip && rec.target_nonorientable) fibers[rec.target].push_back(&rec);

  std::vector<EdgeSet> cycles;
  bool have_cycles = false;
  int checked = 0, violations = 0;
  auto note = [&](const std::string& what, const PhiRecord& a, const PhiRecord& b) {
    ++violations;
    if (violations <= 5)
      r.witness.push_back({"violation", what + ": edges " + a.edge + "," + b.edge +
                                            " target {" + detail::twist_string(c, a.target) +
                                            "}"});
  };
  for (auto& [target, recs] : fibers) {
    for (size_t i = 0; i < recs.size(); ++i) {
      for (size_t j = i + 1; j < recs.size(); ++j) {
        ++checked;
        const PhiRecord &a = *recs[i], &b = *recs[j];
        int e1 = c.graph.edge_index(a.edge), e2 = c.graph.edge_index(b.edge);
        uint64_t away = ~((uint64_t{1} << e1) | (uint64_t{1} << e2));
        if ((c.expand(a.source).bits & away) != (c.expand(b.source).bits & away)) {
          note("sources differ away from the switched edges", a, b);
          continue;
        }
        if (!have_cycles) {
          cycles = all_simple_cycles(c.graph);
          have_cycles = true;
        }
        bool common = false;
        for (const EdgeSet& cyc : cycles)
          if (cyc.test(e1) && cyc.test(e2)) { common = true; break; }
        if (!common) {
          note("switched edges share no simple cycle", a, b);
          continue;
        }
        if (detail::connected_without_edges(c.graph, e1, e2))
          note("removing the switched edges does not disconnect", a, b);
      }
    }
  }
  r.status = violations ? "fail" : "pass";
  r.witness.push_back({"pairs_checked", detail::str(checked)});
  r.witness.push_back({"violations", detail::str(violations)});
  return r;
}

// Fiber sizes: at most c, and at most floor(c/2) on bridgeless cubic graphs.
inline CheckRecord check_phi_fiber_size(const Census& c, const std::vector<PhiRecord>& phi,
                                        int basis_c, const CheckContext& ctx) {
  CheckRecord r;
  r.name = "phi-fiber-size";
  r.statement = "every fiber of the switch relation has at most c sources";
  std::map<uint64_t, int> fiber;
  for (const PhiRecord& rec : phi)
    if (rec.target_strip && rec.target_nonorientable) ++fiber[rec.target];
  int cap = basis_c;
  bool half = ctx.cubic && ctx.bridgeless;
  if (half) cap = basis_c / 2;
  int largest = 0;
  int violations = 0;
  for (auto& [target, size] : fiber) {
    largest = std::max(largest, size);
    if (size > cap) {
      ++violations;
      if (violations <= 5)
        r.witness.push_back({"violation", "target {" + detail::twist_string(c, target) +
                                              "} fiber " + detail::str(size)});
    }
  }
  r.status = violations ? "fail" : "pass";
  r.witness.push_back({"cap", detail::str(cap)});
  r.witness.push_back({"half_cap", half ? "true" : "false"});
  r.witness.push_back({"largest_fiber", detail::str(largest)});
  return r;
}

// O <= c N + 1 (halved multiplier on bridgeless cubic graphs).
inline CheckRecord check_orientable_count_bound(const Census& c, int basis_c,
                                                const CheckContext& ctx) {
  CheckRecord r;
  r.name = "orientable-count-bound";
  r.statement = "O <= c*N + 1";
  int mult = (ctx.cubic && ctx.bridgeless) ? basis_c / 2 : basis_c;
  bool violated = c.O > (uint64_t)mult * c.N + 1;
  r.status = violated ? "fail" : "pass";
  r.witness = {{"O", detail::str(c.O)},
               {"N", detail::str(c.N)},
               {"multiplier", detail::str(mult)}};
  return r;
}

// For even q: (O - 1)(c + 1) <= c (2^m_bc - p), i.e. the combined count
// theorem, checked in exact integers; halved multiplier when bridgeless
// cubic.
inline CheckRecord check_orientable_count_theorem(const Census& c, uint64_t p,
                                                  int basis_c, const CheckContext& ctx) {
  CheckRecord r;
  r.name = "orientable-count-theorem";
  r.statement = "for even q, (O-1)(c+1) <= c(2^m_bc - p)";
  if (c.q % 2) {
    r.status = "pass";
    r.witness = {{"note", "q odd: not applicable"}};
    return r;
  }
  int64_t mult = (ctx.cubic && ctx.bridgeless) ? basis_c / 2 : basis_c;
  int64_t lhs = ((int64_t)c.O - 1) * (mult + 1);
  int64_t rhs = mult * ((int64_t)c.patch_count - (int64_t)p);
  bool violated = lhs > rhs;
  r.status = detail::status_of(violated, ctx.cyclic && ctx.cubic);
  r.witness = {{"O", detail::str(c.O)},
               {"multiplier", detail::str(mult)},
               {"lhs", detail::str(lhs)},
               {"rhs", detail::str(rhs)}};
  return r;
}

// ----- edge character -----

enum class EdgeCharacter { longitudinal, transversal };

inline EdgeCharacter edge_character(const Patch& strip, const std::string& edge_id) {
  int e = strip.graph.edge_index(edge_id);
  if (!strip.twists.test(e)) throw graph_error("edge " + edge_id + " is not switched");
  if (bridge_mask(strip.graph) >> e & 1) throw graph_error("edge " + edge_id + " is a bridge");
  if (!is_strip(strip)) throw graph_error("patch is not a strip");
  Patch un = switch_edge(strip, edge_id);
  int b = boundary_count(un);
  if (b != 1 && b != 2)
    throw std::logic_error("un-switching a strip edge gave b outside {1,2}");
  return b == 1 ? EdgeCharacter::longitudinal : EdgeCharacter::transversal;
}

// Census-table lookup variant (no re-tracing).
inline EdgeCharacter edge_character(const Census& c, uint64_t strip_counter, size_t bit) {
  uint64_t k2 = strip_counter & ~(uint64_t{1} << bit);
  int b = c.classes[k2].b;
  if (b != 1 && b != 2)
    throw std::logic_error("un-switching a strip edge gave b outside {1,2}");
  return b == 1 ? EdgeCharacter::longitudinal : EdgeCharacter::transversal;
}

// ----- open-question sweeps -----

struct ConjectureFlag {
  std::string question;  // q1-orientable-without-longitudinal | q2-orientable-majority
  std::string detail;
  std::vector<std::pair<std::string, std::string>> witness;
};

inline std::vector<ConjectureFlag> conjecture_sweep_checks(const Census& c) {
  std::vector<ConjectureFlag> flags;
  // (a) an orientable strip all of whose switched edges are transversal
  for (uint64_t k : c.strips) {
    if (!c.classes[k].orientable) continue;
    int switched = 0, longitudinal = 0;
    for (size_t i = 0; i < c.nonbridge.size(); ++i) {
      if (!(k >> i & 1)) continue;
      ++switched;
      if (edge_character(c, k, i) == EdgeCharacter::longitudinal) ++longitudinal;
    }
    if (longitudinal == 0) {
      ConjectureFlag f;
      f.question = "q1-orientable-without-longitudinal";
      f.detail = switched == 0
                     ? "orientable strip with no switched edges (vacuous)"
                     : "orientable strip whose switched edges are all transversal";
      f.witness = {{"twists", detail::twist_string(c, k)},
                   {"switched", detail::str(switched)}};
      flags.push_back(std::move(f));
    }
  }
  // (b) at least as many orientable as non-orientable strips
  if (c.S > 0 && c.O >= c.N) {
    ConjectureFlag f;
    f.question = "q2-orientable-majority";
    f.detail = c.q == 0 ? "acyclic graph: the unique patch is the disk (vacuous)"
                        : "orientable strips not outnumbered by non-orientable ones";
    f.witness = {{"O", detail::str(c.O)}, {"N", detail::str(c.N)}};
    flags.push_back(std::move(f));
  }
  return flags;
}

// ----- strip search -----

struct StripSearch {
  bool found = false;
  Patch patch;
  uint64_t counter = 0;
};

// First twist vector in counter order with b = 1. A strip exists for every
// connected graph, so an exhausted scan is a reportable finding, not an
// error.
inline StripSearch find_strip(const MultiGraph& g, const RotationSystem& rot,
                              int max_mbc = 24) {
  uint64_t bridges = bridge_mask(g);
  std::vector<int> nonbridge;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!(bridges >> e & 1)) nonbridge.push_back(e);
  if ((int)nonbridge.size() > max_mbc)
    throw resource_limit_error("instance too large for strip scan");
  BoundaryTracer tr(g, rot);
  StripSearch out;
  for (uint64_t k = 0; k < (uint64_t{1} << nonbridge.size()); ++k) {
    TwistVector t;
    for (size_t i = 0; i < nonbridge.size(); ++i)
      if (k >> i & 1) t.set(nonbridge[i]);
    if (tr.count(t) == 1) {
      out.found = true;
      out.counter = k;
      out.patch = make_patch(g, rot, t);
      return out;
    }
  }
  out.patch = make_patch(g, rot, {});
  return out;
}

// ----- constructive patch from a path tuple -----

struct TuplePatchRecord {
  std::vector<int> tuple;  // indices into the path list
  int k = 0;               // tuple size
  std::vector<std::string> contracted;  // carrier edge ids, ascending
  bool found = false;         // some lift reached b = k + 1
  bool enclosure_ok = false;  // every path matched a boundary support
  Patch patch;
  int b = 0;
  std::vector<EdgeSet> expected;  // per-path symmetric difference of cycles
  std::string note;
};

// Contract the carrier edges of the tuple's paths, then scan twist vectors
// of the contraction (lifted with zero twists on contracted edges) for one
// whose patch has b = k + 1 and whose boundary circles enclose each path's
// combined cycle. The first counter that meets both conditions wins; if only
// the boundary count is ever met, the first such lift is kept and flagged.
inline TuplePatchRecord build_patch_from_tuple(const MultiGraph& g, const RotationSystem& rot,
                                               const CycleBasis& basis, const HGraph& h,
                                               const std::vector<HPath>& paths,
                                               const std::vector<int>& tuple,
                                               int max_mbc = 24) {
  TuplePatchRecord rec;
  rec.tuple = tuple;
  rec.k = (int)tuple.size();

  std::set<std::string> carriers;
  for (int pi : tuple) {
    if (pi < 0 || pi >= (int)paths.size()) throw graph_error("tuple path index out of range");
    const HPath& path = paths[pi];
    for (int he : path.edges) {
      const HEdge& edge = h.edges[he];
      if (edge.vertex_type)
        throw graph_error("tuple uses a vertex-type intersection edge; apply cubic "
                          "resolution first");
      carriers.insert(edge.carrier);
    }
    EdgeSet combined;
    for (int cyc : path.vertices) combined = sym_diff(combined, basis.cycles[cyc]);
    rec.expected.push_back(combined);
  }
  rec.contracted.assign(carriers.begin(), carriers.end());

  uint64_t contracted_mask = 0;
  for (const std::string& id : rec.contracted) {
    int e = g.edge_index(id);
    if (g.edge(e).is_loop()) throw graph_error("carrier edge " + id + " is a loop");
    contracted_mask |= (uint64_t{1} << e);
  }

  MultiGraph bar = g;
  for (const std::string& id : rec.contracted) bar = contract_edge(bar, id).graph;

  std::vector<int> survivors;  // g edge indices of bar's non-bridge edges
  {
    uint64_t bb = bridge_mask(bar);
    for (int e = 0; e < bar.edge_count(); ++e)
      if (!(bb >> e & 1)) survivors.push_back(g.edge_index(bar.edge(e).id));
  }
  if ((int)survivors.size() > max_mbc)
    throw resource_limit_error("contraction leaves too many non-bridge edges");

  BoundaryTracer tr(g, rot);
  std::vector<std::vector<BoundaryArc>> traces;
  std::vector<EdgeSet> support;
  bool have_fallback = false;
  TwistVector fallback, chosen;
  for (uint64_t kk = 0; kk < (uint64_t{1} << survivors.size()); ++kk) {
    TwistVector t;
    for (size_t i = 0; i < survivors.size(); ++i)
      if (kk >> i & 1) t.set(survivors[i]);
    if (tr.count(t) != rec.k + 1) continue;
    if (!have_fallback) {
      have_fallback = true;
      fallback = t;
    }
    tr.trace(t, traces, support);
    bool all = true;
    for (const EdgeSet& want : rec.expected) {
      EdgeSet want_r{want.bits & ~contracted_mask};
      bool hit = false;
      for (const EdgeSet& s : support)
        if (EdgeSet{s.bits & ~contracted_mask} == want_r) { hit = true; break; }
      if (!hit) { all = false; break; }
    }
    if (all) {
      rec.found = true;
      rec.enclosure_ok = true;
      chosen = t;
      break;
    }
  }
  if (rec.enclosure_ok) {
    rec.note = "lift attains the boundary count and the enclosure diagnostic";
  } else if (have_fallback) {
    rec.found = true;
    chosen = fallback;
    rec.note = "lift attains the boundary count; no lift matched the enclosure diagnostic";
  } else {
    rec.note = "no twist vector of the contraction lifts to the required boundary count";
  }
  rec.patch = make_patch(g, rot, chosen);
  rec.b = boundary_count(rec.patch);
  return rec;
}

// ----- full verification driver -----

struct VerifyOptions {
  CensusOptions census;
  std::string basis_mode = "bfs";      // bfs | min-c
  int min_c_edge_cap = 10;             // min-c falls back to bfs above this
  uint64_t iso_strip_cap = 100000;     // skip orbit count above this many strips
};

struct VerifyResult {
  Census census;
  CycleBasis basis;
  HGraph h;
  uint64_t p = 0;
  int c = 0;
  int64_t bound = 0;  // 2^m_bc - p
  std::optional<uint64_t> strips_iso;
  std::vector<PhiRecord> phi;
  std::vector<CheckRecord> checks;
  std::vector<ConjectureFlag> flags;
  CheckContext context;
  std::vector<std::string> warnings;

  bool any_fail() const {
    for (const CheckRecord& r : checks)
      if (r.status == "fail") return true;
    return false;
  }
  bool any_finding() const {
    for (const CheckRecord& r : checks)
      if (r.status == "finding") return true;
    return false;
  }
};

inline VerifyResult verify_all(const MultiGraph& g, const RotationSystem& rot,
                               const VerifyOptions& opts = {}) {
  VerifyResult out;
  out.census = enumerate_patches(g, rot, opts.census);
  out.warnings = out.census.warnings;

  if (opts.basis_mode == "min-c") {
    if (g.edge_count() <= opts.min_c_edge_cap) {
      if (auto b = min_c_basis(g)) out.basis = *b;
    }
    if (!out.basis.min_c) {
      out.basis = fundamental_basis(g);
      out.warnings.push_back("min-c basis search skipped (too many edges); using bfs basis");
    }
  } else if (opts.basis_mode == "bfs") {
    out.basis = fundamental_basis(g);
  } else {
    throw graph_error("unknown basis mode: " + opts.basis_mode);
  }

  out.h = build_H(g, out.basis);
  out.p = p_of(g, out.basis);
  out.c = out.basis.c;
  out.bound = (int64_t)out.census.patch_count - (int64_t)out.p;
  if (out.census.S <= opts.iso_strip_cap)
    out.strips_iso = strips_up_to_iso(out.census);
  else
    out.warnings.push_back("strip orbit count skipped (too many strips)");

  out.context = check_context(out.census);
  out.phi = phi_relation(out.census);

  out.checks.push_back(check_patch_count(out.census));
  out.checks.push_back(check_strip_count_bound(out.census, out.p, out.context));
  out.checks.push_back(check_path_count_bound(g, out.basis));
  out.checks.push_back(check_switch_lemma(out.census, out.context));
  out.checks.push_back(check_phi_pairs(out.census, out.phi, out.context));
  out.checks.push_back(check_phi_fiber_size(out.census, out.phi, out.c, out.context));
  out.checks.push_back(check_orientable_count_bound(out.census, out.c, out.context));
  out.checks.push_back(check_orientable_count_theorem(out.census, out.p, out.c, out.context));
  out.checks.push_back(check_odd_q(out.census));
  out.checks.push_back(check_unswitch_bound(out.census));
  out.checks.push_back(check_orientable_parity(out.census));

  out.flags = conjecture_sweep_checks(out.census);
  return out;
}

}  // namespace clc
