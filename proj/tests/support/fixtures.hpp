#pragma once

// Shared instances and independent reference oracles for the test suites.
// Everything here is test-only and deliberately brute-force: these are the
// baselines the library is checked against, so they must not share code with
// the implementation paths they validate.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hreg/coloured_graph.hpp"
#include "hreg/graph.hpp"
#include "hreg/hypergraph.hpp"
#include "hreg/rng.hpp"

namespace hreg::testing {

inline LinearHypergraph make_linear(int n, std::vector<std::vector<int>> edges) {
  Hypergraph g;
  g.k = edges.empty() ? 3 : static_cast<int>(edges[0].size());
  g.n = n;
  g.edges = std::move(edges);
  return LinearHypergraph::from(std::move(g));
}

inline Hypergraph make_simple(int n, std::vector<std::vector<int>> edges) {
  Hypergraph g;
  g.k = edges.empty() ? 3 : static_cast<int>(edges[0].size());
  g.n = n;
  g.edges = std::move(edges);
  validate_simple(g);
  return g;
}

inline LinearHypergraph pasch() {
  return make_linear(6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

inline LinearHypergraph fano() {
  return make_linear(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6},
                         {2, 4, 5}});
}

inline Hypergraph tetrahedron() {
  return make_simple(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline Hypergraph glued_tetrahedra() {
  return make_simple(7, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 4, 5}, {0, 4, 6},
                         {0, 5, 6}, {4, 5, 6}});
}

// antipodal pairs (0,5), (1,4), (2,3)
inline Hypergraph octahedron() {
  return make_simple(6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 4}, {1, 2, 5}, {1, 3, 5},
                         {2, 4, 5}, {3, 4, 5}});
}

// 7-vertex triangulation of the torus on K7: faces {i,i+1,i+3} and
// {i,i+2,i+3} mod 7; every pair lies in exactly two faces.
inline Hypergraph torus7() {
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 7; ++i)
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
  for (int i = 0; i < 7; ++i)
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  return make_simple(7, std::move(faces));
}

// 6-vertex triangulation of the projective plane (hemi-icosahedron).
inline Hypergraph projective_plane6() {
  return make_simple(6, {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5}, {1, 2, 4},
                         {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}});
}

// ------------------------------------------------------------- generators

// Random simple k-uniform hypergraph, not necessarily linear.
inline Hypergraph random_simple(int n, int k, int m, std::uint64_t seed) {
  Rng rng(seed);
  std::set<std::vector<int>> edges;
  int guard = 0;
  while (static_cast<int>(edges.size()) < m && ++guard < 100 * m + 1000) {
    std::vector<int> e;
    while (static_cast<int>(e.size()) < k) {
      int v = uniform_int(rng, 0, n - 1);
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  Hypergraph g;
  g.k = k;
  g.n = n;
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

// Random linear 3-graph by rejection.
inline LinearHypergraph random_linear3(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  Hypergraph g;
  g.k = 3;
  g.n = n;
  std::set<std::pair<int, int>> pairs;
  int guard = 0;
  while (static_cast<int>(g.edges.size()) < m && ++guard < 300 * m + 2000) {
    int a = uniform_int(rng, 0, n - 1), b = uniform_int(rng, 0, n - 1),
        c = uniform_int(rng, 0, n - 1);
    if (a == b || b == c || a == c) continue;
    std::vector<int> e = {a, b, c};
    std::sort(e.begin(), e.end());
    std::pair<int, int> p01{e[0], e[1]}, p02{e[0], e[2]}, p12{e[1], e[2]};
    if (pairs.count(p01) || pairs.count(p02) || pairs.count(p12)) continue;
    pairs.insert(p01);
    pairs.insert(p02);
    pairs.insert(p12);
    g.edges.push_back(e);
  }
  return LinearHypergraph::from(std::move(g));
}

// Random linear, tripartite, transversal 3-graph together with its parts.
struct TripartiteInstance {
  LinearHypergraph h;
  std::vector<int> part_of;
};

inline TripartiteInstance random_tripartite(int per_part, int m, std::uint64_t seed) {
  Rng rng(seed);
  const int n = 3 * per_part;
  std::vector<int> part_of(n);
  for (int v = 0; v < n; ++v) part_of[v] = v / per_part;
  Hypergraph g;
  g.k = 3;
  g.n = n;
  std::set<std::pair<int, int>> pairs;
  int guard = 0;
  while (static_cast<int>(g.edges.size()) < m && ++guard < 300 * m + 2000) {
    int a = uniform_int(rng, 0, per_part - 1);
    int b = per_part + uniform_int(rng, 0, per_part - 1);
    int c = 2 * per_part + uniform_int(rng, 0, per_part - 1);
    std::vector<int> e = {a, b, c};
    std::pair<int, int> p01{a, b}, p02{a, c}, p12{b, c};
    if (pairs.count(p01) || pairs.count(p02) || pairs.count(p12)) continue;
    pairs.insert(p01);
    pairs.insert(p02);
    pairs.insert(p12);
    g.edges.push_back(e);
  }
  return {LinearHypergraph::from(std::move(g)), part_of};
}

// Coloured graph with two planted vertex-disjoint rainbow 2l-cycles sharing
// a colour set, plus random proper noise edges.
inline ColouredGraph planted_double_cycle(int ell, int n, int colours, int noise,
                                          std::uint64_t seed) {
  ColouredGraph g;
  g.n = n;
  g.s = colours;
  auto add = [&](int u, int v, int c) {
    if (u > v) std::swap(u, v);
    g.edges.push_back({u, v, c});
  };
  const int len = 2 * ell;
  for (int i = 0; i < len; ++i) add(i, (i + 1) % len, i);
  for (int i = 0; i < len; ++i) add(len + i, len + (i + 1) % len, i);
  Rng rng(seed);
  int added = 0, guard = 0;
  while (added < noise && ++guard < 200 * noise + 1000) {
    int u = uniform_int(rng, 0, n - 1), v = uniform_int(rng, 0, n - 1);
    int c = uniform_int(rng, len, colours - 1);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    bool clash = false;
    for (const auto& e : g.edges) {
      if (e.u == u && e.v == v) clash = true;
      if ((e.u == u || e.v == u || e.u == v || e.v == v) && e.colour == c) clash = true;
      if (clash) break;
    }
    if (clash) continue;
    add(u, v, c);
    ++added;
  }
  return g;
}

// --------------------------------------------------------- reference oracles

// Lexicographically least r-regular edge subset by full enumeration over all
// subsets in lexicographic set order (include-first recursion).
inline std::optional<std::vector<int>> naive_r_regular(const Hypergraph& h, int r,
                                                       int max_edges = 1 << 20) {
  const int m = h.edge_count();
  std::vector<int> chosen;
  std::vector<int> deg(h.n, 0);
  std::optional<std::vector<int>> best;
  auto valid = [&]() {
    if (chosen.empty()) return false;
    for (int v = 0; v < h.n; ++v)
      if (deg[v] != 0 && deg[v] != r) return false;
    return true;
  };
  auto rec = [&](auto&& self, int idx) -> void {
    if (best) return;
    if (valid()) {
      best = chosen;
      return;
    }
    if (idx == m) return;
    if (static_cast<int>(chosen.size()) < max_edges) {
      chosen.push_back(idx);
      for (int v : h.edges[idx]) ++deg[v];
      self(self, idx + 1);
      for (int v : h.edges[idx]) --deg[v];
      chosen.pop_back();
    }
    if (!best) self(self, idx + 1);
  };
  rec(rec, 0);
  return best;
}

// Closed walks of the given length by exhaustive DFS.
inline std::uint64_t brute_closed_walks(const Graph& g, int length) {
  auto adj = g.adjacency();
  std::uint64_t total = 0;
  auto dfs = [&](auto&& self, int start, int v, int left) -> void {
    if (left == 0) {
      if (v == start) ++total;
      return;
    }
    for (int w : adj[v]) self(self, start, w, left - 1);
  };
  for (int v = 0; v < g.n; ++v) dfs(dfs, v, v, length);
  return total;
}

// Labelled rainbow 2h-cycles by exhaustive DFS (vertex-injective, colours
// pairwise distinct, closed).
inline std::uint64_t brute_rainbow_cycles(const ColouredGraph& g, int h) {
  auto inc = g.incident_edges();
  std::vector<char> used_v(g.n, 0), used_c(g.s, 0);
  std::uint64_t count = 0;
  const int len = 2 * h;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int v) -> void {
    if (static_cast<int>(stack.size()) == len) {
      for (int ei : inc[v]) {
        const auto& e = g.edges[ei];
        int w = e.u == v ? e.v : e.u;
        if (w == stack.front() && !used_c[e.colour]) ++count;
      }
      return;
    }
    for (int ei : inc[v]) {
      const auto& e = g.edges[ei];
      int w = e.u == v ? e.v : e.u;
      if (used_v[w] || used_c[e.colour]) continue;
      used_v[w] = used_c[e.colour] = 1;
      stack.push_back(w);
      self(self, w);
      stack.pop_back();
      used_v[w] = used_c[e.colour] = 0;
    }
  };
  for (int v = 0; v < g.n; ++v) {
    used_v[v] = 1;
    stack.push_back(v);
    dfs(dfs, v);
    stack.pop_back();
    used_v[v] = 0;
  }
  return count;
}

// Does the family contain an r-sunflower? Brute force over all r-subsets.
inline bool exhaustive_sunflower_exists(const std::vector<std::vector<int>>& family, int r) {
  std::vector<std::vector<int>> sets = family;
  for (auto& s : sets) std::sort(s.begin(), s.end());
  const int m = static_cast<int>(sets.size());
  std::vector<int> pick;
  auto check = [&]() {
    std::vector<int> core;
    std::set_intersection(sets[pick[0]].begin(), sets[pick[0]].end(), sets[pick[1]].begin(),
                          sets[pick[1]].end(), std::back_inserter(core));
    for (std::size_t i = 0; i < pick.size(); ++i)
      for (std::size_t j = i + 1; j < pick.size(); ++j) {
        std::vector<int> inter;
        std::set_intersection(sets[pick[i]].begin(), sets[pick[i]].end(), sets[pick[j]].begin(),
                              sets[pick[j]].end(), std::back_inserter(inter));
        if (inter != core) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int from) -> bool {
    if (static_cast<int>(pick.size()) == r) return check();
    for (int i = from; i < m; ++i) {
      pick.push_back(i);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

// Every pair of vertices covered exactly once.
inline bool is_steiner_triple_system(const LinearHypergraph& g) {
  std::map<std::pair<int, int>, int> cover;
  for (const auto& e : g.edges) {
    ++cover[{e[0], e[1]}];
    ++cover[{e[0], e[2]}];
    ++cover[{e[1], e[2]}];
  }
  long long want = static_cast<long long>(g.n) * (g.n - 1) / 2;
  if (static_cast<long long>(cover.size()) != want) return false;
  for (const auto& [pair, count] : cover)
    if (count != 1) return false;
  return true;
}

// Unordered triples of pairwise disjoint edges covering all vertices.
inline std::vector<std::vector<int>> parallel_classes(const LinearHypergraph& g) {
  std::vector<std::vector<int>> classes;
  const int m = g.edge_count();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        std::set<int> cover;
        for (int e : {a, b, c})
          for (int v : g.edges[e]) cover.insert(v);
        if (static_cast<int>(cover.size()) == 9) classes.push_back({a, b, c});
      }
  return classes;
}

}  // namespace hreg::testing
