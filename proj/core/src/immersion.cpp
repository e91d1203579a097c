#include "hreg/immersion.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hreg/coloured_graph.hpp"
#include "hreg/regsearch.hpp"
#include "hreg/rng.hpp"

namespace hreg {

namespace {

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

// Connected components of the link of v: vertices adjacent to v, joined when
// they share a triangle through v. Returns the component label per neighbour
// and the degree of each neighbour inside the link.
struct LinkInfo {
  std::vector<int> neighbours;
  std::vector<int> component_of;  // aligned with neighbours
  int components = 0;
  bool two_regular = true;
};

LinkInfo link_info(const std::vector<std::array<int, 3>>& triangles,
                   const std::vector<std::vector<int>>& at_vertex, int v) {
  LinkInfo info;
  std::map<int, int> idx;
  std::vector<std::vector<int>> adj;
  for (int ti : at_vertex[v]) {
    const auto& t = triangles[ti];
    int a = -1, b = -1;
    for (int x : t)
      if (x != v) (a < 0 ? a : b) = x;
    for (int x : {a, b})
      if (!idx.count(x)) {
        idx[x] = static_cast<int>(info.neighbours.size());
        info.neighbours.push_back(x);
        adj.emplace_back();
      }
    adj[idx[a]].push_back(idx[b]);
    adj[idx[b]].push_back(idx[a]);
  }
  for (const auto& nb : adj)
    if (nb.size() != 2) info.two_regular = false;
  info.component_of.assign(info.neighbours.size(), -1);
  for (std::size_t s = 0; s < info.neighbours.size(); ++s) {
    if (info.component_of[s] >= 0) continue;
    std::deque<int> queue{static_cast<int>(s)};
    info.component_of[s] = info.components;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj[x])
        if (info.component_of[y] < 0) {
          info.component_of[y] = info.components;
          queue.push_back(y);
        }
    }
    ++info.components;
  }
  return info;
}

long long count_one_faces(const std::vector<std::array<int, 3>>& triangles) {
  std::set<std::uint64_t> pairs;
  for (const auto& t : triangles) {
    pairs.insert(pair_key(t[0], t[1]));
    pairs.insert(pair_key(t[0], t[2]));
    pairs.insert(pair_key(t[1], t[2]));
  }
  return static_cast<long long>(pairs.size());
}

}  // namespace

CloneDecomposition clone_decompose(const Hypergraph& g, std::uint64_t order_seed) {
  if (g.k != 3) fail(ErrorCode::WrongUniformity, "decomposition requires a 3-graph");

  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(g.edges.size());
  for (const auto& e : g.edges) triangles.push_back({e[0], e[1], e[2]});

  int next_id = g.n;
  std::vector<int> phi(g.n);
  std::iota(phi.begin(), phi.end(), 0);
  std::vector<char> is_clone(g.n, 0);

  auto build_at_vertex = [&](int count) {
    std::vector<std::vector<int>> at(count);
    for (std::size_t ti = 0; ti < triangles.size(); ++ti)
      for (int x : triangles[ti]) at[x].push_back(static_cast<int>(ti));
    return at;
  };

  // precondition: every non-isolated vertex has a 2-regular link
  {
    auto at = build_at_vertex(next_id);
    for (int v = 0; v < g.n; ++v) {
      if (at[v].empty()) continue;
      if (!link_info(triangles, at, v).two_regular)
        fail(ErrorCode::LinkNotTwoRegular,
             "vertex " + std::to_string(v) + " has a link that is not 2-regular");
    }
  }

  CloneDecomposition out;
  const long long faces_before = static_cast<long long>(triangles.size());
  const long long one_faces_before = count_one_faces(triangles);

  std::optional<Rng> order_rng;
  if (order_seed != 0) order_rng.emplace(derive_seed(order_seed, "clone-order"));

  while (true) {
    auto at = build_at_vertex(next_id);
    std::vector<int> eligible;
    std::vector<LinkInfo> infos(next_id);
    for (int v = 0; v < next_id; ++v) {
      if (at[v].empty()) continue;
      infos[v] = link_info(triangles, at, v);
      if (infos[v].components >= 2) eligible.push_back(v);
    }
    if (eligible.empty()) break;
    int v = order_rng ? eligible[uniform_int(*order_rng, 0, static_cast<int>(eligible.size()) - 1)]
                      : eligible.front();
    if (is_clone[v]) throw std::logic_error("a clone acquired a multi-component link");

    const auto& info = infos[v];
    // one fresh vertex per link component; v itself is retired
    std::vector<int> clone_of_component(info.components);
    for (int c = 0; c < info.components; ++c) {
      clone_of_component[c] = next_id++;
      phi.push_back(phi[v]);
      is_clone.push_back(1);
    }
    std::map<int, int> comp_of_neighbour;
    for (std::size_t i = 0; i < info.neighbours.size(); ++i)
      comp_of_neighbour[info.neighbours[i]] = info.component_of[i];
    for (int ti : at[v]) {
      auto& t = triangles[ti];
      int other = -1;
      for (int x : t)
        if (x != v) {
          other = x;
          break;
        }
      int clone = clone_of_component[comp_of_neighbour.at(other)];
      for (int& x : t)
        if (x == v) x = clone;
      std::sort(t.begin(), t.end());
    }
    ++out.clone_steps;
    out.clones_added += info.components;

    if (static_cast<long long>(triangles.size()) != faces_before ||
        count_one_faces(triangles) != one_faces_before)
      throw std::logic_error("cloning changed the face counts");
  }

  // compact ids: retired originals and isolated vertices drop out
  std::vector<int> remap(next_id, -1);
  int compact = 0;
  for (const auto& t : triangles)
    for (int x : t)
      if (remap[x] < 0) remap[x] = 0;
  for (int v = 0; v < next_id; ++v)
    if (remap[v] == 0) remap[v] = compact++;
  out.complex.n = compact;
  out.phi.assign(compact, -1);
  for (int v = 0; v < next_id; ++v)
    if (remap[v] >= 0) out.phi[remap[v]] = phi[v];
  for (auto& t : triangles) {
    for (int& x : t) x = remap[x];
    std::sort(t.begin(), t.end());
  }
  out.complex.triangles = std::move(triangles);
  classify_components(out.complex);
  return out;
}

void validate_surface_complex(const SurfaceComplex& complex) {
  std::vector<std::vector<int>> at(complex.n);
  for (std::size_t ti = 0; ti < complex.triangles.size(); ++ti) {
    const auto& t = complex.triangles[ti];
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      fail(ErrorCode::NotASurface, "degenerate triangle " + std::to_string(ti));
    for (int x : t) {
      if (x < 0 || x >= complex.n)
        fail(ErrorCode::NotASurface, "triangle vertex out of range");
      at[x].push_back(static_cast<int>(ti));
    }
  }
  for (int v = 0; v < complex.n; ++v) {
    if (at[v].empty())
      fail(ErrorCode::NotASurface, "isolated vertex " + std::to_string(v));
    auto info = link_info(complex.triangles, at, v);
    if (!info.two_regular || info.components != 1)
      fail(ErrorCode::NotASurface,
           "link of vertex " + std::to_string(v) + " is not a single cycle");
  }
  long long one_faces = count_one_faces(complex.triangles);
  if (2 * one_faces != 3 * static_cast<long long>(complex.triangles.size()))
    fail(ErrorCode::NotASurface, "some 1-face does not lie in exactly two triangles");
}

namespace {

SurfaceClassification classify_connected(const std::vector<std::array<int, 3>>& triangles,
                                         int vertex_count, long long one_faces) {
  SurfaceClassification cls;
  cls.chi = vertex_count - static_cast<int>(one_faces) + static_cast<int>(triangles.size());

  // pair -> the (exactly two) triangles through it
  std::map<std::uint64_t, std::vector<int>> tri_at_pair;
  for (std::size_t ti = 0; ti < triangles.size(); ++ti) {
    const auto& t = triangles[ti];
    tri_at_pair[pair_key(t[0], t[1])].push_back(static_cast<int>(ti));
    tri_at_pair[pair_key(t[0], t[2])].push_back(static_cast<int>(ti));
    tri_at_pair[pair_key(t[1], t[2])].push_back(static_cast<int>(ti));
  }
  for (const auto& [key, ts] : tri_at_pair)
    if (ts.size() != 2) fail(ErrorCode::NotASurface, "a 1-face is not in exactly two triangles");

  // orientation propagation: +1 keeps the stored vertex order, -1 flips it;
  // neighbouring triangles must induce opposite directions on a shared pair
  auto direction = [&](const std::array<int, 3>& t, int orient, int a, int b) {
    // sign of pair (a, b) inside the cyclic order t0 -> t1 -> t2 -> t0
    int pos_a = static_cast<int>(std::find(t.begin(), t.end(), a) - t.begin());
    int pos_b = static_cast<int>(std::find(t.begin(), t.end(), b) - t.begin());
    int forward = ((pos_a + 1) % 3 == pos_b) ? 1 : -1;
    return forward * orient;
  };

  std::vector<int> orient(triangles.size(), 0);
  cls.orientable = true;
  for (std::size_t seed = 0; seed < triangles.size(); ++seed) {
    if (orient[seed] != 0) continue;
    orient[seed] = 1;
    std::deque<int> queue{static_cast<int>(seed)};
    while (!queue.empty()) {
      int ti = queue.front();
      queue.pop_front();
      const auto& t = triangles[ti];
      const std::array<std::pair<int, int>, 3> sides = {
          std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}};
      for (auto [a, b] : sides) {
        for (int tj : tri_at_pair[pair_key(a, b)]) {
          if (tj == ti) continue;
          int need = -direction(t, orient[ti], a, b);
          int have = direction(triangles[tj], 1, a, b);
          int required = need * have;  // orientation tj must take
          if (orient[tj] == 0) {
            orient[tj] = required;
            queue.push_back(tj);
          } else if (orient[tj] != required) {
            cls.orientable = false;
          }
        }
      }
    }
  }

  if (cls.chi > 2) fail(ErrorCode::NotASurface, "Euler characteristic above 2");
  if (cls.orientable && cls.chi % 2 != 0)
    fail(ErrorCode::NotASurface, "orientable component with odd Euler characteristic");
  if (cls.orientable) {
    cls.genus_or_crosscaps = (2 - cls.chi) / 2;
    if (cls.chi == 2)
      cls.name = "sphere";
    else if (cls.chi == 0)
      cls.name = "torus";
    else
      cls.name = "genus-" + std::to_string(cls.genus_or_crosscaps) + " orientable surface";
  } else {
    cls.genus_or_crosscaps = 2 - cls.chi;
    if (cls.chi == 1)
      cls.name = "projective plane";
    else if (cls.chi == 0)
      cls.name = "klein bottle";
    else
      cls.name = std::to_string(cls.genus_or_crosscaps) + "-crosscap non-orientable surface";
  }
  return cls;
}

}  // namespace

SurfaceClassification classify_surface(const SurfaceComplex& complex) {
  validate_surface_complex(complex);
  // require connectedness
  std::vector<int> comp(complex.n, -1);
  if (complex.n > 0) {
    std::deque<int> queue{0};
    comp[0] = 0;
    std::vector<std::vector<int>> adj(complex.n);
    for (const auto& t : complex.triangles) {
      adj[t[0]].insert(adj[t[0]].end(), {t[1], t[2]});
      adj[t[1]].insert(adj[t[1]].end(), {t[0], t[2]});
      adj[t[2]].insert(adj[t[2]].end(), {t[0], t[1]});
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = 0;
          queue.push_back(w);
        }
    }
    for (int v = 0; v < complex.n; ++v)
      if (comp[v] < 0) fail(ErrorCode::NotASurface, "complex is not connected");
  }
  return classify_connected(complex.triangles, complex.n, count_one_faces(complex.triangles));
}

void classify_components(SurfaceComplex& complex) {
  validate_surface_complex(complex);
  complex.components.clear();

  std::vector<std::vector<int>> adj(complex.n);
  for (const auto& t : complex.triangles) {
    adj[t[0]].insert(adj[t[0]].end(), {t[1], t[2]});
    adj[t[1]].insert(adj[t[1]].end(), {t[0], t[2]});
    adj[t[2]].insert(adj[t[2]].end(), {t[0], t[1]});
  }
  std::vector<int> comp(complex.n, -1);
  int comp_count = 0;
  for (int v = 0; v < complex.n; ++v) {
    if (comp[v] >= 0) continue;
    std::deque<int> queue{v};
    comp[v] = comp_count;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj[x])
        if (comp[y] < 0) {
          comp[y] = comp_count;
          queue.push_back(y);
        }
    }
    ++comp_count;
  }

  for (int c = 0; c < comp_count; ++c) {
    SurfaceComponent sc;
    std::vector<int> local_id(complex.n, -1);
    std::vector<std::array<int, 3>> local_triangles;
    for (int v = 0; v < complex.n; ++v)
      if (comp[v] == c) {
        local_id[v] = static_cast<int>(sc.vertices.size());
        sc.vertices.push_back(v);
      }
    for (std::size_t ti = 0; ti < complex.triangles.size(); ++ti) {
      const auto& t = complex.triangles[ti];
      if (comp[t[0]] != c) continue;
      sc.triangles.push_back(static_cast<int>(ti));
      local_triangles.push_back({local_id[t[0]], local_id[t[1]], local_id[t[2]]});
    }
    long long one_faces = count_one_faces(local_triangles);
    sc.one_faces = static_cast<int>(one_faces);
    auto cls =
        classify_connected(local_triangles, static_cast<int>(sc.vertices.size()), one_faces);
    sc.chi = cls.chi;
    sc.orientable = cls.orientable;
    sc.genus_or_crosscaps = cls.genus_or_crosscaps;
    sc.name = cls.name;
    complex.components.push_back(std::move(sc));
  }
}

VerifyReport verify_immersion(const Hypergraph& host, const ImmersionCertificate& cert) {
  VerifyReport report;
  if (host.k != 3) {
    report.add("host is not a 3-graph");
    return report;
  }
  for (int ei : cert.host_edges)
    if (ei < 0 || ei >= host.edge_count())
      fail(ErrorCode::IndexOutOfRange, "host edge index " + std::to_string(ei));
  if (static_cast<int>(cert.phi.size()) != cert.surface.n) {
    report.add("phi size differs from the surface vertex count");
    return report;
  }
  try {
    validate_surface_complex(cert.surface);
  } catch (const InputError& e) {
    report.add(e.what());
    return report;
  }

  std::set<std::vector<int>> image_edges;
  for (int ei : cert.host_edges) image_edges.insert(host.edges[ei]);

  std::set<std::vector<int>> seen_triangles;
  std::set<std::uint64_t> seen_pairs, seen_image_pairs;
  for (const auto& t : cert.surface.triangles) {
    std::vector<int> image;
    for (int x : t) {
      if (cert.phi[x] < 0 || cert.phi[x] >= host.n) {
        report.add("phi maps a vertex out of range");
        return report;
      }
      image.push_back(cert.phi[x]);
    }
    std::sort(image.begin(), image.end());
    if (image[0] == image[1] || image[1] == image[2]) {
      report.add("phi collapses a 2-face");
      continue;
    }
    if (!image_edges.count(image)) report.add("phi image of a triangle is not a listed host edge");
    if (!seen_triangles.insert(image).second)
      report.add("phi identifies two 2-faces");
    for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}}) {
      if (cert.phi[a] == cert.phi[b]) report.add("phi collapses a 1-face");
      bool fresh = seen_pairs.insert(pair_key(a, b)).second;
      if (fresh && !seen_image_pairs.insert(pair_key(cert.phi[a], cert.phi[b])).second)
        report.add("phi identifies two 1-faces");
    }
  }
  return report;
}

ImmersionSearchResult find_zero_immersion(const Hypergraph& g, const OracleBudget& budget,
                                          std::uint64_t seed) {
  ImmersionSearchResult out;
  if (g.k != 3) fail(ErrorCode::WrongUniformity, "immersion search requires a 3-graph");
  if (g.edge_count() == 0) return out;

  PairHypergraph lifted = pair_hypergraph(g, true);

  std::vector<int> selected;
  auto exact = find_r_regular_exact(lifted.h, 2, budget);
  out.oracle_nodes = exact.nodes_explored;
  if (exact.status == SearchStatus::Found) {
    selected = exact.cert->edge_indices;
  } else if (exact.status == SearchStatus::NotFound) {
    out.status = SearchStatus::NotFound;
    return out;
  } else {
    // collision fallback on coloured-graph views of random tripartitions
    Rng rng = make_rng(seed, "immersion-partitions");
    for (int attempt = 0; attempt < 24 && selected.empty(); ++attempt) {
      std::vector<int> part_of(lifted.h.n);
      for (int& p : part_of) p = uniform_int(rng, 0, 2);
      std::vector<int> transversal;
      for (int ei = 0; ei < lifted.h.edge_count(); ++ei) {
        const auto& e = lifted.h.edges[ei];
        if (part_of[e[0]] != part_of[e[1]] && part_of[e[1]] != part_of[e[2]] &&
            part_of[e[0]] != part_of[e[2]])
          transversal.push_back(ei);
      }
      if (transversal.empty()) continue;
      LinearHypergraph sub;
      static_cast<Hypergraph&>(sub) = sub_hypergraph(lifted.h, transversal);
      std::array<std::size_t, 3> sizes{0, 0, 0};
      for (int v = 0; v < sub.n; ++v) ++sizes[part_of[v]];
      int colour_part = static_cast<int>(std::min_element(sizes.begin(), sizes.end()) -
                                         sizes.begin());
      ColouredGraph view = to_coloured_graph(sub, colour_part, part_of);
      SearchParams params;
      params.seed = derive_seed(seed, "immersion-collision", attempt);
      params.sample_budget = 20'000;
      auto hit = collision_search(view, Strategy::Matchings, params);
      out.collision_samples += hit.samples;
      if (hit.status == SearchStatus::Found) {
        for (int ci : hit.cert->edge_indices)
          selected.push_back(transversal[view.host_edge_index[ci]]);
      }
    }
    if (selected.empty()) {
      out.status = SearchStatus::BudgetExhausted;
      return out;
    }
  }

  // pull back: pair-hypergraph edge i corresponds to host edge i
  std::sort(selected.begin(), selected.end());
  Hypergraph image = sub_hypergraph(g, selected);
  auto decomposition = clone_decompose(image);

  ImmersionCertificate cert;
  cert.surface = std::move(decomposition.complex);
  cert.phi = std::move(decomposition.phi);
  cert.host_edges = selected;
  if (!verify_immersion(g, cert).ok())
    throw std::logic_error("immersion pipeline produced an invalid certificate");
  out.status = SearchStatus::Found;
  out.cert = std::move(cert);
  return out;
}

}  // namespace hreg
