#include "hreg/smallreg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "hreg/regularize.hpp"
#include "hreg/rng.hpp"

namespace hreg {

namespace {

std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

PairProductGraph build_pair_product_graph(const ColouredGraph& g, long long max_vertices) {
  PairProductGraph pg;
  pg.host = &g;
  std::unordered_map<std::uint64_t, int> id_of;
  auto vertex_id = [&](int u1, int u2) {
    auto [it, fresh] = id_of.emplace(pair_key(u1, u2), static_cast<int>(pg.vertices.size()));
    if (fresh) {
      if (static_cast<long long>(pg.vertices.size()) + 1 > max_vertices)
        fail(ErrorCode::CapExceeded, "pair product graph would exceed " +
                                         std::to_string(max_vertices) + " vertices");
      pg.vertices.emplace_back(u1, u2);
    }
    return it->second;
  };

  std::vector<std::vector<int>> by_colour(g.s);
  for (int ei = 0; ei < g.edge_count(); ++ei) by_colour[g.edges[ei].colour].push_back(ei);

  for (int c = 0; c < g.s; ++c) {
    const auto& group = by_colour[c];
    for (int e1 : group)
      for (int e2 : group) {
        if (e1 == e2) continue;
        auto [a, b] = std::pair(g.edges[e1].u, g.edges[e1].v);
        auto [x, y] = std::pair(g.edges[e2].u, g.edges[e2].v);
        // first coordinates from e1, both orientations of e2
        pg.edges.push_back({vertex_id(a, x), vertex_id(b, y), c, e1, e2});
        pg.edges.push_back({vertex_id(a, y), vertex_id(b, x), c, e1, e2});
      }
  }
  // Each unordered product edge appears once per ordered (e1, e2) pattern by
  // construction; the host properness must carry over.
  std::unordered_map<std::uint64_t, int> vc_seen;
  for (const auto& pe : pg.edges)
    for (int end : {pe.a, pe.b}) {
      auto key = pair_key(end, pe.colour);
      if (!vc_seen.emplace(key, 1).second)
        throw std::logic_error("pair product graph lost properness");
    }
  return pg;
}

namespace {

// colour -> (neighbour, edge index) lookup per host vertex; proper colouring
// makes the mate unique.
struct ColourIndex {
  std::vector<std::unordered_map<int, std::pair<int, int>>> at;

  explicit ColourIndex(const ColouredGraph& g) : at(g.n) {
    for (int ei = 0; ei < g.edge_count(); ++ei) {
      const auto& e = g.edges[ei];
      at[e.u].emplace(e.colour, std::make_pair(e.v, ei));
      at[e.v].emplace(e.colour, std::make_pair(e.u, ei));
    }
  }
};

struct ConstrainedDfs {
  const ColouredGraph* g;
  const ColourIndex* index;
  const std::vector<std::vector<int>>* inc;
  int target = 0;  // 2l
  std::atomic<long long>* budget;
  Rng* rng;

  std::vector<std::pair<int, int>> pairs;
  std::vector<int> colours;
  std::vector<char> used_host;   // host vertices on the cycle
  std::vector<char> used_colour;

  bool push_pair(int u1, int u2) {
    if (u1 == u2 || used_host[u1] || used_host[u2]) return false;
    pairs.emplace_back(u1, u2);
    used_host[u1] = used_host[u2] = 1;
    return true;
  }

  void pop_pair() {
    auto [u1, u2] = pairs.back();
    used_host[u1] = used_host[u2] = 0;
    pairs.pop_back();
  }

  // Neighbours of (v1, v2): for each host edge v1-w1 of colour c, the unique
  // host edge of colour c at v2 (if any) supplies w2.
  bool extend() {
    if (budget->fetch_sub(1) <= 0) return false;
    auto [v1, v2] = pairs.back();
    if (static_cast<int>(pairs.size()) == target) {
      auto [s1, s2] = pairs.front();
      for (int ei : (*inc)[v1]) {
        const auto& e = g->edges[ei];
        int w1 = e.u == v1 ? e.v : e.u;
        if (w1 != s1 || used_colour[e.colour]) continue;
        auto mate = index->at[v2].find(e.colour);
        if (mate == index->at[v2].end() || mate->second.first != s2) continue;
        colours.push_back(e.colour);
        return true;
      }
      return false;
    }
    std::vector<std::pair<int, int>> cand;  // (edge at v1, w2)
    for (int ei : (*inc)[v1]) {
      const auto& e = g->edges[ei];
      if (used_colour[e.colour]) continue;
      int w1 = e.u == v1 ? e.v : e.u;
      auto mate = index->at[v2].find(e.colour);
      if (mate == index->at[v2].end()) continue;
      int w2 = mate->second.first;
      if (w1 == w2 || used_host[w1] || used_host[w2]) continue;
      cand.emplace_back(ei, w2);
    }
    std::shuffle(cand.begin(), cand.end(), *rng);
    for (auto [ei, w2] : cand) {
      const auto& e = g->edges[ei];
      int w1 = e.u == v1 ? e.v : e.u;
      if (!push_pair(w1, w2)) continue;
      colours.push_back(e.colour);
      used_colour[e.colour] = 1;
      if (extend()) return true;
      used_colour[e.colour] = 0;
      colours.pop_back();
      pop_pair();
      if (budget->load() <= 0) return false;
    }
    return false;
  }
};

}  // namespace

ConstrainedCycleResult find_constrained_cycle(const ColouredGraph& g, int two_ell,
                                              long long node_budget, std::uint64_t seed,
                                              int workers) {
  if (two_ell < 4 || two_ell % 2 != 0)
    fail(ErrorCode::InfeasibleParameters, "cycle length must be an even number >= 4");
  ConstrainedCycleResult out;
  if (g.edge_count() == 0) return out;

  ColourIndex index(g);
  auto inc = g.incident_edges();
  std::vector<std::vector<int>> by_colour(g.s);
  for (int ei = 0; ei < g.edge_count(); ++ei) by_colour[g.edges[ei].colour].push_back(ei);
  std::vector<int> rich_colours;  // colours with at least two host edges
  for (int c = 0; c < g.s; ++c)
    if (by_colour[c].size() >= 2) rich_colours.push_back(c);
  if (rich_colours.empty()) {
    out.nodes = 0;
    out.status = SearchStatus::NotFound;  // no product edge exists at all
    return out;
  }

  std::atomic<long long> budget{node_budget};
  std::mutex result_mu;
  std::optional<ConstrainedCycle> found;
  std::atomic<bool> done{false};

  auto worker = [&](int wid) {
    Rng rng = make_rng(seed, "constrained-cycle", wid);
    ConstrainedDfs dfs;
    dfs.g = &g;
    dfs.index = &index;
    dfs.inc = &inc;
    dfs.target = two_ell;
    dfs.budget = &budget;
    dfs.rng = &rng;
    dfs.used_host.assign(g.n, 0);
    dfs.used_colour.assign(g.s, 0);
    while (!done.load() && budget.load() > 0) {
      // root: a random product edge sampled from a random rich colour
      int c = rich_colours[uniform_int(rng, 0, static_cast<int>(rich_colours.size()) - 1)];
      const auto& group = by_colour[c];
      int e1 = group[uniform_int(rng, 0, static_cast<int>(group.size()) - 1)];
      int e2 = group[uniform_int(rng, 0, static_cast<int>(group.size()) - 1)];
      if (e1 == e2) continue;
      int a = g.edges[e1].u, b = g.edges[e1].v;
      int x = g.edges[e2].u, y = g.edges[e2].v;
      if (uniform_int(rng, 0, 1)) std::swap(x, y);

      dfs.pairs.clear();
      dfs.colours.clear();
      std::fill(dfs.used_host.begin(), dfs.used_host.end(), 0);
      std::fill(dfs.used_colour.begin(), dfs.used_colour.end(), 0);
      if (!dfs.push_pair(a, x)) continue;
      if (!dfs.push_pair(b, y)) continue;
      dfs.colours.push_back(c);
      dfs.used_colour[c] = 1;
      if (dfs.extend()) {
        std::lock_guard<std::mutex> lock(result_mu);
        if (!done.exchange(true)) found = ConstrainedCycle{dfs.pairs, dfs.colours};
        return;
      }
    }
  };

  if (workers <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  out.nodes = node_budget - std::max<long long>(budget.load(), 0);
  if (found) {
    out.status = SearchStatus::Found;
    out.cycle = std::move(*found);
  } else {
    out.status = SearchStatus::BudgetExhausted;
  }
  return out;
}

ExtractedPair extract_disjoint_rainbow_pair(const ConstrainedCycle& cycle,
                                            const ColouredGraph& g) {
  const int len = static_cast<int>(cycle.pairs.size());
  if (len < 4 || static_cast<int>(cycle.colours.size()) != len)
    fail(ErrorCode::ProjectionInvalid, "malformed constrained cycle");

  std::unordered_map<std::uint64_t, int> edge_at;
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    const auto& e = g.edges[ei];
    edge_at[pair_key(e.u, e.v)] = ei;
    edge_at[pair_key(e.v, e.u)] = ei;
  }

  // all 2*len host vertices distinct (the ~ exclusion)
  std::vector<char> seen(g.n, 0);
  for (auto [u1, u2] : cycle.pairs) {
    if (u1 == u2 || seen[u1] || seen[u2])
      fail(ErrorCode::ProjectionInvalid, "pair-vertices share host vertices");
    seen[u1] = seen[u2] = 1;
  }

  ExtractedPair out;
  std::vector<char> colour_seen(g.s, 0);
  auto project = [&](auto select) {
    LabelledCycle c;
    for (int i = 0; i < len; ++i) c.vertices.push_back(select(cycle.pairs[i]));
    for (int i = 0; i < len; ++i) {
      int u = c.vertices[i], v = c.vertices[(i + 1) % len];
      auto it = edge_at.find(pair_key(u, v));
      if (it == edge_at.end())
        fail(ErrorCode::ProjectionInvalid, "projected edge missing from host");
      if (g.edges[it->second].colour != cycle.colours[i])
        fail(ErrorCode::ProjectionInvalid, "projected edge has wrong colour");
      c.edge_indices.push_back(it->second);
    }
    return c;
  };
  out.first = project([](const std::pair<int, int>& p) { return p.first; });
  out.second = project([](const std::pair<int, int>& p) { return p.second; });

  for (int i = 0; i < len; ++i) {
    if (colour_seen[cycle.colours[i]])
      fail(ErrorCode::ProjectionInvalid, "cycle repeats a colour");
    colour_seen[cycle.colours[i]] = 1;
  }

  out.cert.edge_indices = out.first.edge_indices;
  out.cert.edge_indices.insert(out.cert.edge_indices.end(), out.second.edge_indices.begin(),
                               out.second.edge_indices.end());
  std::sort(out.cert.edge_indices.begin(), out.cert.edge_indices.end());
  if (static_cast<int>(out.cert.edge_indices.size()) != 2 * len ||
      std::adjacent_find(out.cert.edge_indices.begin(), out.cert.edge_indices.end()) !=
          out.cert.edge_indices.end())
    fail(ErrorCode::ProjectionInvalid, "projections share host edges");
  if (!verify_two_regular_coloured(g, out.cert).ok())
    fail(ErrorCode::ProjectionInvalid, "union is not a valid certificate");
  return out;
}

SmallTwoRegularResult detect_small_two_regular(const LinearHypergraph& host, int ell,
                                               long long node_budget, int partition_attempts,
                                               std::uint64_t seed, int workers) {
  if (ell < 2) fail(ErrorCode::InfeasibleParameters, "need l >= 2");
  SmallTwoRegularResult out;
  if (host.edge_count() == 0) return out;
  const int attempts = std::max(partition_attempts, 1);
  const long long slice = std::max<long long>(1, node_budget / attempts);

  for (int raw = 0; raw < 3 * attempts; ++raw) {
    const int attempt = raw / 3;
    const int colour_part = raw % 3;  // every part gets a turn as the colours
    auto view = tripartite_view(host, seed, attempt, colour_part);
    if (!view) continue;
    ++out.partitions_tried;
    auto found = find_constrained_cycle(view->graph, 2 * ell, slice / 3 + 1,
                                        derive_seed(seed, "small-two-regular", raw), workers);
    out.nodes += found.nodes;
    if (found.status != SearchStatus::Found) continue;
    auto extracted = extract_disjoint_rainbow_pair(*found.cycle, view->graph);
    RegularCertificate cert;
    cert.r = 2;
    for (int ci : extracted.cert.edge_indices)
      cert.edge_indices.push_back(
          view->balanced.source_edge_index[view->graph.host_edge_index[ci]]);
    std::sort(cert.edge_indices.begin(), cert.edge_indices.end());
    if (!verify_regular(host, cert).ok())
      throw std::logic_error("small-two-regular pullback failed verification");
    out.status = SearchStatus::Found;
    out.cert = std::move(cert);
    return out;
  }
  out.status = SearchStatus::BudgetExhausted;
  return out;
}

}  // namespace hreg
