#include "hreg/coloured_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace hreg {

int ColouredGraph::max_degree() const {
  std::vector<int> d(n, 0);
  int best = 0;
  for (const auto& e : edges) best = std::max({best, ++d[e.u], ++d[e.v]});
  return best;
}

int ColouredGraph::max_colour_use() const {
  std::vector<int> use(s, 0);
  int best = 0;
  for (const auto& e : edges) best = std::max(best, ++use[e.colour]);
  return best;
}

double ColouredGraph::balance_mu() const {
  if (n == 0 || edges.empty() || s == 0) return 1.0;
  double d = average_degree();
  double mu = max_degree() / d;
  mu = std::max(mu, max_colour_use() * static_cast<double>(s) / (n * d));
  return std::max(mu, 1.0);
}

std::vector<std::vector<int>> ColouredGraph::incident_edges() const {
  std::vector<std::vector<int>> inc(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    inc[edges[i].u].push_back(static_cast<int>(i));
    inc[edges[i].v].push_back(static_cast<int>(i));
  }
  return inc;
}

Graph ColouredGraph::as_graph() const {
  Graph g;
  g.n = n;
  g.edges.reserve(edges.size());
  for (const auto& e : edges) g.edges.emplace_back(e.u, e.v);
  return g;
}

std::optional<std::string> proper_colouring_violation(const ColouredGraph& g) {
  std::unordered_map<std::uint64_t, int> seen_pair;
  std::unordered_map<std::uint64_t, int> seen_vc;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.u == e.v) return "loop at vertex " + std::to_string(e.u);
    if (e.u < 0 || e.v >= g.n || e.colour < 0 || e.colour >= g.s)
      return "edge " + std::to_string(i) + " out of range";
    std::uint64_t pk = (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
    if (!seen_pair.emplace(pk, i).second)
      return "parallel edge between " + std::to_string(e.u) + " and " + std::to_string(e.v);
    for (int w : {e.u, e.v}) {
      std::uint64_t vc = (static_cast<std::uint64_t>(w) << 32) | static_cast<std::uint32_t>(e.colour);
      if (!seen_vc.emplace(vc, i).second)
        return "vertex " + std::to_string(w) + " meets colour " + std::to_string(e.colour) +
               " twice";
    }
  }
  return std::nullopt;
}

ColouredGraph to_coloured_graph(const LinearHypergraph& h, int colour_part,
                                const std::vector<int>& part_of) {
  if (h.k != 3) fail(ErrorCode::WrongUniformity, "coloured graph requires a 3-graph");
  if (colour_part < 0 || colour_part > 2)
    fail(ErrorCode::IndexOutOfRange, "colour part must be 0, 1 or 2");
  if (static_cast<int>(part_of.size()) != h.n)
    fail(ErrorCode::NotTripartite, "partition size differs from vertex count");
  for (int v = 0; v < h.n; ++v)
    if (part_of[v] < 0 || part_of[v] > 2)
      fail(ErrorCode::NotTripartite, "vertex " + std::to_string(v) + " has no part");

  // Dense relabelling in host order, restricted to vertices/colours that
  // actually occur on edges.
  std::vector<int> vertex_id(h.n, -1), colour_id(h.n, -1);
  ColouredGraph g;

  struct RawEdge {
    int y, z, x;
  };
  std::vector<RawEdge> raw;
  raw.reserve(h.edges.size());
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    int x = -1;
    std::vector<int> others;
    bool seen_part[3] = {false, false, false};
    for (int v : e) {
      if (seen_part[part_of[v]])
        fail(ErrorCode::NotTripartite, "edge " + std::to_string(i) + " is not transversal");
      seen_part[part_of[v]] = true;
      if (part_of[v] == colour_part)
        x = v;
      else
        others.push_back(v);
    }
    raw.push_back({others[0], others[1], x});
  }
  for (const auto& e : raw) {
    if (vertex_id[e.y] < 0) vertex_id[e.y] = 0;
    if (vertex_id[e.z] < 0) vertex_id[e.z] = 0;
    if (colour_id[e.x] < 0) colour_id[e.x] = 0;
  }
  for (int v = 0; v < h.n; ++v) {
    if (vertex_id[v] == 0) {
      vertex_id[v] = g.n++;
      g.vertex_to_host.push_back(v);
    }
    if (colour_id[v] == 0) {
      colour_id[v] = g.s++;
      g.colour_to_host.push_back(v);
    }
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int u = vertex_id[raw[i].y], v = vertex_id[raw[i].z];
    if (u > v) std::swap(u, v);
    g.edges.push_back({u, v, colour_id[raw[i].x]});
    g.host_edge_index.push_back(static_cast<int>(i));
  }

  // Linearity of the host forces a proper colouring; anything else is a bug.
  if (auto bad = proper_colouring_violation(g))
    throw std::logic_error("to_coloured_graph produced improper colouring: " + *bad);
  return g;
}

}  // namespace hreg
