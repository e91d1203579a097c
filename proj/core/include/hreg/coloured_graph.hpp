#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hreg/graph.hpp"
#include "hreg/hypergraph.hpp"

namespace hreg {

struct ColouredEdge {
  int u = 0, v = 0;  // u < v
  int colour = 0;
};

// Properly edge-coloured graph: the working view of a 3-partite linear
// 3-graph where one part plays the role of colours. When built through
// to_coloured_graph the provenance maps tie vertices, colours and edges back
// to the host hypergraph.
struct ColouredGraph {
  int n = 0;
  int s = 0;  // number of colours, ids in [0, s)
  std::vector<ColouredEdge> edges;

  std::vector<int> vertex_to_host;   // empty unless derived from a hypergraph
  std::vector<int> colour_to_host;
  std::vector<int> host_edge_index;

  int edge_count() const { return static_cast<int>(edges.size()); }
  double average_degree() const { return n == 0 ? 0.0 : 2.0 * edge_count() / n; }
  int max_degree() const;
  int max_colour_use() const;

  // Smallest mu for which the graph is mu-balanced: max degree at most mu*d
  // and every colour used at most n*d*mu/s times.
  double balance_mu() const;

  std::vector<std::vector<int>> incident_edges() const;  // edge indices per vertex
  Graph as_graph() const;
};

// Nonempty description of the first violation (same-coloured edges sharing a
// vertex, or parallel edges), if any.
std::optional<std::string> proper_colouring_violation(const ColouredGraph& g);

// part_of assigns each host vertex to one of three parts {0,1,2}; every edge
// must have one vertex in each part. The part colour_part becomes the colour
// set; vertices of the other two parts are relabelled densely, in host order.
ColouredGraph to_coloured_graph(const LinearHypergraph& h, int colour_part,
                                const std::vector<int>& part_of);

}  // namespace hreg
