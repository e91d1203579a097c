#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hreg/errors.hpp"
#include "hreg/graph.hpp"

namespace hreg {

// Simple k-uniform hypergraph on dense vertex ids [0, n). Edges are kept as
// sorted k-sets; edge identity is the sorted vertex tuple.
struct Hypergraph {
  int k = 3;
  int n = 0;
  std::vector<std::vector<int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;
};

// Sorts every edge and throws InputError on: wrong edge size, repeated vertex
// inside an edge, vertex id out of range, duplicate edges.
void validate_simple(Hypergraph& g);

// First pair (i, j) of distinct edges sharing at least two vertices, if any.
std::optional<std::pair<int, int>> linearity_violation(const Hypergraph& g);

// A Hypergraph in which any two edges intersect in at most one vertex.
// Construct through from(), which validates.
struct LinearHypergraph : Hypergraph {
  static LinearHypergraph from(Hypergraph g);
};

// Edge indices incident to each vertex.
std::vector<std::vector<int>> incidence_lists(const Hypergraph& g);

// Subhypergraph spanned by the given edge indices (vertex set unchanged).
Hypergraph sub_hypergraph(const Hypergraph& g, const std::vector<int>& edge_indices);

// Text format: first line "k n m", then m lines of k vertex ids; '#' starts a
// comment line. parse_hypergraph additionally enforces linearity.
LinearHypergraph parse_hypergraph(std::istream& in);
LinearHypergraph parse_hypergraph_file(const std::string& path);
Hypergraph parse_simple_hypergraph(std::istream& in);
Hypergraph parse_simple_hypergraph_file(const std::string& path);
void serialize_hypergraph(const Hypergraph& g, std::ostream& out);
std::string serialize_hypergraph(const Hypergraph& g);

// Link of v in a 3-graph: edge {a, b} iff {v, a, b} is an edge. The returned
// graph keeps the host vertex numbering (v itself ends up isolated).
Graph link_graph(const Hypergraph& g, int v);

// Pair hypergraph of a simple 3-graph: one vertex per unordered host pair,
// one edge {uv, vw, uw} per host edge {u, v, w}. Output is linear for every
// simple input. pair_of maps pair-vertex id -> (u, v) with u < v.
struct PairHypergraph {
  LinearHypergraph h;
  std::vector<std::pair<int, int>> pair_of;
};
PairHypergraph pair_hypergraph(const Hypergraph& g, bool drop_isolated);

}  // namespace hreg
