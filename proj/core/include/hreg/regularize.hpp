#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hreg/coloured_graph.hpp"
#include "hreg/hypergraph.hpp"

namespace hreg {

// A k-partite subhypergraph of some input, balanced in the sense that for
// each part X_i the maximum degree over X_i is at most mu * e(host) / |X_i|.
// Vertex ids are the input's ids; source_edge_index maps host edges back to
// input edge indices (injectively).
struct BalancedHypergraph {
  LinearHypergraph host;
  std::vector<std::vector<int>> parts;
  double mu = 0.0;
  int lambda = 0;
  std::vector<int> per_part_max_degree;
  std::vector<int> source_edge_index;

  // construction stats
  int partition_tries = 0;
  int resample_tries = 0;          // equal-parts Z resampling
  int deleted_edges = 0;           // equal-parts min-degree deletion loop
  std::vector<double> part_shrink; // |W'|/|W| per part after deletion
};

struct RegularizeParams {
  int retry_limit = 100;        // random partition tries
  int resample_limit = 200;     // equal-parts Z resampling tries
  std::uint64_t seed = 0;
};

// Random-partition regularization: keeps the best of retry_limit uniform
// k-partitions (most transversal edges), drops isolated vertices, splits each
// part into dyadic degree classes and takes the class combination retaining
// the most edges (ties broken lexicographically). Output satisfies
// mu = 2*lambda^k balancedness and e >= e(input) * k! / (k*lambda)^k, both
// checked at runtime; lambda = ceil(log2 n).
BalancedHypergraph balanced_kpartite(const LinearHypergraph& g, const RegularizeParams& params);

// 3-uniform variant with |X| <= |Y| = |Z|: runs balanced_kpartite, then the
// min-degree deletion loop (round-robin over parts, minimum-degree violator
// first), then samples Z among |Y'|-subsets of the largest part until the
// three bounds hold: e >= |V| * d / (81*lambda^3), 96*lambda^6 balancedness,
// |X| <= |Y| = |Z|. Requires e(g) >= n*d and n >= 3.
BalancedHypergraph balanced_equal_parts(const LinearHypergraph& g, double d,
                                        const RegularizeParams& params);

// A balanced tripartite subhypergraph viewed as a properly edge-coloured
// graph, colours drawn from the smallest part. One seeded attempt; nullopt
// when the regularization misses its threshold or no edge survives.
struct TripartiteView {
  BalancedHypergraph balanced;
  ColouredGraph graph;
  std::vector<int> part_of;
  int colour_part = 0;
};

// colour_part_override picks the colour class (-1 = smallest part).
std::optional<TripartiteView> tripartite_view(const LinearHypergraph& host, std::uint64_t seed,
                                              int attempt, int colour_part_override = -1);

}  // namespace hreg
