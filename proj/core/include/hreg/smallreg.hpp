#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hreg/certificate.hpp"
#include "hreg/coloured_graph.hpp"
#include "hreg/oracles.hpp"
#include "hreg/regsearch.hpp"

namespace hreg {

// Graph on ordered pairs of distinct host vertices: (u1,u2) ~ (v1,v2) when
// u1v1 and u2v2 are distinct host edges of the same colour (the pair of a
// host edge with itself is unusable downstream and is omitted). Inherits a
// proper colouring from the host.
struct PairProductGraph {
  const ColouredGraph* host = nullptr;
  std::vector<std::pair<int, int>> vertices;
  struct PEdge {
    int a = 0, b = 0;  // indices into vertices
    int colour = 0;
    int host_e1 = 0, host_e2 = 0;
  };
  std::vector<PEdge> edges;
};

// Eager construction; throws CapExceeded when the pair-vertex count would
// exceed max_vertices. Isolated pair-vertices are omitted.
PairProductGraph build_pair_product_graph(const ColouredGraph& g, long long max_vertices);

struct ConstrainedCycle {
  std::vector<std::pair<int, int>> pairs;  // cyclic order
  std::vector<int> colours;                // colour of edge i = (pairs[i], pairs[i+1])
};

struct ConstrainedCycleResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<ConstrainedCycle> cycle;
  long long nodes = 0;
};

// Randomized DFS over the (lazily generated) pair product graph for a
// 2l-cycle whose pair-vertices are pairwise host-disjoint and whose edges use
// pairwise distinct colours. Neighbours are generated on demand: a proper
// host colouring leaves at most one mate per colour and direction.
ConstrainedCycleResult find_constrained_cycle(const ColouredGraph& g, int two_ell,
                                              long long node_budget, std::uint64_t seed,
                                              int workers = 1);

struct ExtractedPair {
  TwoRegularColouredCertificate cert;  // 4l host edges
  LabelledCycle first, second;         // the two host cycles
};

// Projects the coordinates of a constrained cycle to two vertex-disjoint
// rainbow host cycles with equal colour sets; verified, throws
// ProjectionInvalid on any inconsistency.
ExtractedPair extract_disjoint_rainbow_pair(const ConstrainedCycle& cycle,
                                            const ColouredGraph& g);

struct SmallTwoRegularResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<RegularCertificate> cert;  // 4l edges against the input host
  long long nodes = 0;
  int partitions_tried = 0;
};

// End-to-end bounded-size search on a linear 3-graph: regularize with fresh
// seeds, search the pair product of each coloured view for a constrained
// 2l-cycle, project and pull back.
SmallTwoRegularResult detect_small_two_regular(const LinearHypergraph& host, int ell,
                                               long long node_budget, int partition_attempts,
                                               std::uint64_t seed, int workers = 1);

}  // namespace hreg
