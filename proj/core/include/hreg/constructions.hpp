#pragma once

#include <cstdint>
#include <vector>

#include "hreg/hypergraph.hpp"

namespace hreg {

// Parameters of the probabilistic r-regular-free construction. p is derived
// from n and k; c0 scales the size of the distinguished part A.
struct ConstructionParams {
  int n = 0;
  int k = 3;
  int r = 3;
  double c0 = 0.5;
  std::uint64_t seed = 0;
  int bad_check_depth = 12;       // max vertices in the bad-subhypergraph scan
  long long scan_node_limit = 20'000'000;

  double edge_probability() const;  // 1 / (8 (k-1)! n^{k-2})
};

struct LowerBoundReport {
  int part_a_size = 0;
  int part_b_size = 0;
  double p = 0.0;
  long long sampled_edges = 0;       // X
  long long intersecting_pairs = 0;  // Y
  long long bad_subhypergraphs = 0;  // Z
  long long final_edges = 0;
  bool trivial_branch = false;
  bool partial_scan = false;  // scan capped by depth or node limit
};

// Steiner triple system on n vertices, n = 1 or 3 (mod 6); Bose construction
// for n = 3 (mod 6), Skolem-type construction for n = 1 (mod 6). Labels are
// shuffled by seed.
LinearHypergraph gen_sts(int n, std::uint64_t seed);

// Rejection sampling of uniform k-sets keeping linearity; best effort, stops
// at target_m edges or after a stall.
LinearHypergraph gen_random_linear(int n, int k, int target_m, std::uint64_t seed);

// The two-phase deletion construction: sample k-sets with one vertex in A
// with probability p, delete one edge of each pair sharing >= 2 vertices,
// then repeatedly delete an edge of every bad subhypergraph of the
// B-restriction found by exhaustive subset scan (capped by bad_check_depth).
// When r / ((r-1)(k-1)) >= 1 a max-degree-below-r instance is returned
// instead (trivial branch).
std::pair<LinearHypergraph, LowerBoundReport> gen_lower_bound(const ConstructionParams& params);

// Negative-control instances: the anti-Pasch STS(9) for n = 9, otherwise a
// random linear 3-graph filtered by the exact oracle to contain no 2-regular
// subhypergraph with at most 8 edges.
LinearHypergraph gen_pasch_free_probe(int n, std::uint64_t seed);

}  // namespace hreg
