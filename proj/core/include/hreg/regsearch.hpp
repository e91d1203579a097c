#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hreg/certificate.hpp"
#include "hreg/coloured_graph.hpp"
#include "hreg/oracles.hpp"

namespace hreg {

// Knobs of the 2-regular coloured search. h is the cycle half-length / path
// length, t the sequence length, q the extension cap of path sequences.
// t == 0 and q == 0 mean "derive a default".
struct SearchParams {
  int h = 2;
  int t = 0;
  std::uint64_t q = 0;
  double alpha = 2.0;
  double hom_threshold_scale = 1.0;  // scales the cycles-vs-paths threshold
  long long sample_budget = 1'000'000;
  int retry_limit = 64;
  long long dfs_node_budget = 200'000;
  std::uint64_t seed = 0;
  int workers = 1;
};

enum class Strategy { Matchings, Cycles, Paths };
const char* strategy_name(Strategy s);

struct LabelledPath {
  std::vector<int> vertices;      // h+1 vertices
  std::vector<int> edge_indices;  // h edges of the host coloured graph
};

struct LabelledCycle {
  std::vector<int> vertices;      // 2h vertices in cyclic order
  std::vector<int> edge_indices;  // edge i joins vertices[i], vertices[i+1 mod 2h]
};

// Rainbow cycles that pairwise do not touch each other's colours anywhere in
// the host graph (implies vertex- and colour-disjointness).
struct NiceCycleSequence {
  std::vector<LabelledCycle> cycles;
};

// Colour-disjoint rainbow paths, pairwise at host distance > h-1, each
// extending to at most q homomorphic 2h-cycles.
struct NicePathSequence {
  std::vector<LabelledPath> paths;
  std::uint64_t q = 0;
};

// Random start, random feasible extension, fresh colours only; restarts up to
// retry_limit times.
std::optional<LabelledPath> greedy_rainbow_path(const ColouredGraph& g, int h,
                                                const std::vector<char>& forbidden_vertices,
                                                const std::vector<char>& forbidden_colours,
                                                std::uint64_t seed, int retry_limit);

std::optional<NiceCycleSequence> sample_nice_cycle_sequence(const ColouredGraph& g,
                                                            const SearchParams& params);

std::optional<NicePathSequence> sample_nice_path_sequence(const ColouredGraph& g,
                                                          const SearchParams& params);

// Homomorphic 2h-cycles extending the path: closed walks obtained by walking
// h arbitrary steps from the last vertex back to the first. Exact, capped.
std::uint64_t count_path_extensions(const ColouredGraph& g, const LabelledPath& path,
                                    std::uint64_t cap);

// Greedy rainbow matching of exactly t edges; result is sorted edge indices.
std::optional<std::vector<int>> sample_rainbow_matching(const ColouredGraph& g, int t,
                                                        std::uint64_t seed, int retry_limit);

// One sampled sequence inside the collision store: canonical member
// encodings (rotation/reflection-normalised vertex lists) plus the edge set
// of the union.
struct StoredSequence {
  std::vector<std::vector<int>> members;
  std::vector<int> union_edges;
};

using CollisionObserver =
    std::function<void(const StoredSequence&, const StoredSequence&)>;

struct CollisionSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<TwoRegularColouredCertificate> cert;
  long long samples = 0;
  long long key_collisions = 0;
  long long discarded_pairs = 0;
  int t_used = 0;
};

// Birthday search over sampled sequences bucketed by collision key (cycles:
// colour multiset; paths: colours + endpoints; matchings: vertices +
// colours). A key collision between two distinct sequences yields the
// edge-level symmetric difference, which is returned iff it verifies as a
// TwoRegularColouredCertificate; failed pairs are discarded. For matchings
// with params.t == 0 the size is swept downward from the largest greedy
// matching found (size-1 and size-2 matchings can never collide in a properly
// coloured graph). The observer, when set, sees every key collision.
CollisionSearchResult collision_search(const ColouredGraph& g, Strategy strategy,
                                       const SearchParams& params,
                                       const CollisionObserver& observer = nullptr);

struct StrategyChoice {
  bool applicable = false;
  Strategy strategy = Strategy::Matchings;
  int h = 1;
  double mu = 1.0;
  double avg_degree = 0.0;
  double log2_hom = 0.0;        // meaningful when h >= 2
  double log2_threshold = 0.0;  // (128 h^{3/2} mu^{1/2})^{2h} * n * d^h, scaled
  SearchParams params;
};

// Picks h as the smallest integer with s >= n * d^{-h+1/2}; h = 1 dispatches
// to matchings, otherwise the exact hom count of C_{2h} decides cycles
// (above threshold) versus paths. Fills the lemma defaults for t and q.
StrategyChoice choose_strategy(const ColouredGraph& g, const SearchParams& base);

struct TwoRegularPipelineResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<RegularCertificate> cert;  // r = 2, against the input host
  long long samples = 0;
  int partitions_tried = 0;
  Strategy strategy_used = Strategy::Matchings;
  int t_used = 0;
  // tripartition of the successful attempt (for coloured certificates)
  std::vector<int> part_of;
  int colour_part = -1;
};

// End-to-end 2-regular-subhypergraph search on a linear 3-graph: repeatedly
// regularize with fresh seeds, view as a coloured graph, run the collision
// search on a slice of the sample budget, pull the certificate back. forced
// pins the strategy; nullopt dispatches per attempt.
TwoRegularPipelineResult detect_two_regular(const LinearHypergraph& host,
                                            std::optional<Strategy> forced,
                                            const SearchParams& params, int partition_attempts);

}  // namespace hreg
