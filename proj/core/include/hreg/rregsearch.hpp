#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hreg/certificate.hpp"
#include "hreg/oracles.hpp"
#include "hreg/regularize.hpp"

namespace hreg {

// r sets whose pairwise intersections all equal the core.
struct Sunflower {
  std::vector<std::vector<int>> petals;
  std::vector<int> core;
};

// Classical recursive extraction: greedily collect pairwise-disjoint sets; if
// fewer than r exist, recurse on the link of a most popular element. Exact
// and complete for this recursion; the output invariant is verified.
std::optional<Sunflower> find_sunflower(const std::vector<std::vector<int>>& family, int r);

// Deduplicated stream of greedy random matchings in the balanced host:
// repeatedly pick a surviving edge and delete everything intersecting it.
// t >= 1 samples matchings of exactly that size; t == 0 samples maximal ones.
class MatchingSampler {
public:
  MatchingSampler(const LinearHypergraph& host, int t, long long attempt_budget,
                  std::uint64_t seed);

  // Next fresh matching as sorted edge indices; nullopt once the attempt
  // budget is spent.
  std::optional<std::vector<int>> next();

  long long attempts() const { return attempts_; }

private:
  const LinearHypergraph& host_;
  int t_;
  long long budget_;
  long long attempts_ = 0;
  std::uint64_t rng_state_;
  std::vector<std::vector<int>> seen_;  // sorted, for dedup
};

struct RRegParams {
  long long matching_budget = 100'000;
  int regularize_attempts = 30;
  int t = 0;  // 0 = sample maximal matchings
  int kpartite_retry = 100;
  std::uint64_t seed = 0;
  int workers = 1;  // parallel samplers; deterministic only when 1
};

struct RRegSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<RegularCertificate> cert;
  long long matchings_sampled = 0;
  int partitions_tried = 0;
  int buckets = 0;
  int lemma_t = 0;  // ceil(|X1| / (2 k mu)) of the last regularization
};

// Pipeline: regularize with balanced_kpartite (fresh partition per attempt),
// stream matchings, bucket by spanned vertex set, attempt sunflower
// extraction whenever a bucket holds at least r matchings, return the union
// of the petals minus the core, verified r-regular against the input.
RRegSearchResult find_r_regular_sunflower(const LinearHypergraph& h, int r,
                                          const RRegParams& params);

}  // namespace hreg
