#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hreg/certificate.hpp"
#include "hreg/coloured_graph.hpp"
#include "hreg/graph.hpp"
#include "hreg/hypergraph.hpp"

namespace hreg {

using BigInt = boost::multiprecision::cpp_int;

enum class SearchStatus { Found, NotFound, BudgetExhausted };
const char* search_status_name(SearchStatus s);

struct OracleBudget {
  long long max_nodes = 50'000'000;
  int max_edges_in_witness = INT_MAX;
  double time_limit_seconds = 3600.0;
};

// GF(2) nullspace of the vertex-edge incidence matrix; bit-packed rows with
// first-set-bit pivoting. Returns a small-support (not minimum-support)
// nullspace element, or nullopt iff the columns are independent. Works for
// arbitrary, even non-uniform, edge lists.
std::optional<EvenCertificate> find_even_subhypergraph(int n,
                                                       const std::vector<std::vector<int>>& edges);
std::optional<EvenCertificate> find_even_subhypergraph(const Hypergraph& h);

struct RegularSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<RegularCertificate> cert;
  long long nodes_explored = 0;
};

// Exhaustive backtracking over edge subsets in index order (include branch
// first), so the first witness found is the lexicographically least one.
// NotFound is exhaustive certainty relative to budget.max_edges_in_witness;
// BudgetExhausted is indeterminate.
RegularSearchResult find_r_regular_exact(const Hypergraph& h, int r, const OracleBudget& budget);

// hom(C_{2h}, G) = trace(A^{2h}), exact big-integer arithmetic.
BigInt hom_cycle_count(const Graph& g, int h);

struct PathCount {
  std::uint64_t count = 0;
  bool capped = false;  // true means "at least count"
};

// Labelled rainbow paths with h edges (both orientations counted), exhaustive
// DFS stopping at limit.
PathCount count_rainbow_paths(const ColouredGraph& g, int h, std::uint64_t limit);

}  // namespace hreg
