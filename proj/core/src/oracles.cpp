#include "hreg/oracles.hpp"

#include <algorithm>
#include <chrono>

#include "hreg/bitset.hpp"

namespace hreg {

const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

std::optional<EvenCertificate> find_even_subhypergraph(
    int n, const std::vector<std::vector<int>>& edges) {
  const int m = static_cast<int>(edges.size());
  if (m == 0) return std::nullopt;

  // Eliminate columns (edges) against pivot rows; every column that reduces
  // to zero yields a nullspace element through its combination vector.
  std::vector<int> pivot_of_row(n, -1);
  std::vector<Bitset> piv_vec, piv_comb;
  std::vector<Bitset> dependencies;

  for (int j = 0; j < m; ++j) {
    Bitset v(n), comb(m);
    for (int w : edges[j]) {
      if (w < 0 || w >= n) fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(w));
      v.set(w);
    }
    comb.set(j);
    bool installed = false;
    while (v.any()) {
      int p = v.find_first();
      if (pivot_of_row[p] < 0) {
        pivot_of_row[p] = static_cast<int>(piv_vec.size());
        piv_vec.push_back(std::move(v));
        piv_comb.push_back(std::move(comb));
        installed = true;
        break;
      }
      v ^= piv_vec[pivot_of_row[p]];
      comb ^= piv_comb[pivot_of_row[p]];
    }
    if (!installed) dependencies.push_back(std::move(comb));
  }
  if (dependencies.empty()) return std::nullopt;

  // Greedy support minimisation: start from the smallest basic dependency,
  // then fold in basis elements while the support shrinks.
  std::size_t best = 0;
  for (std::size_t i = 1; i < dependencies.size(); ++i)
    if (dependencies[i].count() < dependencies[best].count()) best = i;
  Bitset witness = dependencies[best];
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& dep : dependencies) {
      Bitset candidate = witness;
      candidate ^= dep;
      if (candidate.any() && candidate.count() < witness.count()) {
        witness = std::move(candidate);
        improved = true;
      }
    }
  }
  return EvenCertificate{witness.ones()};
}

std::optional<EvenCertificate> find_even_subhypergraph(const Hypergraph& h) {
  return find_even_subhypergraph(h.n, h.edges);
}

namespace {

struct BacktrackState {
  const Hypergraph* h;
  int r;
  const OracleBudget* budget;
  std::chrono::steady_clock::time_point deadline;

  std::vector<int> deg;        // degree inside the current selection
  std::vector<int> remaining;  // undecided incident edges per vertex
  std::vector<int> chosen;
  int open = 0;  // vertices with 0 < deg != r
  long long nodes = 0;
  bool exhausted = false;
  std::optional<std::vector<int>> witness;

  bool out_of_budget() {
    if (nodes > budget->max_nodes) return true;
    if ((nodes & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline) return true;
    return false;
  }

  void bump(int v, int delta) {
    bool was_open = deg[v] > 0 && deg[v] != r;
    deg[v] += delta;
    bool is_open = deg[v] > 0 && deg[v] != r;
    open += int(is_open) - int(was_open);
  }

  void search(int idx) {
    if (witness || exhausted) return;
    ++nodes;
    if (out_of_budget()) {
      exhausted = true;
      return;
    }
    if (idx == h->edge_count()) return;
    const auto& e = h->edges[idx];
    for (int v : e) --remaining[v];

    // Include branch first: preorder then visits selections in lexicographic
    // order, so the first valid one is the lex-least witness.
    bool can_include = static_cast<int>(chosen.size()) < budget->max_edges_in_witness;
    if (can_include)
      for (int v : e)
        if (deg[v] + 1 > r) {
          can_include = false;
          break;
        }
    if (can_include) {
      for (int v : e) bump(v, +1);
      chosen.push_back(idx);
      bool dead = false;
      for (int v : e)
        if (deg[v] > 0 && deg[v] < r && deg[v] + remaining[v] < r) {
          dead = true;
          break;
        }
      if (!dead) {
        if (open == 0 && !chosen.empty())
          witness = chosen;
        else
          search(idx + 1);
      }
      chosen.pop_back();
      for (int v : e) bump(v, -1);
    }

    if (!witness && !exhausted) {
      bool dead = false;
      for (int v : e)
        if (deg[v] > 0 && deg[v] < r && deg[v] + remaining[v] < r) {
          dead = true;
          break;
        }
      if (!dead) search(idx + 1);
    }

    for (int v : e) ++remaining[v];
  }
};

}  // namespace

RegularSearchResult find_r_regular_exact(const Hypergraph& h, int r, const OracleBudget& budget) {
  if (r < 2) fail(ErrorCode::InfeasibleParameters, "r must be at least 2");
  if (budget.max_nodes <= 0 || budget.max_edges_in_witness <= 0 ||
      budget.time_limit_seconds <= 0)
    fail(ErrorCode::InfeasibleParameters, "budget fields must be positive");

  BacktrackState st;
  st.h = &h;
  st.r = r;
  st.budget = &budget;
  st.deadline = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(budget.time_limit_seconds));
  st.deg.assign(h.n, 0);
  st.remaining.assign(h.n, 0);
  for (const auto& e : h.edges)
    for (int v : e) ++st.remaining[v];

  st.search(0);

  RegularSearchResult result;
  result.nodes_explored = st.nodes;
  if (st.witness) {
    result.status = SearchStatus::Found;
    result.cert = RegularCertificate{r, *st.witness};
  } else if (st.exhausted) {
    result.status = SearchStatus::BudgetExhausted;
  } else {
    result.status = SearchStatus::NotFound;
  }
  return result;
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      const BigInt& aik = a[i][k];
      for (std::size_t j = 0; j < n; ++j)
        if (b[k][j] != 0) c[i][j] += aik * b[k][j];
    }
  return c;
}

}  // namespace

BigInt hom_cycle_count(const Graph& g, int h) {
  if (h < 2) fail(ErrorCode::InfeasibleParameters, "cycle half-length must be at least 2");
  if (g.n == 0 || g.edges.empty()) return 0;

  Matrix adj(g.n, std::vector<BigInt>(g.n, 0));
  for (auto [u, v] : g.edges) {
    adj[u][v] = 1;
    adj[v][u] = 1;
  }
  // A^{2h} by repeated squaring.
  int e = 2 * h;
  Matrix result, base = adj;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      result = have ? mat_mul(result, base) : base;
      have = true;
    }
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  BigInt trace = 0;
  for (int i = 0; i < g.n; ++i) trace += result[i][i];
  return trace;
}

namespace {

struct RainbowPathCounter {
  const ColouredGraph* g;
  std::vector<std::vector<int>> inc;
  std::vector<char> used_vertex;
  std::vector<char> used_colour;
  int target = 0;
  std::uint64_t limit = 0;
  std::uint64_t count = 0;
  bool capped = false;

  void dfs(int v, int depth) {
    if (capped) return;
    if (depth == target) {
      if (++count >= limit) capped = true;
      return;
    }
    for (int ei : inc[v]) {
      const auto& e = g->edges[ei];
      int w = e.u == v ? e.v : e.u;
      if (used_vertex[w] || used_colour[e.colour]) continue;
      used_vertex[w] = 1;
      used_colour[e.colour] = 1;
      dfs(w, depth + 1);
      used_vertex[w] = 0;
      used_colour[e.colour] = 0;
      if (capped) return;
    }
  }
};

}  // namespace

PathCount count_rainbow_paths(const ColouredGraph& g, int h, std::uint64_t limit) {
  if (h < 1) fail(ErrorCode::InfeasibleParameters, "path length must be at least 1");
  if (limit == 0) return {0, true};
  RainbowPathCounter counter;
  counter.g = &g;
  counter.inc = g.incident_edges();
  counter.used_vertex.assign(g.n, 0);
  counter.used_colour.assign(g.s, 0);
  counter.target = h;
  counter.limit = limit;
  for (int v = 0; v < g.n && !counter.capped; ++v) {
    counter.used_vertex[v] = 1;
    counter.dfs(v, 0);
    counter.used_vertex[v] = 0;
  }
  return {counter.count, counter.capped};
}

}  // namespace hreg
