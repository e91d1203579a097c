#include "hreg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "hreg/oracles.hpp"
#include "hreg/rng.hpp"

namespace hreg {

namespace {

LinearHypergraph relabelled(Hypergraph g, std::uint64_t seed, const char* stream) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng = make_rng(seed, stream);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& e : g.edges)
    for (int& v : e) v = perm[v];
  return LinearHypergraph::from(std::move(g));
}

// Bose construction for n = 6t + 3: points Q x {0,1,2} over the odd-order
// quasigroup x*y = (x+y)(t+1) mod (2t+1).
Hypergraph bose(int n) {
  const int q = n / 3;  // 2t + 1
  const int half = (q + 1) / 2;
  auto op = [&](int x, int y) { return static_cast<int>((static_cast<long long>(x + y) * half) % q); };
  auto id = [&](int x, int i) { return i * q + x; };
  Hypergraph g;
  g.k = 3;
  g.n = n;
  for (int x = 0; x < q; ++x) g.edges.push_back({id(x, 0), id(x, 1), id(x, 2)});
  for (int x = 0; x < q; ++x)
    for (int y = x + 1; y < q; ++y)
      for (int i = 0; i < 3; ++i)
        g.edges.push_back({id(x, i), id(y, i), id(op(x, y), (i + 1) % 3)});
  return g;
}

// Skolem-type construction for n = 6t + 1: points {inf} u (Q x {0,1,2}) over
// the half-idempotent commutative quasigroup x*y = pi(x+y mod 2t), where pi
// maps even z to z/2 and odd z to t + (z-1)/2.
Hypergraph skolem(int n) {
  const int t = n / 6;
  const int q = 2 * t;
  auto pi = [&](int z) { return (z % 2 == 0) ? z / 2 : t + (z - 1) / 2; };
  auto op = [&](int x, int y) { return pi((x + y) % q); };
  auto id = [&](int x, int i) { return i * q + x; };
  const int inf = n - 1;
  Hypergraph g;
  g.k = 3;
  g.n = n;
  for (int x = 0; x < t; ++x) g.edges.push_back({id(x, 0), id(x, 1), id(x, 2)});
  for (int x = t; x < q; ++x)
    for (int i = 0; i < 3; ++i) g.edges.push_back({inf, id(x, i), id(op(x, x), (i + 1) % 3)});
  for (int x = 0; x < q; ++x)
    for (int y = x + 1; y < q; ++y)
      for (int i = 0; i < 3; ++i)
        g.edges.push_back({id(x, i), id(y, i), id(op(x, y), (i + 1) % 3)});
  return g;
}

}  // namespace

LinearHypergraph gen_sts(int n, std::uint64_t seed) {
  if (n < 3 || (n % 6 != 1 && n % 6 != 3))
    fail(ErrorCode::UnsupportedOrder,
         "Steiner triple systems exist only for n = 1 or 3 (mod 6), got n = " + std::to_string(n));
  Hypergraph g = (n % 6 == 3) ? bose(n) : skolem(n);
  return relabelled(std::move(g), seed, "sts-labels");
}

LinearHypergraph gen_random_linear(int n, int k, int target_m, std::uint64_t seed) {
  if (k < 2) fail(ErrorCode::MalformedHeader, "uniformity k must be at least 2");
  if (n < k) target_m = 0;
  Hypergraph g;
  g.k = k;
  g.n = n;
  if (target_m <= 0) return LinearHypergraph::from(std::move(g));

  Rng rng = make_rng(seed, "random-linear");
  std::unordered_set<std::uint64_t> used_pairs;
  auto pair_key = [](int a, int b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  };
  const long long stall_limit = std::max(2000LL, 200LL * target_m);
  long long stalls = 0;
  std::vector<int> pick;
  while (g.edge_count() < target_m && stalls < stall_limit) {
    pick.clear();
    while (static_cast<int>(pick.size()) < k) {
      int v = uniform_int(rng, 0, n - 1);
      if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
    }
    std::sort(pick.begin(), pick.end());
    bool fresh = true;
    for (int a = 0; a < k && fresh; ++a)
      for (int b = a + 1; b < k; ++b)
        if (used_pairs.contains(pair_key(pick[a], pick[b]))) {
          fresh = false;
          break;
        }
    if (!fresh) {
      ++stalls;
      continue;
    }
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) used_pairs.insert(pair_key(pick[a], pick[b]));
    g.edges.push_back(pick);
  }
  return LinearHypergraph::from(std::move(g));
}

double ConstructionParams::edge_probability() const {
  double fact = 1.0;
  for (int i = 2; i <= k - 1; ++i) fact *= i;
  return 1.0 / (8.0 * fact * std::pow(static_cast<double>(n), k - 2));
}

namespace {

// Exhaustive scan for a nonempty edge subset H' of the (k-1)-uniform
// B-restriction with v(H') <= vertex_cap and e(H') = v(H') * r / (k-1).
// Returns the first one in lexicographic subset order, or empty.
struct BadScan {
  const std::vector<std::vector<int>>* edges;
  int r, km1, vertex_cap;
  long long node_limit;
  long long nodes = 0;
  bool capped = false;
  std::vector<int> chosen;
  std::vector<int> cover_count;  // per vertex id (host numbering)
  int covered = 0;
  std::vector<int> found;

  bool dfs(std::size_t idx) {
    if (++nodes > node_limit) {
      capped = true;
      return false;
    }
    if (!chosen.empty() &&
        static_cast<long long>(chosen.size()) * km1 == static_cast<long long>(covered) * r) {
      found = chosen;
      return true;
    }
    if (idx == edges->size()) return false;
    // include
    const auto& e = (*edges)[idx];
    int fresh = 0;
    for (int v : e)
      if (cover_count[v]++ == 0) ++fresh;
    covered += fresh;
    if (covered <= vertex_cap) {
      chosen.push_back(static_cast<int>(idx));
      if (dfs(idx + 1)) return true;
      chosen.pop_back();
    }
    for (int v : e) --cover_count[v];
    covered -= fresh;
    // exclude
    return dfs(idx + 1);
  }
};

}  // namespace

std::pair<LinearHypergraph, LowerBoundReport> gen_lower_bound(const ConstructionParams& params) {
  const int n = params.n, k = params.k, r = params.r;
  if (r < 2 || r > n || n < k) fail(ErrorCode::InfeasibleParameters, "need 2 <= r <= n and n >= k");
  LowerBoundReport report;

  const double rho = static_cast<double>(r) / ((r - 1.0) * (k - 1.0));
  if (k < 3 || rho >= 1.0) {
    // Trivial branch: a linear k-graph with maximum degree below r.
    report.trivial_branch = true;
    Rng rng = make_rng(params.seed, "lower-bound-trivial");
    Hypergraph g;
    g.k = k;
    g.n = n;
    std::unordered_set<std::uint64_t> used_pairs;
    auto pair_key = [](int a, int b) {
      return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    };
    std::vector<int> deg(n, 0);
    const int target = (r - 1) * (n / k);
    long long stalls = 0;
    std::vector<int> pick;
    while (g.edge_count() < target && stalls < 200LL * target + 2000) {
      pick.clear();
      while (static_cast<int>(pick.size()) < k) {
        int v = uniform_int(rng, 0, n - 1);
        if (deg[v] >= r - 1) {
          ++stalls;
          if (stalls >= 200LL * target + 2000) break;
          continue;
        }
        if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
      }
      if (static_cast<int>(pick.size()) < k) break;
      std::sort(pick.begin(), pick.end());
      bool fresh = true;
      for (int a = 0; a < k && fresh; ++a)
        for (int b = a + 1; b < k; ++b)
          if (used_pairs.contains(pair_key(pick[a], pick[b]))) {
            fresh = false;
            break;
          }
      if (!fresh) {
        ++stalls;
        continue;
      }
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) used_pairs.insert(pair_key(pick[a], pick[b]));
      for (int v : pick) ++deg[v];
      g.edges.push_back(pick);
    }
    report.sampled_edges = report.final_edges = g.edge_count();
    return {LinearHypergraph::from(std::move(g)), report};
  }

  const int a_size = static_cast<int>(
      std::ceil(params.c0 * std::pow(static_cast<double>(r), rho) *
                std::pow(static_cast<double>(n), 1.0 - rho)));
  if (a_size < 1 || a_size >= n)
    fail(ErrorCode::InfeasibleParameters, "part A would have size " + std::to_string(a_size));
  report.part_a_size = a_size;
  report.part_b_size = n - a_size;
  const double p = params.edge_probability();
  report.p = p;

  // A = [0, a_size), B = the rest. Each k-set with exactly one vertex in A is
  // included independently with probability p.
  Rng rng = make_rng(params.seed, "lower-bound-sample");
  std::bernoulli_distribution keep(p);
  Hypergraph g0;
  g0.k = k;
  g0.n = n;
  std::vector<int> subset(k - 1);
  // iterate over (k-1)-subsets of B, B ids are [a_size, n)
  std::vector<int> idx(k - 1);
  for (int a = 0; a < a_size; ++a) {
    // lexicographic combinations
    for (int i = 0; i < k - 1; ++i) idx[i] = i;
    const int bn = n - a_size;
    if (bn < k - 1) break;
    while (true) {
      if (keep(rng)) {
        std::vector<int> e;
        e.reserve(k);
        e.push_back(a);
        for (int i = 0; i < k - 1; ++i) e.push_back(a_size + idx[i]);
        g0.edges.push_back(std::move(e));
      }
      int pos = k - 2;
      while (pos >= 0 && idx[pos] == bn - (k - 1 - pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k - 1; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  report.sampled_edges = g0.edge_count();
  for (auto& e : g0.edges) std::sort(e.begin(), e.end());

  // Phase 1: for every pair of edges sharing >= 2 vertices delete the
  // higher-index one.
  std::vector<char> alive(g0.edge_count(), 1);
  for (int i = 0; i < g0.edge_count(); ++i) {
    for (int j = i + 1; j < g0.edge_count(); ++j) {
      const auto& a = g0.edges[i];
      const auto& b = g0.edges[j];
      int shared = 0;
      std::size_t x = 0, y = 0;
      while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) {
          ++shared;
          ++x;
          ++y;
        } else if (a[x] < b[y])
          ++x;
        else
          ++y;
      }
      if (shared >= 2) {
        ++report.intersecting_pairs;
        if (alive[i] && alive[j]) alive[j] = 0;
      }
    }
  }

  // Phase 2: scan the B-restriction for bad subhypergraphs until clean.
  const int vertex_cap = std::min(params.bad_check_depth, a_size * (k - 1));
  if (a_size * (k - 1) > params.bad_check_depth) report.partial_scan = true;
  while (true) {
    std::vector<std::vector<int>> restriction;
    std::vector<int> owner;
    for (int i = 0; i < g0.edge_count(); ++i) {
      if (!alive[i]) continue;
      std::vector<int> rest;
      for (int v : g0.edges[i])
        if (v >= a_size) rest.push_back(v);
      restriction.push_back(std::move(rest));
      owner.push_back(i);
    }
    BadScan scan;
    scan.edges = &restriction;
    scan.r = r;
    scan.km1 = k - 1;
    scan.vertex_cap = vertex_cap;
    scan.node_limit = params.scan_node_limit;
    scan.cover_count.assign(n, 0);
    bool found = scan.dfs(0);
    if (scan.capped) report.partial_scan = true;
    if (!found) break;
    ++report.bad_subhypergraphs;
    // delete the highest-index surviving edge of the bad subhypergraph
    int victim = owner[scan.found.back()];
    alive[victim] = 0;
  }

  std::vector<int> kept;
  for (int i = 0; i < g0.edge_count(); ++i)
    if (alive[i]) kept.push_back(i);
  Hypergraph g = sub_hypergraph(g0, kept);
  report.final_edges = g.edge_count();
  return {LinearHypergraph::from(std::move(g)), report};
}

LinearHypergraph gen_pasch_free_probe(int n, std::uint64_t seed) {
  if (n == 9) return gen_sts(9, seed);
  if (n < 5 || n > 64)
    fail(ErrorCode::UnsupportedOrder, "supported orders: 9 (anti-Pasch STS) and 5..64 (filtered)");
  OracleBudget budget;
  budget.max_nodes = 1'000'000;
  budget.max_edges_in_witness = 8;
  for (int attempt = 0; attempt < 50; ++attempt) {
    LinearHypergraph h = gen_random_linear(n, 3, n, derive_seed(seed, "pasch-free", attempt));
    auto probe = find_r_regular_exact(h, 2, budget);
    if (probe.status == SearchStatus::NotFound) return h;
  }
  fail(ErrorCode::RetryLimitExceeded, "no probe instance passed the oracle filter");
}

}  // namespace hreg
