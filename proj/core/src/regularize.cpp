#include "hreg/regularize.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hreg/rng.hpp"

namespace hreg {

namespace {

int ceil_log2(int n) {
  int l = 0;
  while ((1LL << l) < n) ++l;
  return std::max(l, 1);
}

long long int_pow(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

long long factorial(int k) {
  long long r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// 2^{j-1} <= d < 2^j for degree d >= 1.
int dyadic_class(int d) {
  int j = 1;
  while ((1 << j) <= d) ++j;
  return j;
}

LinearHypergraph subgraph_from(const LinearHypergraph& g, const std::vector<int>& idx) {
  LinearHypergraph out;
  static_cast<Hypergraph&>(out) = sub_hypergraph(g, idx);
  return out;
}

}  // namespace

BalancedHypergraph balanced_kpartite(const LinearHypergraph& g, const RegularizeParams& params) {
  const int k = g.k;
  const long long m = g.edge_count();
  if (m == 0) fail(ErrorCode::InfeasibleParameters, "input has no edges");
  if (params.retry_limit <= 0) fail(ErrorCode::InfeasibleParameters, "retry limit must be positive");

  const int lambda = ceil_log2(std::max(g.n, 2));
  Rng rng = make_rng(params.seed, "regularize-kpartite");

  // Best of retry_limit uniform partitions by transversal edge count.
  std::vector<int> part_of(g.n), best_part_of;
  long long best_count = -1;
  int tries = 0;
  for (int attempt = 0; attempt < params.retry_limit; ++attempt) {
    ++tries;
    for (int v = 0; v < g.n; ++v) part_of[v] = uniform_int(rng, 0, k - 1);
    long long count = 0;
    for (const auto& e : g.edges) {
      unsigned mask = 0;
      for (int v : e) mask |= 1u << part_of[v];
      if (static_cast<int>(std::popcount(mask)) == k) ++count;
    }
    if (count > best_count) {
      best_count = count;
      best_part_of = part_of;
    }
  }
  // The expected transversal count is m * k! / k^k; some partition reaches it.
  if (best_count * int_pow(k, k) < factorial(k) * m)
    fail(ErrorCode::RetryLimitExceeded,
         "no partition reached the transversal edge threshold in " +
             std::to_string(params.retry_limit) + " tries");

  std::vector<int> transversal;
  for (int i = 0; i < g.edge_count(); ++i) {
    unsigned mask = 0;
    for (int v : g.edges[i]) mask |= 1u << best_part_of[v];
    if (static_cast<int>(std::popcount(mask)) == k) transversal.push_back(i);
  }

  // Dyadic degree classes within the transversal subhypergraph; isolated
  // vertices have already dropped out (degree 0 means no class).
  std::vector<int> deg(g.n, 0);
  for (int i : transversal)
    for (int v : g.edges[i]) ++deg[v];
  std::vector<int> cls(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    if (deg[v] > 0) cls[v] = dyadic_class(deg[v]);

  std::map<std::vector<int>, long long> combo_count;
  for (int i : transversal) {
    std::vector<int> key(k);
    for (int v : g.edges[i]) key[best_part_of[v]] = cls[v];
    ++combo_count[key];
  }
  std::vector<int> best_combo;
  long long best_retained = -1;
  for (const auto& [key, count] : combo_count) {  // map order = lex-least tie-break
    if (count > best_retained) {
      best_retained = count;
      best_combo = key;
    }
  }

  std::vector<int> kept;
  for (int i : transversal) {
    bool ok = true;
    for (int v : g.edges[i])
      if (cls[v] != best_combo[best_part_of[v]]) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(i);
  }

  BalancedHypergraph out;
  out.host = subgraph_from(g, kept);
  out.source_edge_index = kept;
  out.lambda = lambda;
  out.mu = 2.0 * std::pow(static_cast<double>(lambda), k);
  out.partition_tries = tries;
  out.parts.assign(k, {});
  for (int v = 0; v < g.n; ++v)
    if (deg[v] > 0 && cls[v] == best_combo[best_part_of[v]]) out.parts[best_part_of[v]].push_back(v);

  // Both lemma bounds are forced once the transversal threshold held; treat a
  // failure as a bug, not bad luck.
  auto out_deg = out.host.degrees();
  const long long e_out = out.host.edge_count();
  out.per_part_max_degree.assign(k, 0);
  const long long two_lambda_k = 2 * int_pow(lambda, k);
  for (int i = 0; i < k; ++i) {
    for (int v : out.parts[i])
      out.per_part_max_degree[i] = std::max(out.per_part_max_degree[i], out_deg[v]);
    if (static_cast<long long>(out.per_part_max_degree[i]) *
            static_cast<long long>(out.parts[i].size()) >
        two_lambda_k * e_out)
      throw std::logic_error("balanced_kpartite: balancedness bound violated");
  }
  if (e_out * int_pow(static_cast<long long>(k) * lambda, k) < factorial(k) * m)
    throw std::logic_error("balanced_kpartite: edge lower bound violated");
  return out;
}

BalancedHypergraph balanced_equal_parts(const LinearHypergraph& g, double d,
                                        const RegularizeParams& params) {
  if (g.k != 3) fail(ErrorCode::WrongUniformity, "equal-parts regularization requires a 3-graph");
  if (g.n < 3) fail(ErrorCode::InfeasibleParameters, "need n >= 3 so that lambda >= 2");
  if (d <= 0) fail(ErrorCode::InfeasibleParameters, "density parameter must be positive");
  if (static_cast<double>(g.edge_count()) + 1e-9 < static_cast<double>(g.n) * d)
    fail(ErrorCode::InsufficientDensity,
         "need at least n*d = " + std::to_string(g.n * d) + " edges, have " +
             std::to_string(g.edge_count()));

  RegularizeParams inner = params;
  inner.seed = derive_seed(params.seed, "equal-parts-inner");
  BalancedHypergraph f = balanced_kpartite(g, inner);
  const int lambda = f.lambda;
  const long long e_f = f.host.edge_count();

  // Min-degree deletion loop with fixed thresholds e(F) / (6 |W|), original
  // part sizes. Round-robin over parts, removing the minimum-degree violator.
  auto inc = incidence_lists(f.host);
  std::vector<char> edge_alive(f.host.edge_count(), 1);
  std::vector<char> vertex_alive(g.n, 0);
  std::vector<int> deg = f.host.degrees();
  std::vector<std::size_t> orig_size(3);
  for (int p = 0; p < 3; ++p) {
    orig_size[p] = f.parts[p].size();
    for (int v : f.parts[p]) vertex_alive[v] = 1;
  }
  long long alive_edges = e_f;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < 3; ++p) {
      int victim = -1;
      for (int v : f.parts[p]) {
        // violates d(v) < e(F) / (6 |W|), exact integer comparison
        if (vertex_alive[v] &&
            static_cast<long long>(deg[v]) * 6 * static_cast<long long>(orig_size[p]) < e_f) {
          if (victim < 0 || deg[v] < deg[victim]) victim = v;
        }
      }
      if (victim >= 0) {
        vertex_alive[victim] = 0;
        for (int ei : inc[victim]) {
          if (!edge_alive[ei]) continue;
          edge_alive[ei] = 0;
          --alive_edges;
          for (int w : f.host.edges[ei]) --deg[w];
        }
        changed = true;
      }
    }
  }

  if (2 * alive_edges < e_f)
    throw std::logic_error("balanced_equal_parts: deletion removed more than half the edges");

  std::vector<std::vector<int>> alive_parts(3);
  for (int p = 0; p < 3; ++p) {
    for (int v : f.parts[p])
      if (vertex_alive[v]) alive_parts[p].push_back(v);
    if (static_cast<long long>(alive_parts[p].size()) * 4 * int_pow(lambda, 3) <
        static_cast<long long>(orig_size[p]))
      throw std::logic_error("balanced_equal_parts: part shrank below 1/(4 lambda^3)");
  }

  // Order by surviving size; X = smallest, Z sampled inside the largest.
  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (alive_parts[a].size() != alive_parts[b].size())
      return alive_parts[a].size() < alive_parts[b].size();
    return a < b;
  });
  const auto& part_x = alive_parts[order[0]];
  const auto& part_y = alive_parts[order[1]];
  const auto& part_z_pool = alive_parts[order[2]];
  const std::size_t z_size = part_y.size();

  std::vector<char> in_pool_part(g.n, 0);
  for (int v : part_z_pool) in_pool_part[v] = 1;

  Rng rng = make_rng(params.seed, "equal-parts-z");
  const long long mu_bound = 96 * int_pow(lambda, 6);

  for (int attempt = 0; attempt < params.resample_limit; ++attempt) {
    std::vector<int> pool = part_z_pool;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> part_z(pool.begin(), pool.begin() + z_size);
    std::sort(part_z.begin(), part_z.end());
    std::vector<char> in_z(g.n, 0);
    for (int v : part_z) in_z[v] = 1;

    std::vector<int> kept;
    for (int ei = 0; ei < f.host.edge_count(); ++ei) {
      if (!edge_alive[ei]) continue;
      bool ok = true;
      for (int v : f.host.edges[ei])
        if (in_pool_part[v] && !in_z[v]) {
          ok = false;
          break;
        }
      if (ok) kept.push_back(ei);
    }

    // checks (a) edge bound, (b) Eq. (1) with mu = 96 lambda^6, (c) sizes
    const long long e_h = kept.size();
    const long long v_h = part_x.size() + part_y.size() + part_z.size();
    if (static_cast<double>(e_h) * 81.0 * std::pow(lambda, 3) < static_cast<double>(v_h) * d)
      continue;

    std::vector<int> hdeg(g.n, 0);
    for (int ei : kept)
      for (int v : f.host.edges[ei]) ++hdeg[v];
    std::array<const std::vector<int>*, 3> parts_xyz = {&part_x, &part_y, &part_z};
    bool balanced = true;
    std::vector<int> part_max(3, 0);
    for (int p = 0; p < 3 && balanced; ++p) {
      for (int v : *parts_xyz[p]) part_max[p] = std::max(part_max[p], hdeg[v]);
      if (static_cast<long long>(part_max[p]) *
              static_cast<long long>(parts_xyz[p]->size()) >
          mu_bound * e_h)
        balanced = false;
    }
    if (!balanced) continue;
    if (!(part_x.size() <= part_y.size() && part_y.size() == part_z.size()))
      throw std::logic_error("balanced_equal_parts: part size ordering broken");

    BalancedHypergraph out;
    std::vector<int> source;
    source.reserve(kept.size());
    for (int ei : kept) source.push_back(f.source_edge_index[ei]);
    out.host = subgraph_from(g, source);
    out.source_edge_index = std::move(source);
    out.parts = {part_x, part_y, part_z};
    out.mu = static_cast<double>(mu_bound);
    out.lambda = lambda;
    out.per_part_max_degree = part_max;
    out.partition_tries = f.partition_tries;
    out.resample_tries = attempt + 1;
    out.deleted_edges = static_cast<int>(e_f - alive_edges);
    for (int p = 0; p < 3; ++p)
      out.part_shrink.push_back(orig_size[p] == 0
                                    ? 1.0
                                    : static_cast<double>(alive_parts[p].size()) / orig_size[p]);
    return out;
  }
  fail(ErrorCode::RetryLimitExceeded,
       "no Z sample satisfied the balancedness bounds in " +
           std::to_string(params.resample_limit) + " tries");
}

std::optional<TripartiteView> tripartite_view(const LinearHypergraph& host, std::uint64_t seed,
                                              int attempt, int colour_part_override) {
  RegularizeParams reg;
  reg.seed = derive_seed(seed, "partition-attempt", attempt);
  TripartiteView view;
  try {
    view.balanced = balanced_kpartite(host, reg);
  } catch (const InputError&) {
    return std::nullopt;
  }
  if (view.balanced.host.edge_count() == 0) return std::nullopt;
  view.part_of.assign(host.n, 0);
  for (int p = 0; p < 3; ++p)
    for (int v : view.balanced.parts[p]) view.part_of[v] = p;
  if (colour_part_override >= 0) {
    view.colour_part = colour_part_override;
  } else {
    std::size_t smallest = view.balanced.parts[0].size();
    for (int p = 1; p < 3; ++p)
      if (view.balanced.parts[p].size() < smallest) {
        smallest = view.balanced.parts[p].size();
        view.colour_part = p;
      }
  }
  LinearHypergraph bh;
  static_cast<Hypergraph&>(bh) = static_cast<const Hypergraph&>(view.balanced.host);
  view.graph = to_coloured_graph(bh, view.colour_part, view.part_of);
  if (view.graph.edge_count() == 0) return std::nullopt;
  return view;
}

}  // namespace hreg
