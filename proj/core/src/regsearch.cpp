#include "hreg/regsearch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hreg/regularize.hpp"
#include "hreg/rng.hpp"

namespace hreg {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Matchings: return "matchings";
    case Strategy::Cycles: return "cycles";
    case Strategy::Paths: return "paths";
  }
  return "?";
}

namespace {

int other_end(const ColouredEdge& e, int v) { return e.u == v ? e.v : e.u; }

std::optional<LabelledPath> greedy_path_attempts(const ColouredGraph& g,
                                                 const std::vector<std::vector<int>>& inc, int h,
                                                 const std::vector<char>& forbidden_v,
                                                 const std::vector<char>& forbidden_c, Rng& rng,
                                                 int retry_limit) {
  std::vector<int> starts;
  for (int v = 0; v < g.n; ++v)
    if (!forbidden_v[v]) starts.push_back(v);
  if (starts.empty()) return std::nullopt;

  std::vector<char> used_v(g.n, 0), used_c(g.s, 0);
  std::vector<int> cand;
  for (int attempt = 0; attempt < retry_limit; ++attempt) {
    LabelledPath path;
    int v0 = starts[uniform_int(rng, 0, static_cast<int>(starts.size()) - 1)];
    path.vertices.push_back(v0);
    used_v[v0] = 1;
    bool ok = true;
    while (static_cast<int>(path.edge_indices.size()) < h) {
      int v = path.vertices.back();
      cand.clear();
      for (int ei : inc[v]) {
        const auto& e = g.edges[ei];
        int w = other_end(e, v);
        if (used_v[w] || forbidden_v[w] || used_c[e.colour] || forbidden_c[e.colour]) continue;
        cand.push_back(ei);
      }
      if (cand.empty()) {
        ok = false;
        break;
      }
      int ei = cand[uniform_int(rng, 0, static_cast<int>(cand.size()) - 1)];
      const auto& e = g.edges[ei];
      int w = other_end(e, v);
      path.vertices.push_back(w);
      path.edge_indices.push_back(ei);
      used_v[w] = 1;
      used_c[e.colour] = 1;
    }
    for (int v : path.vertices) used_v[v] = 0;
    for (int ei : path.edge_indices) used_c[g.edges[ei].colour] = 0;
    if (ok) return path;
  }
  return std::nullopt;
}

// Randomized backtracking for a rainbow 2h-cycle avoiding removed vertices
// and edges: extends a rainbow path to 2h vertices, then closes it.
struct CycleDfs {
  const ColouredGraph* g;
  const std::vector<std::vector<int>>* inc;
  const std::vector<char>* v_removed;
  const std::vector<char>* e_removed;
  int target = 0;  // 2h
  Rng* rng;
  long long budget = 0;

  std::vector<int> vs, es;
  std::vector<char> used_v, used_c;

  bool usable(int ei) const {
    if ((*e_removed)[ei]) return false;
    const auto& e = g->edges[ei];
    return !(*v_removed)[e.u] && !(*v_removed)[e.v];
  }

  std::optional<LabelledCycle> run(int root) {
    vs.assign(1, root);
    es.clear();
    used_v.assign(g->n, 0);
    used_c.assign(g->s, 0);
    used_v[root] = 1;
    if (extend()) return LabelledCycle{vs, es};
    return std::nullopt;
  }

  bool extend() {
    if (--budget <= 0) return false;
    int v = vs.back();
    if (static_cast<int>(vs.size()) == target) {
      for (int ei : (*inc)[v]) {
        if (!usable(ei)) continue;
        const auto& e = g->edges[ei];
        if (other_end(e, v) == vs.front() && !used_c[e.colour]) {
          es.push_back(ei);
          return true;
        }
      }
      return false;
    }
    std::vector<int> cand;
    for (int ei : (*inc)[v]) {
      if (!usable(ei)) continue;
      const auto& e = g->edges[ei];
      if (used_v[other_end(e, v)] || used_c[e.colour]) continue;
      cand.push_back(ei);
    }
    std::shuffle(cand.begin(), cand.end(), *rng);
    for (int ei : cand) {
      const auto& e = g->edges[ei];
      int w = other_end(e, v);
      vs.push_back(w);
      es.push_back(ei);
      used_v[w] = 1;
      used_c[e.colour] = 1;
      if (extend()) return true;
      used_c[e.colour] = 0;
      used_v[w] = 0;
      es.pop_back();
      vs.pop_back();
      if (budget <= 0) return false;
    }
    return false;
  }
};

std::optional<LabelledCycle> sample_rainbow_cycle(const ColouredGraph& g,
                                                  const std::vector<std::vector<int>>& inc,
                                                  const std::vector<char>& v_removed,
                                                  const std::vector<char>& e_removed, int h,
                                                  Rng& rng, int retry_limit, long long node_budget) {
  std::vector<int> roots;
  for (int v = 0; v < g.n; ++v)
    if (!v_removed[v]) roots.push_back(v);
  if (roots.empty()) return std::nullopt;
  CycleDfs dfs;
  dfs.g = &g;
  dfs.inc = &inc;
  dfs.v_removed = &v_removed;
  dfs.e_removed = &e_removed;
  dfs.target = 2 * h;
  dfs.rng = &rng;
  dfs.budget = node_budget;
  for (int attempt = 0; attempt < retry_limit && dfs.budget > 0; ++attempt) {
    int root = roots[uniform_int(rng, 0, static_cast<int>(roots.size()) - 1)];
    if (auto cycle = dfs.run(root)) return cycle;
  }
  return std::nullopt;
}

std::vector<int> sorted_colours_of(const ColouredGraph& g, const std::vector<int>& edge_indices) {
  std::vector<int> c;
  c.reserve(edge_indices.size());
  for (int ei : edge_indices) c.push_back(g.edges[ei].colour);
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

std::optional<LabelledPath> greedy_rainbow_path(const ColouredGraph& g, int h,
                                                const std::vector<char>& forbidden_vertices,
                                                const std::vector<char>& forbidden_colours,
                                                std::uint64_t seed, int retry_limit) {
  if (h < 1) fail(ErrorCode::InfeasibleParameters, "path length must be at least 1");
  Rng rng = make_rng(seed, "greedy-rainbow-path");
  auto inc = g.incident_edges();
  return greedy_path_attempts(g, inc, h, forbidden_vertices, forbidden_colours, rng, retry_limit);
}

std::optional<NiceCycleSequence> sample_nice_cycle_sequence(const ColouredGraph& g,
                                                            const SearchParams& params) {
  if (params.h < 2) fail(ErrorCode::InfeasibleParameters, "cycle half-length must be at least 2");
  const int t = std::max(params.t, 1);
  Rng rng = make_rng(params.seed, "nice-cycles");
  auto inc = g.incident_edges();

  NiceCycleSequence seq;
  std::vector<char> colours_used(g.s, 0), on_cycle(g.n, 0);
  for (int step = 0; step < t; ++step) {
    // Rule 1: drop vertices incident to an edge whose colour is used.
    // Rule 2: drop edges whose colour touches a cycle vertex.
    std::vector<char> colour_touches(g.s, 0), v_removed(g.n, 0), e_removed(g.edge_count(), 0);
    for (const auto& e : g.edges)
      if (on_cycle[e.u] || on_cycle[e.v]) colour_touches[e.colour] = 1;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
      const auto& e = g.edges[ei];
      if (colours_used[e.colour]) v_removed[e.u] = v_removed[e.v] = 1;
      if (colour_touches[e.colour]) e_removed[ei] = 1;
    }
    auto cycle = sample_rainbow_cycle(g, inc, v_removed, e_removed, params.h, rng,
                                      params.retry_limit, params.dfs_node_budget);
    if (!cycle) return std::nullopt;
    for (int v : cycle->vertices) on_cycle[v] = 1;
    for (int ei : cycle->edge_indices) colours_used[g.edges[ei].colour] = 1;
    seq.cycles.push_back(std::move(*cycle));
  }

  // Niceness holds by construction; re-check it directly, plus the implied
  // vertex- and colour-disjointness on their own.
  std::vector<char> v_seen(g.n, 0), c_seen(g.s, 0);
  for (const auto& cycle : seq.cycles) {
    for (int v : cycle.vertices)
      if (v_seen[v])
        throw std::logic_error("nice cycle sequence repeats a vertex");
      else
        v_seen[v] = 1;
    for (int ei : cycle.edge_indices) {
      int colour = g.edges[ei].colour;
      if (c_seen[colour])
        throw std::logic_error("nice cycle sequence repeats a colour");
      c_seen[colour] = 1;
    }
  }
  for (std::size_t i = 0; i < seq.cycles.size(); ++i)
    for (std::size_t j = 0; j < seq.cycles.size(); ++j) {
      if (i == j) continue;
      std::vector<char> cj_colours(g.s, 0);
      for (int ei : seq.cycles[j].edge_indices) cj_colours[g.edges[ei].colour] = 1;
      for (int v : seq.cycles[i].vertices)
        for (int ei : inc[v])
          if (cj_colours[g.edges[ei].colour])
            throw std::logic_error("nice cycle sequence violates colour isolation");
    }
  return seq;
}

std::uint64_t count_path_extensions(const ColouredGraph& g, const LabelledPath& path,
                                    std::uint64_t cap) {
  if (path.vertices.empty()) return 0;
  auto adj = g.as_graph().adjacency();
  const int h = static_cast<int>(path.edge_indices.size());
  const int goal = path.vertices.front();
  std::uint64_t count = 0;
  // walks of length h from the last vertex back to the first
  auto dfs = [&](auto&& self, int v, int depth) -> void {
    if (count >= cap) return;
    if (depth == h) {
      if (v == goal) ++count;
      return;
    }
    // not enough steps left to reach anywhere: walks are unconstrained, so
    // only the final position matters
    for (int w : adj[v]) {
      self(self, w, depth + 1);
      if (count >= cap) return;
    }
  };
  dfs(dfs, path.vertices.back(), 0);
  return count;
}

std::optional<NicePathSequence> sample_nice_path_sequence(const ColouredGraph& g,
                                                          const SearchParams& params) {
  if (params.h < 2) fail(ErrorCode::InfeasibleParameters, "path length must be at least 2");
  const int t = std::max(params.t, 1);
  const std::uint64_t q =
      params.q > 0 ? params.q
                   : static_cast<std::uint64_t>(2.0 * params.alpha * std::pow(16.0, params.h));
  Rng rng = make_rng(params.seed, "nice-paths");
  auto inc = g.incident_edges();
  auto adj = g.as_graph().adjacency();

  NicePathSequence seq;
  seq.q = q;
  std::vector<char> colours_used(g.s, 0);
  std::vector<int> used_vertices;

  for (int step = 0; step < t; ++step) {
    // vertices within distance h-1 of any used path vertex are removed
    std::vector<int> dist(g.n, -1);
    std::deque<int> queue;
    for (int v : used_vertices) {
      dist[v] = 0;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (dist[v] == params.h - 1) continue;
      for (int w : adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    std::vector<char> v_removed(g.n, 0);
    for (int v = 0; v < g.n; ++v) v_removed[v] = dist[v] >= 0;

    bool accepted = false;
    for (int attempt = 0; attempt < params.retry_limit && !accepted; ++attempt) {
      auto path = greedy_path_attempts(g, inc, params.h, v_removed, colours_used, rng, 1);
      if (!path) continue;
      if (count_path_extensions(g, *path, q + 1) > q) continue;  // too extendable, resample
      for (int v : path->vertices) used_vertices.push_back(v);
      for (int ei : path->edge_indices) colours_used[g.edges[ei].colour] = 1;
      seq.paths.push_back(std::move(*path));
      accepted = true;
    }
    if (!accepted) return std::nullopt;
  }

  // Direct re-check of the niceness conditions.
  std::vector<char> seen_colour(g.s, 0);
  for (const auto& p : seq.paths)
    for (int ei : p.edge_indices) {
      if (seen_colour[g.edges[ei].colour])
        throw std::logic_error("nice path sequence repeats a colour");
      seen_colour[g.edges[ei].colour] = 1;
    }
  for (std::size_t i = 0; i < seq.paths.size(); ++i)
    for (std::size_t j = i + 1; j < seq.paths.size(); ++j) {
      // BFS from path i, capped at distance h-1
      std::vector<int> dist(g.n, -1);
      std::deque<int> queue;
      for (int v : seq.paths[i].vertices) {
        dist[v] = 0;
        queue.push_back(v);
      }
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (dist[v] == params.h - 1) continue;
        for (int w : adj[v])
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            queue.push_back(w);
          }
      }
      for (int v : seq.paths[j].vertices)
        if (dist[v] >= 0) throw std::logic_error("nice path sequence too close");
    }
  return seq;
}

namespace {

std::optional<std::vector<int>> greedy_matching(const ColouredGraph& g, int t, Rng& rng,
                                                int retry_limit, bool maximal) {
  if (g.edges.empty()) return std::nullopt;
  for (int attempt = 0; attempt < retry_limit; ++attempt) {
    std::vector<int> allowed(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) allowed[i] = i;
    std::vector<int> picked;
    std::vector<char> used_v(g.n, 0), used_c(g.s, 0);
    while (!allowed.empty() && (maximal || static_cast<int>(picked.size()) < t)) {
      int ei = allowed[uniform_int(rng, 0, static_cast<int>(allowed.size()) - 1)];
      const auto& e = g.edges[ei];
      picked.push_back(ei);
      used_v[e.u] = used_v[e.v] = 1;
      used_c[e.colour] = 1;
      std::vector<int> next;
      next.reserve(allowed.size());
      for (int fi : allowed) {
        const auto& f = g.edges[fi];
        if (used_v[f.u] || used_v[f.v] || used_c[f.colour]) continue;
        next.push_back(fi);
      }
      allowed.swap(next);
    }
    if (maximal || static_cast<int>(picked.size()) == t) {
      std::sort(picked.begin(), picked.end());
      return picked;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> sample_rainbow_matching(const ColouredGraph& g, int t,
                                                        std::uint64_t seed, int retry_limit) {
  if (t < 1) fail(ErrorCode::InfeasibleParameters, "matching size must be at least 1");
  Rng rng = make_rng(seed, "rainbow-matching");
  return greedy_matching(g, t, rng, retry_limit, false);
}

namespace {

std::vector<int> canonical_cycle(const std::vector<int>& vs) {
  const int len = static_cast<int>(vs.size());
  std::vector<int> best, cur(len);
  for (int dir = 0; dir < 2; ++dir)
    for (int start = 0; start < len; ++start) {
      for (int i = 0; i < len; ++i) {
        int idx = dir == 0 ? (start + i) % len : (start - i % len + len * 2) % len;
        cur[i] = vs[idx];
      }
      if (best.empty() || cur < best) best = cur;
    }
  return best;
}

std::vector<int> canonical_path(const std::vector<int>& vs) {
  std::vector<int> rev(vs.rbegin(), vs.rend());
  return std::min(vs, rev);
}

constexpr int kKeySep = -1;

struct CollisionDriver {
  const ColouredGraph* g;
  Strategy strategy;
  SearchParams params;
  const CollisionObserver* observer;

  std::mutex mu;
  std::map<std::vector<int>, std::vector<StoredSequence>> buckets;
  std::optional<TwoRegularColouredCertificate> result;
  std::atomic<bool> done{false};
  std::atomic<long long> sampled{0};
  long long key_collisions = 0;
  long long discarded = 0;

  std::optional<std::pair<std::vector<int>, StoredSequence>> sample_one(int t, Rng& rng) {
    if (strategy == Strategy::Matchings) {
      auto m = greedy_matching(*g, t, rng, 1, false);
      if (!m) return std::nullopt;
      StoredSequence seq;
      for (int ei : *m) seq.members.push_back({g->edges[ei].u, g->edges[ei].v});
      std::sort(seq.members.begin(), seq.members.end());
      seq.union_edges = *m;
      std::vector<int> key;
      for (int ei : *m) {
        key.push_back(g->edges[ei].u);
        key.push_back(g->edges[ei].v);
      }
      std::sort(key.begin(), key.end());
      key.push_back(kKeySep);
      auto colours = sorted_colours_of(*g, *m);
      key.insert(key.end(), colours.begin(), colours.end());
      return std::make_pair(std::move(key), std::move(seq));
    }
    if (strategy == Strategy::Cycles) {
      SearchParams sp = params;
      sp.t = t;
      sp.seed = rng();
      auto cycles = sample_nice_cycle_sequence(*g, sp);
      if (!cycles) return std::nullopt;
      StoredSequence seq;
      std::vector<int> all_edges;
      for (const auto& c : cycles->cycles) {
        seq.members.push_back(canonical_cycle(c.vertices));
        all_edges.insert(all_edges.end(), c.edge_indices.begin(), c.edge_indices.end());
      }
      std::sort(seq.members.begin(), seq.members.end());
      std::sort(all_edges.begin(), all_edges.end());
      seq.union_edges = all_edges;
      std::vector<int> key = sorted_colours_of(*g, all_edges);
      return std::make_pair(std::move(key), std::move(seq));
    }
    SearchParams sp = params;
    sp.t = t;
    sp.seed = rng();
    auto paths = sample_nice_path_sequence(*g, sp);
    if (!paths) return std::nullopt;
    StoredSequence seq;
    std::vector<int> all_edges, endpoints;
    for (const auto& p : paths->paths) {
      seq.members.push_back(canonical_path(p.vertices));
      all_edges.insert(all_edges.end(), p.edge_indices.begin(), p.edge_indices.end());
      endpoints.push_back(p.vertices.front());
      endpoints.push_back(p.vertices.back());
    }
    std::sort(seq.members.begin(), seq.members.end());
    std::sort(all_edges.begin(), all_edges.end());
    seq.union_edges = all_edges;
    std::vector<int> key = sorted_colours_of(*g, all_edges);
    key.push_back(kKeySep);
    std::sort(endpoints.begin(), endpoints.end());
    key.insert(key.end(), endpoints.begin(), endpoints.end());
    return std::make_pair(std::move(key), std::move(seq));
  }

  // Identical member sub-objects cancel in the edge-level symmetric
  // difference; anything that fails verification is discarded.
  void consider(const std::vector<int>& key, StoredSequence seq) {
    std::lock_guard<std::mutex> lock(mu);
    if (done.load()) return;
    auto& bucket = buckets[key];
    for (const auto& stored : bucket)
      if (stored.members == seq.members) return;  // same sequence up to reordering
    for (const auto& stored : bucket) {
      ++key_collisions;
      if (observer && *observer) (*observer)(stored, seq);
      std::map<int, int> mult;
      for (int ei : stored.union_edges) ++mult[ei];
      for (int ei : seq.union_edges) ++mult[ei];
      TwoRegularColouredCertificate cert;
      for (auto [ei, count] : mult)
        if (count % 2 == 1) cert.edge_indices.push_back(ei);
      if (!cert.edge_indices.empty() && verify_two_regular_coloured(*g, cert).ok()) {
        result = std::move(cert);
        done.store(true);
        return;
      }
      ++discarded;
    }
    bucket.push_back(std::move(seq));
  }

  void run_slice(int t, long long budget) {
    auto worker = [&](int wid) {
      Rng rng = make_rng(params.seed, "collision-worker",
                         static_cast<std::uint64_t>(wid) * 0x10001 + static_cast<std::uint64_t>(t));
      while (!done.load()) {
        long long ticket = sampled.fetch_add(1);
        if (ticket >= budget) {
          sampled.fetch_sub(1);
          break;
        }
        auto drawn = sample_one(t, rng);
        if (!drawn) continue;
        consider(drawn->first, std::move(drawn->second));
      }
    };
    if (params.workers <= 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < params.workers; ++w) pool.emplace_back(worker, w);
      for (auto& th : pool) th.join();
    }
  }
};

}  // namespace

CollisionSearchResult collision_search(const ColouredGraph& g, Strategy strategy,
                                       const SearchParams& params,
                                       const CollisionObserver& observer) {
  CollisionSearchResult out;
  if (g.edge_count() == 0 || params.sample_budget <= 0) return out;

  CollisionDriver driver;
  driver.g = &g;
  driver.strategy = strategy;
  driver.params = params;
  driver.observer = &observer;

  // Plan the sequence sizes to sample.
  std::vector<int> plan;
  if (strategy == Strategy::Matchings) {
    if (params.t > 0) {
      plan.push_back(params.t);
    } else {
      // Sweep downward from the largest greedy matching; sizes 1 and 2 admit
      // no collision in a properly coloured graph, so stop at 3.
      Rng rng = make_rng(params.seed, "matching-probe");
      int t_max = 0;
      for (int probe = 0; probe < 32; ++probe) {
        auto m = greedy_matching(g, 0, rng, 1, true);
        if (m) t_max = std::max(t_max, static_cast<int>(m->size()));
      }
      for (int t = t_max; t >= 3; --t) plan.push_back(t);
    }
  } else {
    int t = params.t;
    if (t <= 0) {
      const double d = g.average_degree();
      const double mufac = std::max(g.balance_mu(), 1.0);
      const double s = g.s;
      if (strategy == Strategy::Cycles)
        t = static_cast<int>(std::ceil(s / (32.0 * d * mufac * mufac * params.h)));
      else
        t = static_cast<int>(std::ceil(s / (8.0 * params.h * mufac)));
      t = std::max(t, 1);
    }
    plan.push_back(t);
  }
  if (plan.empty()) return out;

  long long total_budget = params.sample_budget;
  long long slice = std::max<long long>(1, total_budget / static_cast<long long>(plan.size()));
  long long used = 0;
  for (std::size_t i = 0; i < plan.size() && !driver.done.load(); ++i) {
    long long this_slice =
        (i + 1 == plan.size()) ? std::max<long long>(1, total_budget - used) : slice;
    driver.sampled.store(0);
    driver.run_slice(plan[i], this_slice);
    used += driver.sampled.load();
    out.t_used = plan[i];
  }
  out.samples = used;
  out.key_collisions = driver.key_collisions;
  out.discarded_pairs = driver.discarded;
  if (driver.result) {
    out.status = SearchStatus::Found;
    out.cert = std::move(driver.result);
  } else {
    out.status = SearchStatus::BudgetExhausted;
  }
  return out;
}

namespace {

double log2_big(const BigInt& z) {
  namespace mp = boost::multiprecision;
  if (z <= 0) return -std::numeric_limits<double>::infinity();
  unsigned bits = mp::msb(z);
  if (bits <= 52) return std::log2(z.convert_to<double>());
  BigInt top = z >> (bits - 52);
  return static_cast<double>(bits - 52) + std::log2(top.convert_to<double>());
}

}  // namespace

StrategyChoice choose_strategy(const ColouredGraph& g, const SearchParams& base) {
  StrategyChoice choice;
  choice.params = base;
  if (g.edge_count() == 0 || g.s == 0) return choice;  // not applicable

  const double d = g.average_degree();
  const double mufac = g.balance_mu();
  choice.mu = mufac;
  choice.avg_degree = d;
  if (d <= 1.0) return choice;  // no h satisfies s >= n d^{-h+1/2}

  const double log2_s = std::log2(static_cast<double>(g.s));
  const double log2_n = std::log2(static_cast<double>(g.n));
  const double log2_d = std::log2(d);
  int h = 0;
  for (int cand = 1; cand <= 32; ++cand)
    if (log2_s >= log2_n - (cand - 0.5) * log2_d) {
      h = cand;
      break;
    }
  if (h == 0) return choice;
  choice.applicable = true;
  choice.h = h;
  choice.params.h = std::max(h, 2);

  if (h == 1) {
    choice.strategy = Strategy::Matchings;
    choice.params.t = std::max(1, static_cast<int>(std::ceil(g.s / (16.0 * mufac))));
    return choice;
  }

  BigInt hom = hom_cycle_count(g.as_graph(), h);
  choice.log2_hom = log2_big(hom);
  choice.log2_threshold = std::log2(base.hom_threshold_scale) +
                          2.0 * h * std::log2(128.0 * std::pow(h, 1.5) * std::sqrt(mufac)) +
                          log2_n + h * log2_d;
  if (choice.log2_hom >= choice.log2_threshold) {
    choice.strategy = Strategy::Cycles;
    choice.params.t =
        std::max(1, static_cast<int>(std::ceil(g.s / (32.0 * d * mufac * mufac * h))));
  } else {
    choice.strategy = Strategy::Paths;
    choice.params.t = std::max(1, static_cast<int>(std::ceil(g.s / (8.0 * h * mufac))));
    choice.params.q =
        static_cast<std::uint64_t>(2.0 * base.alpha * std::pow(16.0, h));
  }
  return choice;
}

TwoRegularPipelineResult detect_two_regular(const LinearHypergraph& host,
                                            std::optional<Strategy> forced,
                                            const SearchParams& params, int partition_attempts) {
  TwoRegularPipelineResult out;
  if (host.edge_count() == 0) return out;
  const int attempts = std::max(partition_attempts, 1);
  const long long slice = std::max<long long>(1, params.sample_budget / attempts);

  for (int attempt = 0; attempt < attempts; ++attempt) {
    auto view = tripartite_view(host, params.seed, attempt);
    if (!view) continue;
    ++out.partitions_tried;

    SearchParams sp = params;
    sp.sample_budget = slice;
    sp.seed = derive_seed(params.seed, "two-regular-search", attempt);
    Strategy strategy;
    if (forced) {
      strategy = *forced;
    } else {
      auto choice = choose_strategy(view->graph, sp);
      if (!choice.applicable) continue;
      strategy = choice.strategy;
      int pinned_t = params.t;
      std::uint64_t pinned_q = params.q;
      sp = choice.params;
      sp.sample_budget = slice;
      sp.workers = params.workers;
      sp.seed = derive_seed(params.seed, "two-regular-search", attempt);
      // the lemma value of t is useless for matchings at small scale; sweep
      // sizes unless the caller pinned one
      sp.t = pinned_t > 0 ? pinned_t : (strategy == Strategy::Matchings ? 0 : sp.t);
      if (pinned_q > 0) sp.q = pinned_q;
    }

    auto result = collision_search(view->graph, strategy, sp);
    out.samples += result.samples;
    if (result.status != SearchStatus::Found) continue;

    RegularCertificate cert;
    cert.r = 2;
    for (int ci : result.cert->edge_indices)
      cert.edge_indices.push_back(
          view->balanced.source_edge_index[view->graph.host_edge_index[ci]]);
    std::sort(cert.edge_indices.begin(), cert.edge_indices.end());
    if (!verify_regular(host, cert).ok())
      throw std::logic_error("two-regular pullback failed verification");
    out.status = SearchStatus::Found;
    out.cert = std::move(cert);
    out.strategy_used = strategy;
    out.t_used = result.t_used;
    out.partitions_tried = attempt + 1;
    out.part_of = view->part_of;
    out.colour_part = view->colour_part;
    return out;
  }
  out.status = SearchStatus::BudgetExhausted;
  return out;
}

}  // namespace hreg
