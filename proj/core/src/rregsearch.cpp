#include "hreg/rregsearch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hreg/rng.hpp"

namespace hreg {

namespace {

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return true;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<Sunflower> extract(std::vector<std::vector<int>> family, int r) {
  // dedup; all sets sorted by the caller
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (family.empty()) return std::nullopt;
  if (static_cast<int>(family.size()) < r) return std::nullopt;

  if (family[0].empty()) return std::nullopt;  // identical empties collapsed above

  // greedy pairwise-disjoint collection
  std::vector<int> taken;
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool ok = true;
    for (int j : taken)
      if (!disjoint(family[i], family[j])) {
        ok = false;
        break;
      }
    if (ok) taken.push_back(static_cast<int>(i));
    if (static_cast<int>(taken.size()) == r) break;
  }
  if (static_cast<int>(taken.size()) >= r) {
    Sunflower s;
    for (int i : taken) s.petals.push_back(family[i]);
    return s;
  }

  // most popular element; ties to the smallest id
  std::map<int, int> freq;
  for (const auto& set : family)
    for (int x : set) ++freq[x];
  int popular = -1, best = 0;
  for (auto [x, count] : freq)
    if (count > best) {
      best = count;
      popular = x;
    }
  if (popular < 0) return std::nullopt;

  std::vector<std::vector<int>> link;
  for (const auto& set : family)
    if (std::binary_search(set.begin(), set.end(), popular)) {
      std::vector<int> reduced;
      for (int x : set)
        if (x != popular) reduced.push_back(x);
      link.push_back(std::move(reduced));
    }
  auto inner = extract(std::move(link), r);
  if (!inner) return std::nullopt;
  Sunflower s;
  s.core = inner->core;
  s.core.push_back(popular);
  std::sort(s.core.begin(), s.core.end());
  for (auto& petal : inner->petals) {
    petal.push_back(popular);
    std::sort(petal.begin(), petal.end());
    s.petals.push_back(std::move(petal));
  }
  return s;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const std::vector<std::vector<int>>& family, int r) {
  if (r < 2) fail(ErrorCode::InfeasibleParameters, "need r >= 2");
  std::vector<std::vector<int>> sorted_family = family;
  std::size_t size = sorted_family.empty() ? 0 : sorted_family[0].size();
  for (auto& set : sorted_family) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.size() != size)
      fail(ErrorCode::InfeasibleParameters, "family sets must all have the same size");
  }
  auto result = extract(std::move(sorted_family), r);
  if (result) {
    for (std::size_t i = 0; i < result->petals.size(); ++i)
      for (std::size_t j = i + 1; j < result->petals.size(); ++j)
        if (intersect(result->petals[i], result->petals[j]) != result->core)
          throw std::logic_error("sunflower invariant violated");
  }
  return result;
}

MatchingSampler::MatchingSampler(const LinearHypergraph& host, int t, long long attempt_budget,
                                 std::uint64_t seed)
    : host_(host), t_(t), budget_(attempt_budget), rng_state_(derive_seed(seed, "matchings")) {}

std::optional<std::vector<int>> MatchingSampler::next() {
  if (host_.edge_count() == 0) return std::nullopt;
  Rng rng(rng_state_);
  std::vector<int> alive;
  while (attempts_ < budget_) {
    ++attempts_;
    alive.resize(host_.edge_count());
    for (int i = 0; i < host_.edge_count(); ++i) alive[i] = i;
    std::vector<int> picked;
    std::vector<char> used(host_.n, 0);
    while (!alive.empty() && (t_ == 0 || static_cast<int>(picked.size()) < t_)) {
      int ei = alive[uniform_int(rng, 0, static_cast<int>(alive.size()) - 1)];
      picked.push_back(ei);
      for (int v : host_.edges[ei]) used[v] = 1;
      std::vector<int> next_alive;
      next_alive.reserve(alive.size());
      for (int fi : alive) {
        bool hit = false;
        for (int v : host_.edges[fi])
          if (used[v]) {
            hit = true;
            break;
          }
        if (!hit) next_alive.push_back(fi);
      }
      alive.swap(next_alive);
    }
    if (t_ != 0 && static_cast<int>(picked.size()) != t_) continue;
    if (picked.empty()) continue;
    std::sort(picked.begin(), picked.end());
    if (std::binary_search(seen_.begin(), seen_.end(), picked)) continue;
    seen_.insert(std::lower_bound(seen_.begin(), seen_.end(), picked), picked);
    rng_state_ = rng();
    return picked;
  }
  rng_state_ = rng();
  return std::nullopt;
}

RRegSearchResult find_r_regular_sunflower(const LinearHypergraph& h, int r,
                                          const RRegParams& params) {
  if (r < 2) fail(ErrorCode::InfeasibleParameters, "need r >= 2");
  RRegSearchResult out;
  if (h.edge_count() == 0) return out;

  const int attempts = std::max(params.regularize_attempts, 1);
  const long long slice = std::max<long long>(1, params.matching_budget / attempts);

  for (int attempt = 0; attempt < attempts; ++attempt) {
    RegularizeParams reg;
    reg.retry_limit = params.kpartite_retry;
    reg.seed = derive_seed(params.seed, "rreg-partition", attempt);
    BalancedHypergraph balanced;
    try {
      balanced = balanced_kpartite(h, reg);
    } catch (const InputError&) {
      continue;  // partition threshold missed, try a fresh stream
    }
    ++out.partitions_tried;

    std::size_t x1 = balanced.parts.empty() ? 0 : balanced.parts[0].size();
    for (const auto& part : balanced.parts) x1 = std::min(x1, part.size());
    out.lemma_t = static_cast<int>(
        std::ceil(static_cast<double>(x1) / (2.0 * h.k * balanced.mu)));

    // Samplers run in parallel over a shared bucket store; extraction runs
    // under the lock, single-threaded per bucket.
    std::mutex store_mu;
    std::map<std::vector<int>, std::vector<std::vector<int>>> buckets;
    std::atomic<bool> done{false};
    std::atomic<long long> attempts_used{0};
    std::optional<RegularCertificate> found;

    const int workers = std::max(params.workers, 1);
    auto run_sampler = [&](int wid) {
      MatchingSampler sampler(
          balanced.host, params.t, slice / workers + 1,
          derive_seed(params.seed, "rreg-sample",
                      static_cast<std::uint64_t>(attempt) * 1009 + wid));
      while (!done.load()) {
        auto matching = sampler.next();
        if (!matching) break;
        std::vector<int> span;
        for (int ei : *matching)
          for (int v : balanced.host.edges[ei]) span.push_back(v);
        std::sort(span.begin(), span.end());

        std::lock_guard<std::mutex> lock(store_mu);
        if (done.load()) break;
        auto& bucket = buckets[span];
        if (std::find(bucket.begin(), bucket.end(), *matching) != bucket.end()) continue;
        bucket.push_back(*matching);
        if (static_cast<int>(bucket.size()) < r) continue;
        auto sunflower = find_sunflower(bucket, r);
        if (!sunflower) continue;

        // union of the petals minus the core
        std::vector<char> in_core(balanced.host.edge_count(), 0);
        for (int ei : sunflower->core) in_core[ei] = 1;
        std::vector<int> union_edges;
        for (const auto& petal : sunflower->petals)
          for (int ei : petal)
            if (!in_core[ei]) union_edges.push_back(ei);
        std::sort(union_edges.begin(), union_edges.end());
        union_edges.erase(std::unique(union_edges.begin(), union_edges.end()),
                          union_edges.end());

        RegularCertificate cert;
        cert.r = r;
        for (int ei : union_edges) cert.edge_indices.push_back(balanced.source_edge_index[ei]);
        std::sort(cert.edge_indices.begin(), cert.edge_indices.end());
        if (verify_regular(h, cert).ok()) {
          found = std::move(cert);
          done.store(true);
        }
        // a failed union means the bucket was degenerate; keep sampling
      }
      attempts_used.fetch_add(sampler.attempts());
    };

    if (workers == 1) {
      run_sampler(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(run_sampler, w);
      for (auto& th : pool) th.join();
    }
    out.matchings_sampled += attempts_used.load();
    {
      std::lock_guard<std::mutex> lock(store_mu);
      out.buckets = std::max(out.buckets, static_cast<int>(buckets.size()));
    }
    if (found) {
      out.status = SearchStatus::Found;
      out.cert = std::move(found);
      return out;
    }
  }
  // The pipeline has no exhaustive mode; a miss after the budget is NotFound.
  out.status = SearchStatus::NotFound;
  return out;
}

}  // namespace hreg
