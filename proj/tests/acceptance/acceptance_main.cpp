// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria marked with their stated time limits; limits are checked.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hreg/certificate_io.hpp"
#include "hreg/constructions.hpp"
#include "hreg/immersion.hpp"
#include "hreg/oracles.hpp"
#include "hreg/regsearch.hpp"
#include "hreg/regularize.hpp"
#include "hreg/rregsearch.hpp"
#include "hreg/smallreg.hpp"

using namespace hreg;
using namespace hreg::testing;
namespace fs = std::filesystem;

namespace {

int criteria_failed = 0;

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::vector<std::string> problems;
  std::string detail;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }

  void finish() {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > time_limit_s)
      problems.push_back("exceeded time limit: " + std::to_string(elapsed) + " s > " +
                         std::to_string(time_limit_s) + " s");
    std::ostringstream line;
    line << (problems.empty() ? "PASS" : "FAIL") << " [" << std::setw(2) << id << "] " << name;
    if (!detail.empty()) line << " (" << detail << ")";
    line << " [" << std::fixed << std::setprecision(2) << elapsed << " s]";
    std::cout << line.str() << '\n';
    for (const auto& p : problems) std::cout << "       - " << p << '\n';
    if (!problems.empty()) ++criteria_failed;
  }
};

// ---------------------------------------------------------------- criteria

void criterion_even_totality() {
  Criterion c{1, "even-subhypergraph totality on 200 random m=n+1 instances", 5.0};
  Rng rng(2024);
  int solved = 0;
  for (int i = 0; i < 200; ++i) {
    int n = uniform_int(rng, 5, 30);
    std::vector<std::vector<int>> edges;
    if (i % 5 == 4) {
      // genuinely non-uniform instance
      std::set<std::vector<int>> pool;
      while (static_cast<int>(pool.size()) < n + 1) {
        int k = uniform_int(rng, 2, 5);
        std::vector<int> e;
        while (static_cast<int>(e.size()) < std::min(k, n)) {
          int v = uniform_int(rng, 0, n - 1);
          if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        std::sort(e.begin(), e.end());
        pool.insert(e);
      }
      edges.assign(pool.begin(), pool.end());
    } else {
      int k = 2 + i % 4;
      k = std::min(k, n - 1);
      auto choose = [](int a, int b) {
        double c = 1;
        for (int j = 0; j < b; ++j) c *= static_cast<double>(a - j) / (j + 1);
        return c;
      };
      while (k > 2 && choose(n, k) < n + 1) --k;  // need n+1 distinct k-sets
      edges = random_simple(n, k, n + 1, rng()).edges;
    }
    if (static_cast<int>(edges.size()) != n + 1) {
      c.require(false, "instance generation fell short");
      continue;
    }
    auto cert = find_even_subhypergraph(n, edges);
    if (!cert || cert->edge_indices.empty()) {
      c.require(false, "no certificate on instance " + std::to_string(i));
      continue;
    }
    std::vector<int> deg(n, 0);
    for (int ei : cert->edge_indices)
      for (int v : edges[ei]) ++deg[v];
    bool even = true;
    for (int v = 0; v < n; ++v)
      if (deg[v] % 2) even = false;
    c.require(even, "odd GF(2) incidence sum on instance " + std::to_string(i));
    if (even) ++solved;
  }
  c.detail = std::to_string(solved) + "/200 instances";
  c.require(solved == 200, "some instances unsolved");
  c.finish();
}

void criterion_oracle_ground_truth() {
  Criterion c{2, "exact oracle agrees with naive enumeration, 100 hosts, r in {2,3}", 60.0};
  int agreements = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed * 11 + 5);
    int n = uniform_int(rng, 7, 14);
    int m = uniform_int(rng, 5, 14);
    auto g = random_linear3(n, m, seed * 1009);
    for (int r : {2, 3}) {
      auto fast = find_r_regular_exact(g, r, OracleBudget{});
      auto slow = naive_r_regular(g, r);
      bool same_status = (fast.status == SearchStatus::Found) == slow.has_value();
      bool same_witness = !slow || fast.cert->edge_indices == *slow;
      c.require(fast.status != SearchStatus::BudgetExhausted, "oracle exhausted unexpectedly");
      c.require(same_status, "status mismatch at seed " + std::to_string(seed));
      c.require(same_witness, "witness mismatch at seed " + std::to_string(seed));
      if (same_status && same_witness) ++agreements;
    }
  }
  c.detail = std::to_string(agreements) + "/200 searches agree";
  c.finish();
}

void criterion_known_witnesses() {
  Criterion c{3, "known witnesses: Fano, Pasch, STS(9)", 10.0};
  auto f2 = find_r_regular_exact(fano(), 2, OracleBudget{});
  c.require(f2.status == SearchStatus::Found && f2.cert->edge_indices.size() == 4,
            "Fano r=2 should give a 4-edge witness");
  if (f2.cert) c.require(verify_regular(fano(), *f2.cert).ok(), "Fano r=2 witness invalid");
  auto f3 = find_r_regular_exact(fano(), 3, OracleBudget{});
  c.require(f3.status == SearchStatus::Found && f3.cert->edge_indices.size() == 7,
            "Fano r=3 should use all 7 lines");
  auto p2 = find_r_regular_exact(pasch(), 2, OracleBudget{});
  c.require(p2.status == SearchStatus::Found &&
                p2.cert->edge_indices == std::vector<int>{0, 1, 2, 3},
            "Pasch r=2 witness should be all 4 edges");
  auto sts = gen_sts(9, 7);
  OracleBudget cap4;
  cap4.max_edges_in_witness = 4;
  c.require(find_r_regular_exact(sts, 2, cap4).status == SearchStatus::NotFound,
            "STS(9) must be anti-Pasch (no 4-edge 2-regular subhypergraph)");
  OracleBudget cap6;
  cap6.max_edges_in_witness = 6;
  auto six = find_r_regular_exact(sts, 2, cap6);
  c.require(six.status == SearchStatus::Found && six.cert->edge_indices.size() == 6,
            "STS(9) must contain a 6-edge 2-regular subhypergraph");
  if (six.cert) c.require(verify_regular(sts, *six.cert).ok(), "STS(9) witness invalid");
  c.finish();
}

void criterion_regularization() {
  Criterion c{4, "regularization contracts on 50 random linear 3-graphs", 120.0};
  int equal_parts_retry_failures = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed * 77);
    int n = uniform_int(rng, 30, 200);
    auto g = random_linear3(n, 3 * n, seed * 131 + 1);
    if (g.edge_count() < n) continue;
    RegularizeParams params;
    params.seed = seed;

    auto b = balanced_kpartite(g, params);
    auto deg = b.host.degrees();
    const long long mu_int = 2LL * b.lambda * b.lambda * b.lambda;
    for (int p = 0; p < 3; ++p) {
      long long max_deg = 0;
      for (int v : b.parts[p]) max_deg = std::max(max_deg, static_cast<long long>(deg[v]));
      c.require(max_deg * static_cast<long long>(b.parts[p].size()) <=
                    mu_int * b.host.edge_count(),
                "Eq. (1) violated at seed " + std::to_string(seed));
    }
    const long long k_lambda = 3LL * b.lambda;
    c.require(b.host.edge_count() * k_lambda * k_lambda * k_lambda >= 6LL * g.edge_count(),
              "edge lower bound violated at seed " + std::to_string(seed));

    const double d = static_cast<double>(g.edge_count()) / g.n;
    try {
      auto eq = balanced_equal_parts(g, d, params);
      c.require(eq.parts[0].size() <= eq.parts[1].size() &&
                    eq.parts[1].size() == eq.parts[2].size(),
                "|X| <= |Y| = |Z| violated at seed " + std::to_string(seed));
      auto eq_deg = eq.host.degrees();
      for (int p = 0; p < 3; ++p) {
        long long max_deg = 0;
        for (int v : eq.parts[p]) max_deg = std::max(max_deg, static_cast<long long>(eq_deg[v]));
        c.require(static_cast<double>(max_deg) * eq.parts[p].size() <=
                      eq.mu * eq.host.edge_count() + 1e-9,
                  "equal-parts balancedness violated at seed " + std::to_string(seed));
      }
      long long v_h = 0;
      for (const auto& part : eq.parts) v_h += part.size();
      const double lambda3 = std::pow(eq.lambda, 3);
      c.require(eq.host.edge_count() * 81.0 * lambda3 >= v_h * d - 1e-6,
                "equal-parts edge bound violated at seed " + std::to_string(seed));
    } catch (const InputError& e) {
      if (e.code() == ErrorCode::RetryLimitExceeded)
        ++equal_parts_retry_failures;
      else
        c.require(false, std::string("unexpected error: ") + e.what());
    }
  }
  c.detail = std::to_string(equal_parts_retry_failures) + "/50 equal-parts retries exhausted";
  c.require(equal_parts_retry_failures * 20 < 50, "RetryLimitExceeded on >= 5% of seeds");
  c.finish();
}

void criterion_hom_equivalence() {
  Criterion c{5, "hom counts equal brute-force closed walks, 500 graphs, h in {2,3,4}", 60.0};
  Rng rng(515);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    Graph g;
    g.n = uniform_int(rng, 2, 8);
    int density = uniform_int(rng, 15, 55);
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v)
        if (uniform_int(rng, 0, 99) < density) g.edges.emplace_back(u, v);
    for (int h : {2, 3, 4}) {
      if (hom_cycle_count(g, h) == BigInt(brute_closed_walks(g, 2 * h)))
        ++checked;
      else
        c.require(false, "mismatch on graph " + std::to_string(i) + ", h=" + std::to_string(h));
    }
  }
  c.detail = std::to_string(checked) + "/1500 counts match";
  c.finish();
}

void criterion_collision_end_to_end() {
  Criterion c{6, "collision search on STS(9) and STS(13), >= 90% of 20 seeds", 300.0};
  for (int order : {9, 13}) {
    auto sts = gen_sts(order, 42);
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      SearchParams params;
      params.seed = seed;
      params.sample_budget = 1'000'000;
      auto result = detect_two_regular(sts, Strategy::Matchings, params, 120);
      if (result.status != SearchStatus::Found) continue;
      if (!verify_regular(sts, *result.cert).ok()) {
        c.require(false, "invalid pullback at order " + std::to_string(order));
        continue;
      }
      ++hits;
    }
    c.detail += (c.detail.empty() ? "" : ", ") + std::string("STS(") + std::to_string(order) +
                "): " + std::to_string(hits) + "/20";
    c.require(hits >= 18, "below 90% success on STS(" + std::to_string(order) + ")");
  }
  c.finish();
}

void criterion_planted_small_two_regular() {
  Criterion c{7, "planted two-cycle recovery, l in {2,3}, n=60, >= 90% of 20", 300.0};
  int hits = 0;
  for (int i = 0; i < 20; ++i) {
    const int ell = (i < 10) ? 2 : 3;
    auto g = planted_double_cycle(ell, 60, 24, 120, 1000 + i);
    auto result = find_constrained_cycle(g, 2 * ell, 1'000'000, 77 + i);
    if (result.status != SearchStatus::Found) continue;
    auto extracted = extract_disjoint_rainbow_pair(*result.cycle, g);
    if (static_cast<int>(extracted.cert.edge_indices.size()) == 4 * ell &&
        verify_two_regular_coloured(g, extracted.cert).ok())
      ++hits;
  }
  c.detail = std::to_string(hits) + "/20 recovered";
  c.require(hits >= 18, "below 90% recovery");
  c.finish();
}

void criterion_sunflower_pipeline() {
  Criterion c{8, "sunflower pipeline: STS(9) success and oracle-certified soundness", 120.0};
  int hits = 0;
  auto sts = gen_sts(9, 42);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RRegParams params;
    params.seed = seed;
    params.matching_budget = 100'000;
    auto result = find_r_regular_sunflower(sts, 2, params);
    if (result.status != SearchStatus::Found) continue;
    if (!verify_regular(sts, *result.cert).ok()) {
      c.require(false, "unsound certificate at seed " + std::to_string(seed));
      continue;
    }
    ++hits;
  }
  c.detail = "STS(9): " + std::to_string(hits) + "/20";
  c.require(hits >= 18, "below 90% success on STS(9)");

  int free_checked = 0;
  for (std::uint64_t seed = 1; free_checked < 10 && seed <= 200; ++seed) {
    auto g = random_linear3(10, 9, seed * 7);
    if (g.edge_count() > 14) continue;
    auto truth = find_r_regular_exact(g, 2, OracleBudget{});
    if (truth.status != SearchStatus::NotFound) continue;
    ++free_checked;
    RRegParams params;
    params.seed = seed;
    params.matching_budget = 3'000;
    params.regularize_attempts = 4;
    auto result = find_r_regular_sunflower(g, 2, params);
    c.require(result.status == SearchStatus::NotFound,
              "pipeline contradicted the oracle at seed " + std::to_string(seed));
  }
  c.require(free_checked == 10, "could not assemble the r-regular-free corpus");
  c.finish();
}

void criterion_lower_bound() {
  Criterion c{9, "lower-bound construction at n in {40,60}: linear, oracle-free, mean X", 600.0};
  for (int n : {40, 60}) {
    double sum_x = 0, expected = 0, variance = 0;
    for (int s = 0; s < 20; ++s) {
      ConstructionParams params;
      params.n = n;
      params.k = 3;
      params.r = 3;
      params.seed = 5000 + 100 * n + s;
      auto [g, report] = gen_lower_bound(params);
      c.require(!linearity_violation(g).has_value(),
                "non-linear output at n=" + std::to_string(n));
      OracleBudget budget;
      budget.max_nodes = 10'000'000;
      budget.max_edges_in_witness = 12;
      auto probe = find_r_regular_exact(g, 3, budget);
      c.require(probe.status == SearchStatus::NotFound,
                "capped oracle found a 3-regular subhypergraph at n=" + std::to_string(n));
      sum_x += static_cast<double>(report.sampled_edges);
      double candidates = static_cast<double>(report.part_a_size) * report.part_b_size *
                          (report.part_b_size - 1) / 2.0;
      expected = candidates * report.p;
      variance = candidates * report.p * (1.0 - report.p);
    }
    double mean = sum_x / 20.0;
    double se = std::sqrt(variance / 20.0);
    c.detail += (c.detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) +
                ": mean X " + std::to_string(mean) + " vs " + std::to_string(expected);
    c.require(std::abs(mean - expected) <= 3.0 * se,
              "mean sampled edges outside 3 standard errors at n=" + std::to_string(n));
  }
  c.finish();
}

void criterion_immersion() {
  Criterion c{10, "immersion fixtures and the linear-host impossibility", 60.0};
  auto tetra_result = find_zero_immersion(tetrahedron(), OracleBudget{}, 1);
  c.require(tetra_result.status == SearchStatus::Found &&
                tetra_result.cert->surface.components.size() == 1 &&
                tetra_result.cert->surface.components[0].chi == 2 &&
                tetra_result.cert->surface.components[0].name == "sphere",
            "tetrahedron should immerse as a sphere");
  if (tetra_result.cert)
    c.require(verify_immersion(tetrahedron(), *tetra_result.cert).ok(),
              "tetrahedron phi not injective on faces");

  auto glued = clone_decompose(glued_tetrahedra());
  c.require(glued.complex.components.size() == 2, "glued tetrahedra should split in two");
  for (const auto& comp : glued.complex.components)
    c.require(comp.chi == 2 && comp.orientable && comp.name == "sphere",
              "glued component is not a sphere");

  auto octa = clone_decompose(octahedron());
  c.require(octa.complex.components.size() == 1 && octa.complex.components[0].chi == 2,
            "octahedron should be a chi-2 sphere");

  SurfaceComplex torus;
  torus.n = 7;
  for (const auto& e : torus7().edges) torus.triangles.push_back({e[0], e[1], e[2]});
  auto torus_cls = classify_surface(torus);
  c.require(torus_cls.chi == 0 && torus_cls.orientable, "torus fixture misclassified");

  SurfaceComplex rp2;
  rp2.n = 6;
  for (const auto& e : projective_plane6().edges) rp2.triangles.push_back({e[0], e[1], e[2]});
  auto rp2_cls = classify_surface(rp2);
  c.require(rp2_cls.chi == 1 && !rp2_cls.orientable, "projective plane fixture misclassified");

  auto glued_result = find_zero_immersion(glued_tetrahedra(), OracleBudget{}, 3);
  c.require(glued_result.status == SearchStatus::Found &&
                verify_immersion(glued_tetrahedra(), *glued_result.cert).ok(),
            "glued tetrahedra certificate invalid");

  auto sts = gen_sts(9, 7);
  auto lifted = pair_hypergraph(sts, true);
  OracleBudget cap;
  cap.max_edges_in_witness = 12;
  c.require(find_r_regular_exact(lifted.h, 2, cap).status == SearchStatus::NotFound,
            "pair hypergraph of STS(9) admitted a 2-regular subhypergraph");
  c.finish();
}

// ------------------------------------------------------------ CLI determinism

struct CliRun {
  int exit_code;
  std::string stdout_text;
};

CliRun run_cli(const std::string& args, const fs::path& out_file) {
  std::string command =
      std::string(HREG_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>/dev/null";
  int raw = std::system(command.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_cli_determinism() {
  Criterion c{11, "CLI determinism: identical seeds give identical bytes", 120.0};
  fs::path dir = fs::temp_directory_path() / "hreg-acceptance";
  fs::create_directories(dir);
  fs::path host = dir / "sts9.txt";
  {
    std::ofstream out(host);
    serialize_hypergraph(gen_sts(9, 5), out);
  }
  fs::path tetra = dir / "tetra.txt";
  {
    std::ofstream out(tetra);
    serialize_hypergraph(tetrahedron(), out);
  }

  const std::vector<std::string> commands = {
      "gen sts --n 13 --seed 3",
      "detect regular --r 2 --seed 4 " + host.string(),
      "detect two-regular --strategy matchings --seed 2 --workers 1 " + host.string(),
      "detect small-two-regular --l 2 --seed 6 --partition-attempts 10 " + host.string(),
      "immersion find --seed 8 " + tetra.string(),
      "oracle even " + host.string(),
  };
  int idx = 0;
  for (const auto& base : commands) {
    fs::path out_a = dir / ("rep-a-" + std::to_string(idx) + ".txt");
    fs::path out_b = dir / ("rep-b-" + std::to_string(idx) + ".txt");
    fs::path cert_a = dir / ("cert-a-" + std::to_string(idx) + ".txt");
    fs::path cert_b = dir / ("cert-b-" + std::to_string(idx) + ".txt");
    auto a = run_cli(base + " --out " + cert_a.string(), out_a);
    auto b = run_cli(base + " --out " + cert_b.string(), out_b);
    c.require(a.exit_code == b.exit_code, "exit codes differ for: " + base);
    auto scrub = [](std::string text, const std::string& needle) {
      for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle))
        text.erase(pos, needle.size());
      return text;
    };
    c.require(scrub(a.stdout_text, cert_a.string()) == scrub(b.stdout_text, cert_b.string()),
              "reports differ for: " + base);
    c.require(slurp(cert_a) == slurp(cert_b), "artifacts differ for: " + base);
    ++idx;
  }
  c.finish();
}

}  // namespace

int main() {
  std::cout << "acceptance suite\n";
  criterion_even_totality();
  criterion_oracle_ground_truth();
  criterion_known_witnesses();
  criterion_regularization();
  criterion_hom_equivalence();
  criterion_collision_end_to_end();
  criterion_planted_small_two_regular();
  criterion_sunflower_pipeline();
  criterion_lower_bound();
  criterion_immersion();
  criterion_cli_determinism();
  if (criteria_failed == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << criteria_failed << " criteria failed\n";
  return 1;
}
