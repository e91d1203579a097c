#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hreg/oracles.hpp"

using namespace hreg;
using namespace hreg::testing;

TEST_SUITE_BEGIN("oracles");

TEST_CASE("even witness of Pasch is the full edge set") {
  auto cert = find_even_subhypergraph(pasch());
  REQUIRE(cert.has_value());
  CHECK(cert->edge_indices == std::vector<int>{0, 1, 2, 3});
  CHECK(verify_even(pasch(), *cert).ok());
}

TEST_CASE("a star has no even subhypergraph") {
  auto star = make_linear(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
  CHECK_FALSE(find_even_subhypergraph(star).has_value());
}

TEST_CASE("m >= n+1 always yields an even certificate") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 6 + static_cast<int>(seed % 20);
    int k = 2 + static_cast<int>(seed % 4);
    auto g = random_simple(n, k, n + 1, seed);
    REQUIRE(g.edge_count() == n + 1);
    auto cert = find_even_subhypergraph(g);
    REQUIRE(cert.has_value());
    CHECK_FALSE(cert->edge_indices.empty());
    CHECK(verify_even(g, *cert).ok());
  }
}

TEST_CASE("even finder handles non-uniform edge lists") {
  std::vector<std::vector<int>> edges = {{0, 1}, {1, 2, 3}, {0, 2}, {0, 1, 2, 3}, {3, 4}};
  auto cert = find_even_subhypergraph(5, edges);
  if (cert) {
    std::vector<int> deg(5, 0);
    for (int ei : cert->edge_indices)
      for (int v : edges[ei]) ++deg[v];
    for (int v = 0; v < 5; ++v) CHECK(deg[v] % 2 == 0);
  }
}

TEST_CASE("exact oracle on the Fano plane, r = 2") {
  auto plane = fano();
  auto result = find_r_regular_exact(plane, 2, OracleBudget{});
  REQUIRE(result.status == SearchStatus::Found);
  REQUIRE(result.cert->edge_indices.size() == 4);
  CHECK(verify_regular(plane, *result.cert).ok());
  // the complement must be the three lines through one common point
  std::set<int> witness(result.cert->edge_indices.begin(), result.cert->edge_indices.end());
  std::vector<int> deg(7, 0);
  for (int ei = 0; ei < 7; ++ei)
    if (!witness.count(ei))
      for (int v : plane.edges[ei]) ++deg[v];
  CHECK(std::count(deg.begin(), deg.end(), 3) == 1);
}

TEST_CASE("exact oracle on the Fano plane, r = 3, takes all seven lines") {
  auto result = find_r_regular_exact(fano(), 3, OracleBudget{});
  REQUIRE(result.status == SearchStatus::Found);
  CHECK(result.cert->edge_indices == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("Pasch has no 3-regular subhypergraph") {
  auto result = find_r_regular_exact(pasch(), 3, OracleBudget{});
  CHECK(result.status == SearchStatus::NotFound);
}

TEST_CASE("exact oracle agrees with naive enumeration on small hosts") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = random_linear3(8 + static_cast<int>(seed % 5), 6 + static_cast<int>(seed % 9), seed);
    for (int r : {2, 3}) {
      auto fast = find_r_regular_exact(g, r, OracleBudget{});
      auto slow = naive_r_regular(g, r);
      REQUIRE(fast.status != SearchStatus::BudgetExhausted);
      CHECK((fast.status == SearchStatus::Found) == slow.has_value());
      if (slow) CHECK(fast.cert->edge_indices == *slow);
    }
  }
}

TEST_CASE("witness size caps make NotFound relative to the cap") {
  OracleBudget capped;
  capped.max_edges_in_witness = 3;
  CHECK(find_r_regular_exact(pasch(), 2, capped).status == SearchStatus::NotFound);
  capped.max_edges_in_witness = 4;
  CHECK(find_r_regular_exact(pasch(), 2, capped).status == SearchStatus::Found);
}

TEST_CASE("node budgets exhaust honestly") {
  OracleBudget tiny;
  tiny.max_nodes = 2;
  auto result = find_r_regular_exact(fano(), 2, tiny);
  CHECK(result.status == SearchStatus::BudgetExhausted);
}

TEST_CASE("hom count base cases") {
  Graph k2{2, {{0, 1}}};
  CHECK(hom_cycle_count(k2, 2) == 2);
  Graph c4{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
  CHECK(hom_cycle_count(c4, 2) == 32);
  Graph empty{5, {}};
  CHECK(hom_cycle_count(empty, 3) == 0);
}

TEST_CASE("hom count equals brute-force closed walks on small graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(seed);
    Graph g;
    g.n = 4 + static_cast<int>(seed % 5);
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v)
        if (uniform_int(rng, 0, 2) == 0) g.edges.emplace_back(u, v);
    for (int h : {2, 3, 4})
      CHECK(hom_cycle_count(g, h) == brute_closed_walks(g, 2 * h));
  }
}

TEST_CASE("hom count never decreases when an edge is added") {
  Graph g{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}};
  auto before = hom_cycle_count(g, 3);
  g.edges.emplace_back(4, 5);
  CHECK(hom_cycle_count(g, 3) >= before);
  g.edges.emplace_back(0, 5);
  CHECK(hom_cycle_count(g, 3) >= before);
}

TEST_CASE("hom count dominates the labelled rainbow cycle count") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = random_tripartite(3, 8, seed);
    auto g = to_coloured_graph(inst.h, 0, inst.part_of);
    for (int h : {2, 3})
      CHECK(hom_cycle_count(g.as_graph(), h) >= BigInt(brute_rainbow_cycles(g, h)));
  }
}

TEST_CASE("rainbow path counting on a rainbow triangle") {
  ColouredGraph tri;
  tri.n = 3;
  tri.s = 3;
  tri.edges = {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}};
  auto count = count_rainbow_paths(tri, 2, 1'000);
  CHECK_FALSE(count.capped);
  CHECK(count.count == 6);
}

TEST_CASE("every 2-path in a properly coloured star is rainbow") {
  ColouredGraph star;
  star.n = 5;
  star.s = 4;
  star.edges = {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {0, 4, 3}};
  auto count = count_rainbow_paths(star, 2, 1'000);
  CHECK(count.count == 12);  // 4 * 3 labelled centre paths
}

TEST_CASE("a single edge admits no 2-path, and limits cap the count") {
  ColouredGraph e;
  e.n = 2;
  e.s = 1;
  e.edges = {{0, 1, 0}};
  CHECK(count_rainbow_paths(e, 2, 100).count == 0);

  ColouredGraph tri;
  tri.n = 3;
  tri.s = 3;
  tri.edges = {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}};
  auto capped = count_rainbow_paths(tri, 2, 4);
  CHECK(capped.capped);
  CHECK(capped.count == 4);
}

TEST_SUITE_END();
