#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hreg/smallreg.hpp"

using namespace hreg;
using namespace hreg::testing;

TEST_SUITE_BEGIN("smallreg");

namespace {

// s edge-disjoint perfect matchings of K_{2t} via the round-robin
// 1-factorization; matching f becomes colour f.
ColouredGraph factorized_host(int t, int s) {
  const int n = 2 * t;
  ColouredGraph g;
  g.n = n;
  g.s = s;
  for (int f = 0; f < s; ++f) {
    // round-robin: fix vertex n-1, rotate the rest
    std::vector<int> ring(n - 1);
    for (int i = 0; i < n - 1; ++i) ring[i] = (i + f) % (n - 1);
    int u = ring[0], v = n - 1;
    g.edges.push_back({std::min(u, v), std::max(u, v), f});
    for (int i = 1; i < t; ++i) {
      int a = ring[i], b = ring[n - 1 - i];
      g.edges.push_back({std::min(a, b), std::max(a, b), f});
    }
  }
  REQUIRE_FALSE(proper_colouring_violation(g).has_value());
  return g;
}

}  // namespace

TEST_CASE("pair product of two same-coloured disjoint edges") {
  ColouredGraph g;
  g.n = 4;
  g.s = 1;
  g.edges = {{0, 1, 0}, {2, 3, 0}};
  auto pg = build_pair_product_graph(g, 1'000);
  // 2 t (t-1) = 4 product edges for t = 2 edges of one colour
  CHECK(pg.edges.size() == 4);
  bool found = false;
  for (const auto& pe : pg.edges) {
    auto a = pg.vertices[pe.a], b = pg.vertices[pe.b];
    if ((a == std::pair{0, 2} && b == std::pair{1, 3}) ||
        (b == std::pair{0, 2} && a == std::pair{1, 3}))
      found = true;
  }
  CHECK(found);
}

TEST_CASE("pair product edge count matches the exact formula on factorized hosts") {
  for (int t : {2, 3, 4}) {
    for (int s : {1, 2, 3}) {
      auto g = factorized_host(t, s);
      auto pg = build_pair_product_graph(g, 1'000'000);
      CHECK(static_cast<long long>(pg.edges.size()) == 2LL * s * t * (t - 1));
    }
  }
}

TEST_CASE("pair product respects the vertex cap") {
  auto g = factorized_host(4, 3);
  CHECK_THROWS_AS(build_pair_product_graph(g, 3), InputError);
}

TEST_CASE("constrained cycle search recovers a planted pair, l = 2") {
  auto g = planted_double_cycle(2, 40, 16, 60, 3);
  auto result = find_constrained_cycle(g, 4, 1'000'000, 11);
  REQUIRE(result.status == SearchStatus::Found);
  auto extracted = extract_disjoint_rainbow_pair(*result.cycle, g);
  CHECK(extracted.cert.edge_indices.size() == 8);
  // two vertex-disjoint rainbow cycles over the same colours
  std::set<int> first(extracted.first.vertices.begin(), extracted.first.vertices.end());
  std::set<int> second(extracted.second.vertices.begin(), extracted.second.vertices.end());
  CHECK(first.size() == 4);
  CHECK(second.size() == 4);
  for (int v : second) CHECK_FALSE(first.count(v));
  std::set<int> c1, c2;
  for (int ei : extracted.first.edge_indices) c1.insert(g.edges[ei].colour);
  for (int ei : extracted.second.edge_indices) c2.insert(g.edges[ei].colour);
  CHECK(c1 == c2);
  CHECK(c1.size() == 4);
}

TEST_CASE("constrained cycle search recovers a planted pair, l = 3") {
  auto g = planted_double_cycle(3, 40, 16, 40, 5);
  auto result = find_constrained_cycle(g, 6, 1'000'000, 7);
  REQUIRE(result.status == SearchStatus::Found);
  auto extracted = extract_disjoint_rainbow_pair(*result.cycle, g);
  CHECK(extracted.cert.edge_indices.size() == 12);
  std::vector<int> colour_use(g.s, 0);
  for (int ei : extracted.cert.edge_indices) ++colour_use[g.edges[ei].colour];
  int used = 0;
  for (int c : colour_use) {
    if (c != 0) {
      CHECK(c == 2);
      ++used;
    }
  }
  CHECK(used == 6);
}

TEST_CASE("hosts without repeated colours admit no product edge") {
  ColouredGraph g;
  g.n = 3;
  g.s = 3;
  g.edges = {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}};
  auto result = find_constrained_cycle(g, 4, 10'000, 1);
  CHECK(result.status == SearchStatus::NotFound);
}

TEST_CASE("projection rejects corrupted cycles") {
  auto g = planted_double_cycle(2, 16, 8, 0, 2);
  ConstrainedCycle bogus;
  bogus.pairs = {{0, 4}, {1, 5}, {2, 6}, {0, 7}};  // repeats host vertex 0
  bogus.colours = {0, 1, 2, 3};
  CHECK_THROWS_AS(extract_disjoint_rainbow_pair(bogus, g), InputError);
}

TEST_CASE("host-level pipeline pulls a 4l-edge witness back to the 3-graph") {
  // two rainbow 4-cycles sharing colours, written as a linear 3-graph
  auto host = make_linear(12, {{0, 4, 5},
                               {1, 5, 6},
                               {2, 6, 7},
                               {3, 4, 7},
                               {0, 8, 9},
                               {1, 9, 10},
                               {2, 10, 11},
                               {3, 8, 11}});
  auto result = detect_small_two_regular(host, 2, 3'000'000, 700, 3);
  REQUIRE(result.status == SearchStatus::Found);
  CHECK(result.cert->edge_indices.size() == 8);
  CHECK(verify_regular(host, *result.cert).ok());
}

TEST_SUITE_END();
