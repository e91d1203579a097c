#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "hreg/constructions.hpp"
#include "hreg/immersion.hpp"

using namespace hreg;
using namespace hreg::testing;

TEST_SUITE_BEGIN("immersion");

TEST_CASE("the tetrahedron boundary is already a sphere") {
  auto d = clone_decompose(tetrahedron());
  CHECK(d.clone_steps == 0);
  REQUIRE(d.complex.components.size() == 1);
  const auto& c = d.complex.components[0];
  CHECK(c.chi == 2);
  CHECK(c.orientable);
  CHECK(c.name == "sphere");
  CHECK(d.complex.triangles.size() == 4);
}

TEST_CASE("two tetrahedra glued at a vertex split into two spheres") {
  auto d = clone_decompose(glued_tetrahedra());
  CHECK(d.clone_steps == 1);
  CHECK(d.clones_added == 2);
  REQUIRE(d.complex.components.size() == 2);
  for (const auto& c : d.complex.components) {
    CHECK(c.chi == 2);
    CHECK(c.orientable);
    CHECK(c.name == "sphere");
  }
  // phi maps both clones back to the shared host vertex
  std::map<int, int> preimages;
  for (int host : d.phi) ++preimages[host];
  CHECK(preimages[0] == 2);
  // 1- and 2-face counts preserved: 8 triangles total, still 8
  CHECK(d.complex.triangles.size() == 8);
}

TEST_CASE("the octahedron boundary is a sphere with chi 6-12+8") {
  auto d = clone_decompose(octahedron());
  REQUIRE(d.complex.components.size() == 1);
  CHECK(d.complex.components[0].chi == 2);
  CHECK(d.complex.components[0].one_faces == 12);
  CHECK(d.complex.components[0].name == "sphere");
}

TEST_CASE("links that are not 2-regular are rejected") {
  auto single = make_simple(3, {{0, 1, 2}});
  CHECK_THROWS_AS(clone_decompose(single), InputError);
  try {
    clone_decompose(single);
  } catch (const InputError& e) {
    CHECK(e.code() == ErrorCode::LinkNotTwoRegular);
  }
}

TEST_CASE("the 7-vertex torus classifies as (0, orientable)") {
  auto host = torus7();
  SurfaceComplex complex;
  complex.n = host.n;
  for (const auto& e : host.edges) complex.triangles.push_back({e[0], e[1], e[2]});
  auto cls = classify_surface(complex);
  CHECK(cls.chi == 0);
  CHECK(cls.orientable);
  CHECK(cls.name == "torus");
  CHECK(cls.genus_or_crosscaps == 1);
}

TEST_CASE("the 6-vertex projective plane classifies as (1, non-orientable)") {
  auto host = projective_plane6();
  SurfaceComplex complex;
  complex.n = host.n;
  for (const auto& e : host.edges) complex.triangles.push_back({e[0], e[1], e[2]});
  auto cls = classify_surface(complex);
  CHECK(cls.chi == 1);
  CHECK_FALSE(cls.orientable);
  CHECK(cls.name == "projective plane");
  CHECK(cls.genus_or_crosscaps == 1);
}

TEST_CASE("broken complexes are rejected as non-surfaces") {
  SurfaceComplex open_disk;
  open_disk.n = 3;
  open_disk.triangles = {{0, 1, 2}};
  CHECK_THROWS_AS(classify_surface(open_disk), InputError);
}

TEST_CASE("cloning order does not change the surface inventory") {
  // three tetrahedra sharing one vertex: three sphere components either way
  auto host = make_simple(10, {{0, 1, 2},
                               {0, 1, 3},
                               {0, 2, 3},
                               {1, 2, 3},
                               {0, 4, 5},
                               {0, 4, 6},
                               {0, 5, 6},
                               {4, 5, 6},
                               {0, 7, 8},
                               {0, 7, 9},
                               {0, 8, 9},
                               {7, 8, 9}});
  std::multiset<int> reference;
  for (std::uint64_t order_seed = 0; order_seed <= 10; ++order_seed) {
    auto d = clone_decompose(host, order_seed);
    std::multiset<int> chis;
    for (const auto& c : d.complex.components) chis.insert(c.chi);
    if (order_seed == 0)
      reference = chis;
    else
      CHECK(chis == reference);
    CHECK(d.complex.components.size() == 3);
  }
}

TEST_CASE("find_zero_immersion on the tetrahedron yields a verified sphere") {
  auto result = find_zero_immersion(tetrahedron(), OracleBudget{}, 1);
  REQUIRE(result.status == SearchStatus::Found);
  REQUIRE(result.cert.has_value());
  CHECK(result.cert->surface.components.size() == 1);
  CHECK(result.cert->surface.components[0].name == "sphere");
  CHECK(verify_immersion(tetrahedron(), *result.cert).ok());
}

TEST_CASE("find_zero_immersion on the glued tetrahedra verifies") {
  auto host = glued_tetrahedra();
  auto result = find_zero_immersion(host, OracleBudget{}, 2);
  REQUIRE(result.status == SearchStatus::Found);
  CHECK(verify_immersion(host, *result.cert).ok());
  for (const auto& c : result.cert->surface.components) CHECK(c.name == "sphere");
}

TEST_CASE("linear hosts admit no 0-immersion: STS(9) is an exhaustive miss") {
  auto sts = gen_sts(9, 3);
  Hypergraph host = static_cast<const Hypergraph&>(sts);
  auto result = find_zero_immersion(host, OracleBudget{}, 1);
  CHECK(result.status == SearchStatus::NotFound);

  // the same certainty through the lift: max pair-degree is 1
  auto lifted = pair_hypergraph(host, true);
  OracleBudget capped;
  capped.max_edges_in_witness = 12;
  CHECK(find_r_regular_exact(lifted.h, 2, capped).status == SearchStatus::NotFound);
}

TEST_CASE("verify_immersion flags broken homomorphisms") {
  auto host = tetrahedron();
  auto good = find_zero_immersion(host, OracleBudget{}, 1);
  REQUIRE(good.status == SearchStatus::Found);
  auto cert = *good.cert;
  cert.phi[0] = cert.phi[1];  // collapse a 1-face
  CHECK_FALSE(verify_immersion(host, cert).ok());
}

TEST_SUITE_END();
