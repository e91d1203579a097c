#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hreg/certificate.hpp"
#include "hreg/hypergraph.hpp"
#include "hreg/oracles.hpp"

namespace hreg {

struct SurfaceComponent {
  std::vector<int> vertices;
  std::vector<int> triangles;  // indices into the complex triangle list
  int one_faces = 0;
  int chi = 0;
  bool orientable = false;
  int genus_or_crosscaps = 0;
  std::string name;
};

// Pure 2-dimensional complex in which every vertex link is a single cycle and
// every 1-face lies in exactly two triangles: a disjoint union of closed
// surfaces.
struct SurfaceComplex {
  int n = 0;
  std::vector<std::array<int, 3>> triangles;
  std::vector<SurfaceComponent> components;  // filled by classify
};

// Throws NotASurface when the closed-surface invariants fail.
void validate_surface_complex(const SurfaceComplex& complex);

struct SurfaceClassification {
  int chi = 0;
  bool orientable = false;
  int genus_or_crosscaps = 0;
  std::string name;
};

// Classification of one connected complex: Euler characteristic plus
// orientability decided by greedy propagation of triangle orientations.
SurfaceClassification classify_surface(const SurfaceComplex& complex);

// Splits into connected components and classifies each; throws NotASurface.
void classify_components(SurfaceComplex& complex);

struct CloneDecomposition {
  SurfaceComplex complex;
  std::vector<int> phi;  // complex vertex -> host vertex
  int clone_steps = 0;
  int clones_added = 0;
};

// Splits every vertex whose link is a disjoint union of >= 2 cycles into one
// clone per cycle, until all links are single cycles. Isolated host vertices
// are dropped. order_seed = 0 processes the lowest eligible vertex id first;
// otherwise the order is sampled (the final complex is the same up to
// isomorphism). Throws LinkNotTwoRegular when some link is not 2-regular.
CloneDecomposition clone_decompose(const Hypergraph& g, std::uint64_t order_seed = 0);

struct ImmersionCertificate {
  SurfaceComplex surface;
  std::vector<int> phi;         // surface vertex -> host vertex
  std::vector<int> host_edges;  // host edge indices forming the image
};

// phi must be a homomorphism onto the listed host edges, injective on 1- and
// 2-faces, and the surface must satisfy the closed-surface invariants.
VerifyReport verify_immersion(const Hypergraph& host, const ImmersionCertificate& cert);

struct ImmersionSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<ImmersionCertificate> cert;
  long long oracle_nodes = 0;
  long long collision_samples = 0;
};

// Full pipeline: lift to the pair hypergraph, find a 2-regular subhypergraph
// (exact oracle first, collision search on coloured-graph views as fallback),
// pull back, drop isolated vertices, clone-decompose and classify.
ImmersionSearchResult find_zero_immersion(const Hypergraph& g, const OracleBudget& budget,
                                          std::uint64_t seed);

}  // namespace hreg
