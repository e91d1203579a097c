#pragma once

#include <string>
#include <vector>

#include "hreg/coloured_graph.hpp"
#include "hreg/hypergraph.hpp"

namespace hreg {

// Certificates reference edge indices of their host, so duplicate-free hosts
// give unambiguous witnesses.

struct RegularCertificate {
  int r = 2;
  std::vector<int> edge_indices;
};

struct EvenCertificate {
  std::vector<int> edge_indices;
};

// Edge set of a ColouredGraph: 2-regular, every colour used 0 or 2 times.
struct TwoRegularColouredCertificate {
  std::vector<int> edge_indices;
};

struct VerifyReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
};

// All verifiers recompute every invariant from scratch and list each violated
// vertex/colour. Out-of-range indices throw InputError(IndexOutOfRange).
VerifyReport verify_regular(const Hypergraph& host, const RegularCertificate& cert);
VerifyReport verify_even(const Hypergraph& host, const EvenCertificate& cert);
VerifyReport verify_two_regular_coloured(const ColouredGraph& host,
                                         const TwoRegularColouredCertificate& cert);

}  // namespace hreg
