#include "hreg/certificate.hpp"

#include <string>

namespace hreg {

namespace {
void check_indices(const std::vector<int>& indices, int count, const char* what) {
  for (int i : indices)
    if (i < 0 || i >= count)
      fail(ErrorCode::IndexOutOfRange,
           std::string(what) + " index " + std::to_string(i) + " out of range");
}
}  // namespace

VerifyReport verify_regular(const Hypergraph& host, const RegularCertificate& cert) {
  check_indices(cert.edge_indices, host.edge_count(), "edge");
  VerifyReport report;
  if (cert.r < 1) report.add("target degree r must be positive");
  if (cert.edge_indices.empty()) {
    report.add("certificate is empty");
    return report;
  }
  std::vector<int> deg(host.n, 0);
  for (int i : cert.edge_indices)
    for (int v : host.edges[i]) ++deg[v];
  for (int v = 0; v < host.n; ++v)
    if (deg[v] != 0 && deg[v] != cert.r)
      report.add("vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]) +
                 ", expected " + std::to_string(cert.r));
  return report;
}

VerifyReport verify_even(const Hypergraph& host, const EvenCertificate& cert) {
  check_indices(cert.edge_indices, host.edge_count(), "edge");
  VerifyReport report;
  if (cert.edge_indices.empty()) {
    report.add("certificate is empty");
    return report;
  }
  std::vector<int> deg(host.n, 0);
  for (int i : cert.edge_indices)
    for (int v : host.edges[i]) ++deg[v];
  for (int v = 0; v < host.n; ++v)
    if (deg[v] % 2 != 0)
      report.add("vertex " + std::to_string(v) + " has odd degree " + std::to_string(deg[v]));
  return report;
}

VerifyReport verify_two_regular_coloured(const ColouredGraph& host,
                                         const TwoRegularColouredCertificate& cert) {
  check_indices(cert.edge_indices, host.edge_count(), "edge");
  VerifyReport report;
  if (cert.edge_indices.empty()) {
    report.add("certificate is empty");
    return report;
  }
  std::vector<int> deg(host.n, 0), use(host.s, 0);
  std::vector<char> taken(host.edge_count(), 0);
  for (int i : cert.edge_indices) {
    if (taken[i]) report.add("edge " + std::to_string(i) + " listed twice");
    taken[i] = 1;
    const auto& e = host.edges[i];
    ++deg[e.u];
    ++deg[e.v];
    ++use[e.colour];
  }
  for (int v = 0; v < host.n; ++v)
    if (deg[v] != 0 && deg[v] != 2)
      report.add("vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));
  for (int c = 0; c < host.s; ++c)
    if (use[c] != 0 && use[c] != 2)
      report.add("colour " + std::to_string(c) + " used " + std::to_string(use[c]) + " times");
  return report;
}

}  // namespace hreg
