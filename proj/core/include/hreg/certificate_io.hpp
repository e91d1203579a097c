#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hreg/certificate.hpp"
#include "hreg/immersion.hpp"

namespace hreg {

// On-disk certificate document. Field names are stable:
//   kind         regular | even | two-regular-coloured | immersion
//   r            target degree (kind regular)
//   edges        host edge indices
//   colour_part, parts     tripartition (kind two-regular-coloured)
//   phi, triangles..end, surfaces..end   (kind immersion)
//   pair_map..end          optional pair-vertex -> host pair table
struct CertificateDoc {
  std::string kind;
  int r = 0;
  std::vector<int> edges;

  int colour_part = -1;
  std::vector<int> parts;  // per-vertex part id

  std::vector<int> phi;
  std::vector<std::array<int, 3>> triangles;
  struct SurfaceLine {
    int id = 0;
    int chi = 0;
    bool orientable = false;
    std::string name;
    int triangle_count = 0;
  };
  std::vector<SurfaceLine> surfaces;

  std::vector<std::array<int, 3>> pair_map;  // (pair vertex, u, v)
};

CertificateDoc make_certificate_doc(const RegularCertificate& cert);
CertificateDoc make_certificate_doc(const EvenCertificate& cert);
CertificateDoc make_certificate_doc(const TwoRegularColouredCertificate& cert, int colour_part,
                                    const std::vector<int>& parts,
                                    const std::vector<int>& host_edge_indices);
CertificateDoc make_certificate_doc(const ImmersionCertificate& cert);

void write_certificate(const CertificateDoc& doc, std::ostream& out);
std::string write_certificate(const CertificateDoc& doc);
CertificateDoc parse_certificate(std::istream& in);
CertificateDoc parse_certificate_file(const std::string& path);

// Dispatches on kind and recomputes every invariant against the host.
VerifyReport verify_certificate(const CertificateDoc& doc, const Hypergraph& host);

}  // namespace hreg
