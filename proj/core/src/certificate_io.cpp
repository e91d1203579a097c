#include "hreg/certificate_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "hreg/coloured_graph.hpp"

namespace hreg {

CertificateDoc make_certificate_doc(const RegularCertificate& cert) {
  CertificateDoc doc;
  doc.kind = "regular";
  doc.r = cert.r;
  doc.edges = cert.edge_indices;
  return doc;
}

CertificateDoc make_certificate_doc(const EvenCertificate& cert) {
  CertificateDoc doc;
  doc.kind = "even";
  doc.edges = cert.edge_indices;
  return doc;
}

CertificateDoc make_certificate_doc(const TwoRegularColouredCertificate& cert, int colour_part,
                                    const std::vector<int>& parts,
                                    const std::vector<int>& host_edge_indices) {
  CertificateDoc doc;
  doc.kind = "two-regular-coloured";
  doc.colour_part = colour_part;
  doc.parts = parts;
  doc.edges.reserve(cert.edge_indices.size());
  for (int ci : cert.edge_indices) doc.edges.push_back(host_edge_indices[ci]);
  return doc;
}

CertificateDoc make_certificate_doc(const ImmersionCertificate& cert) {
  CertificateDoc doc;
  doc.kind = "immersion";
  doc.edges = cert.host_edges;
  doc.phi = cert.phi;
  doc.triangles = cert.surface.triangles;
  for (std::size_t i = 0; i < cert.surface.components.size(); ++i) {
    const auto& c = cert.surface.components[i];
    doc.surfaces.push_back({static_cast<int>(i), c.chi, c.orientable, c.name,
                            static_cast<int>(c.triangles.size())});
  }
  return doc;
}

void write_certificate(const CertificateDoc& doc, std::ostream& out) {
  out << "kind " << doc.kind << '\n';
  if (doc.kind == "regular") out << "r " << doc.r << '\n';
  out << "edges";
  for (int e : doc.edges) out << ' ' << e;
  out << '\n';
  if (doc.colour_part >= 0) {
    out << "colour_part " << doc.colour_part << '\n';
    out << "parts";
    for (int p : doc.parts) out << ' ' << p;
    out << '\n';
  }
  if (!doc.phi.empty()) {
    out << "phi";
    for (int v : doc.phi) out << ' ' << v;
    out << '\n';
  }
  if (!doc.triangles.empty()) {
    out << "triangles\n";
    for (const auto& t : doc.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    out << "end\n";
  }
  if (!doc.surfaces.empty()) {
    out << "surfaces\n";
    for (const auto& s : doc.surfaces)
      out << s.id << " chi " << s.chi << " orientable " << (s.orientable ? 1 : 0) << " triangles "
          << s.triangle_count << " name " << s.name << '\n';
    out << "end\n";
  }
  if (!doc.pair_map.empty()) {
    out << "pair_map\n";
    for (const auto& p : doc.pair_map) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    out << "end\n";
  }
}

std::string write_certificate(const CertificateDoc& doc) {
  std::ostringstream ss;
  write_certificate(doc, ss);
  return ss.str();
}

namespace {

std::vector<int> tail_ints(std::istringstream& ss) {
  std::vector<int> out;
  long long v;
  while (ss >> v) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

CertificateDoc parse_certificate(std::istream& in) {
  CertificateDoc doc;
  std::string line;
  bool saw_kind = false;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ss(line);
    std::string field;
    ss >> field;
    if (field == "kind") {
      ss >> doc.kind;
      saw_kind = true;
    } else if (field == "r") {
      ss >> doc.r;
    } else if (field == "edges") {
      doc.edges = tail_ints(ss);
    } else if (field == "colour_part") {
      ss >> doc.colour_part;
    } else if (field == "parts") {
      doc.parts = tail_ints(ss);
    } else if (field == "phi") {
      doc.phi = tail_ints(ss);
    } else if (field == "triangles" || field == "pair_map") {
      bool is_triangles = field == "triangles";
      while (std::getline(in, line)) {
        std::istringstream body(line);
        std::string first;
        if (!(body >> first)) continue;
        if (first == "end") break;
        std::array<int, 3> row;
        try {
          row[0] = std::stoi(first);
        } catch (const std::exception&) {
          fail(ErrorCode::MalformedCertificate, "bad block row '" + line + "'");
        }
        if (!(body >> row[1] >> row[2]))
          fail(ErrorCode::MalformedCertificate, "bad block row '" + line + "'");
        (is_triangles ? doc.triangles : doc.pair_map).push_back(row);
      }
    } else if (field == "surfaces") {
      while (std::getline(in, line)) {
        std::istringstream body(line);
        std::string first;
        if (!(body >> first)) continue;
        if (first == "end") break;
        CertificateDoc::SurfaceLine s;
        try {
          s.id = std::stoi(first);
        } catch (const std::exception&) {
          fail(ErrorCode::MalformedCertificate, "bad surface row '" + line + "'");
        }
        std::string key;
        while (body >> key) {
          if (key == "chi")
            body >> s.chi;
          else if (key == "orientable") {
            int flag;
            body >> flag;
            s.orientable = flag != 0;
          } else if (key == "triangles")
            body >> s.triangle_count;
          else if (key == "name") {
            std::getline(body, s.name);
            std::size_t ns = s.name.find_first_not_of(' ');
            if (ns != std::string::npos) s.name = s.name.substr(ns);
          }
        }
        doc.surfaces.push_back(std::move(s));
      }
    } else {
      fail(ErrorCode::MalformedCertificate, "unknown field '" + field + "'");
    }
  }
  if (!saw_kind) fail(ErrorCode::MalformedCertificate, "missing kind");
  if (doc.kind != "regular" && doc.kind != "even" && doc.kind != "two-regular-coloured" &&
      doc.kind != "immersion")
    fail(ErrorCode::MalformedCertificate, "unknown kind '" + doc.kind + "'");
  return doc;
}

CertificateDoc parse_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MalformedCertificate, "cannot open '" + path + "'");
  return parse_certificate(in);
}

VerifyReport verify_certificate(const CertificateDoc& doc, const Hypergraph& host) {
  if (doc.kind == "regular") return verify_regular(host, RegularCertificate{doc.r, doc.edges});
  if (doc.kind == "even") return verify_even(host, EvenCertificate{doc.edges});
  if (doc.kind == "two-regular-coloured") {
    VerifyReport report;
    if (doc.colour_part < 0 || doc.parts.empty()) {
      report.add("missing tripartition fields");
      return report;
    }
    LinearHypergraph linear_host;
    try {
      Hypergraph copy = host;
      linear_host = LinearHypergraph::from(std::move(copy));
    } catch (const InputError& e) {
      report.add(std::string("host: ") + e.what());
      return report;
    }
    for (int ei : doc.edges)
      if (ei < 0 || ei >= host.edge_count())
        fail(ErrorCode::IndexOutOfRange, "edge index " + std::to_string(ei));
    // rebuild the coloured view restricted to transversal edges
    std::vector<int> transversal;
    std::vector<int> position(host.edge_count(), -1);
    for (int ei = 0; ei < host.edge_count(); ++ei) {
      const auto& e = host.edges[ei];
      if (static_cast<int>(doc.parts.size()) != host.n) {
        report.add("parts length differs from host vertex count");
        return report;
      }
      int a = doc.parts[e[0]], b = doc.parts[e[1]], c = doc.parts[e[2]];
      if (a != b && b != c && a != c) {
        position[ei] = static_cast<int>(transversal.size());
        transversal.push_back(ei);
      }
    }
    LinearHypergraph sub;
    static_cast<Hypergraph&>(sub) = sub_hypergraph(host, transversal);
    ColouredGraph view;
    try {
      view = to_coloured_graph(sub, doc.colour_part, doc.parts);
    } catch (const InputError& e) {
      report.add(e.what());
      return report;
    }
    TwoRegularColouredCertificate cert;
    for (int ei : doc.edges) {
      if (position[ei] < 0) {
        report.add("edge " + std::to_string(ei) + " is not transversal for the given parts");
        return report;
      }
      cert.edge_indices.push_back(position[ei]);
    }
    return verify_two_regular_coloured(view, cert);
  }
  if (doc.kind == "immersion") {
    ImmersionCertificate cert;
    cert.phi = doc.phi;
    cert.host_edges = doc.edges;
    cert.surface.triangles = doc.triangles;
    int max_vertex = -1;
    for (const auto& t : doc.triangles) max_vertex = std::max({max_vertex, t[0], t[1], t[2]});
    cert.surface.n = std::max(max_vertex + 1, static_cast<int>(doc.phi.size()));
    VerifyReport report = verify_immersion(host, cert);
    // stored per-component lines must match a fresh classification
    SurfaceComplex fresh;
    fresh.n = cert.surface.n;
    fresh.triangles = cert.surface.triangles;
    try {
      classify_components(fresh);
    } catch (const InputError& e) {
      report.add(e.what());
      return report;
    }
    if (doc.surfaces.size() != fresh.components.size()) {
      report.add("surface block count differs from component count");
      return report;
    }
    for (std::size_t i = 0; i < fresh.components.size(); ++i) {
      const auto& want = doc.surfaces[i];
      const auto& have = fresh.components[i];
      if (want.chi != have.chi || want.orientable != have.orientable ||
          want.triangle_count != static_cast<int>(have.triangles.size()) ||
          want.name != have.name)
        report.add("surface block " + std::to_string(i) + " does not match the complex");
    }
    return report;
  }
  VerifyReport report;
  report.add("unknown certificate kind '" + doc.kind + "'");
  return report;
}

}  // namespace hreg
