#include "hreg/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace hreg {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::MalformedEdge: return "MalformedEdge";
    case ErrorCode::NonUniformEdge: return "NonUniformEdge";
    case ErrorCode::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LinearityViolation: return "LinearityViolation";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::WrongUniformity: return "WrongUniformity";
    case ErrorCode::NotTripartite: return "NotTripartite";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::InsufficientDensity: return "InsufficientDensity";
    case ErrorCode::RetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::LinkNotTwoRegular: return "LinkNotTwoRegular";
    case ErrorCode::NotASurface: return "NotASurface";
    case ErrorCode::ProjectionInvalid: return "ProjectionInvalid";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
  }
  return "UnknownError";
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> d(n, 0);
  for (const auto& e : edges)
    for (int v : e) ++d[v];
  return d;
}

void validate_simple(Hypergraph& g) {
  if (g.k < 2) fail(ErrorCode::MalformedHeader, "uniformity k must be at least 2");
  if (g.n < 0) fail(ErrorCode::MalformedHeader, "negative vertex count");
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto& e = g.edges[i];
    if (static_cast<int>(e.size()) != g.k)
      fail(ErrorCode::NonUniformEdge,
           "edge " + std::to_string(i) + " has " + std::to_string(e.size()) +
               " vertices, expected " + std::to_string(g.k));
    std::sort(e.begin(), e.end());
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 0 || e[j] >= g.n)
        fail(ErrorCode::VertexOutOfRange,
             "edge " + std::to_string(i) + " contains vertex " + std::to_string(e[j]));
      if (j > 0 && e[j] == e[j - 1])
        fail(ErrorCode::DuplicateVertexInEdge,
             "edge " + std::to_string(i) + " repeats vertex " + std::to_string(e[j]));
    }
  }
  std::unordered_map<std::string, int> seen;
  seen.reserve(g.edges.size() * 2);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    std::string key;
    for (int v : g.edges[i]) {
      key.append(reinterpret_cast<const char*>(&v), sizeof v);
    }
    auto [it, fresh] = seen.emplace(std::move(key), static_cast<int>(i));
    if (!fresh)
      fail(ErrorCode::DuplicateEdge, "edges " + std::to_string(it->second) + " and " +
                                         std::to_string(i) + " are identical");
  }
}

std::optional<std::pair<int, int>> linearity_violation(const Hypergraph& g) {
  // Any two edges sharing >= 2 vertices share some vertex pair, so one hash
  // pass over all within-edge pairs is an exact check.
  std::unordered_map<std::uint64_t, int> pair_owner;
  pair_owner.reserve(g.edges.size() * 4);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        std::uint64_t key =
            (static_cast<std::uint64_t>(e[a]) << 32) | static_cast<std::uint32_t>(e[b]);
        auto [it, fresh] = pair_owner.emplace(key, static_cast<int>(i));
        if (!fresh) return std::make_pair(it->second, static_cast<int>(i));
      }
  }
  return std::nullopt;
}

LinearHypergraph LinearHypergraph::from(Hypergraph g) {
  validate_simple(g);
  if (auto bad = linearity_violation(g))
    fail(ErrorCode::LinearityViolation, "edges " + std::to_string(bad->first) + " and " +
                                            std::to_string(bad->second) +
                                            " share more than one vertex");
  LinearHypergraph out;
  static_cast<Hypergraph&>(out) = std::move(g);
  return out;
}

std::vector<std::vector<int>> incidence_lists(const Hypergraph& g) {
  std::vector<std::vector<int>> inc(g.n);
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (int v : g.edges[i]) inc[v].push_back(static_cast<int>(i));
  return inc;
}

Hypergraph sub_hypergraph(const Hypergraph& g, const std::vector<int>& edge_indices) {
  Hypergraph out;
  out.k = g.k;
  out.n = g.n;
  out.edges.reserve(edge_indices.size());
  for (int i : edge_indices) {
    if (i < 0 || i >= g.edge_count())
      fail(ErrorCode::IndexOutOfRange, "edge index " + std::to_string(i));
    out.edges.push_back(g.edges[i]);
  }
  return out;
}

namespace {

// Strips comments, returns significant lines.
std::vector<std::string> significant_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<long long> parse_ints(const std::string& line, ErrorCode on_error) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(on_error, "bad token '" + tok + "'");
    }
  }
  return out;
}

Hypergraph parse_raw(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) fail(ErrorCode::MalformedHeader, "empty input");
  auto header = parse_ints(lines[0], ErrorCode::MalformedHeader);
  if (header.size() != 3) fail(ErrorCode::MalformedHeader, "expected 'k n m'");
  long long k = header[0], n = header[1], m = header[2];
  if (k < 2 || n < 0 || m < 0 || n > (1 << 28) || m > (1 << 28))
    fail(ErrorCode::MalformedHeader, "implausible header values");
  if (static_cast<long long>(lines.size()) - 1 != m)
    fail(ErrorCode::MalformedEdge, "expected " + std::to_string(m) + " edge lines, found " +
                                       std::to_string(lines.size() - 1));
  Hypergraph g;
  g.k = static_cast<int>(k);
  g.n = static_cast<int>(n);
  g.edges.reserve(m);
  for (long long i = 1; i <= m; ++i) {
    auto vals = parse_ints(lines[i], ErrorCode::MalformedEdge);
    std::vector<int> edge(vals.begin(), vals.end());
    g.edges.push_back(std::move(edge));
  }
  validate_simple(g);
  return g;
}

}  // namespace

Hypergraph parse_simple_hypergraph(std::istream& in) { return parse_raw(in); }

LinearHypergraph parse_hypergraph(std::istream& in) {
  Hypergraph g = parse_raw(in);
  if (auto bad = linearity_violation(g))
    fail(ErrorCode::LinearityViolation, "edges " + std::to_string(bad->first) + " and " +
                                            std::to_string(bad->second) +
                                            " share more than one vertex");
  LinearHypergraph out;
  static_cast<Hypergraph&>(out) = std::move(g);
  return out;
}

namespace {
std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MalformedHeader, "cannot open '" + path + "'");
  return in;
}
}  // namespace

LinearHypergraph parse_hypergraph_file(const std::string& path) {
  auto in = open_or_fail(path);
  return parse_hypergraph(in);
}

Hypergraph parse_simple_hypergraph_file(const std::string& path) {
  auto in = open_or_fail(path);
  return parse_simple_hypergraph(in);
}

void serialize_hypergraph(const Hypergraph& g, std::ostream& out) {
  out << g.k << ' ' << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& e : g.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

std::string serialize_hypergraph(const Hypergraph& g) {
  std::ostringstream ss;
  serialize_hypergraph(g, ss);
  return ss.str();
}

Graph link_graph(const Hypergraph& g, int v) {
  if (g.k != 3) fail(ErrorCode::WrongUniformity, "link graph requires a 3-graph");
  if (v < 0 || v >= g.n) fail(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
  Graph link;
  link.n = g.n;
  for (const auto& e : g.edges) {
    if (e[0] == v)
      link.edges.emplace_back(e[1], e[2]);
    else if (e[1] == v)
      link.edges.emplace_back(e[0], e[2]);
    else if (e[2] == v)
      link.edges.emplace_back(e[0], e[1]);
  }
  return link;
}

PairHypergraph pair_hypergraph(const Hypergraph& g, bool drop_isolated) {
  if (g.k != 3) fail(ErrorCode::WrongUniformity, "pair hypergraph requires a 3-graph");

  auto pair_key = [](int u, int v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  };

  PairHypergraph out;
  std::unordered_map<std::uint64_t, int> id_of;
  if (drop_isolated) {
    // Ids in lexicographic order of the covered pairs.
    std::vector<std::pair<int, int>> covered;
    for (const auto& e : g.edges) {
      covered.emplace_back(e[0], e[1]);
      covered.emplace_back(e[0], e[2]);
      covered.emplace_back(e[1], e[2]);
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    out.pair_of = covered;
    for (std::size_t i = 0; i < covered.size(); ++i)
      id_of[pair_key(covered[i].first, covered[i].second)] = static_cast<int>(i);
  } else {
    out.pair_of.reserve(static_cast<std::size_t>(g.n) * (g.n - 1) / 2);
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v) {
        id_of[pair_key(u, v)] = static_cast<int>(out.pair_of.size());
        out.pair_of.emplace_back(u, v);
      }
  }

  Hypergraph h;
  h.k = 3;
  h.n = static_cast<int>(out.pair_of.size());
  h.edges.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    std::vector<int> pe = {id_of.at(pair_key(e[0], e[1])), id_of.at(pair_key(e[0], e[2])),
                           id_of.at(pair_key(e[1], e[2]))};
    std::sort(pe.begin(), pe.end());
    h.edges.push_back(std::move(pe));
  }
  // Two distinct triangles share at most one pair, so the lift is linear for
  // every simple input.
  if (auto bad = linearity_violation(h))
    throw std::logic_error("pair_hypergraph produced a non-linear lift");
  LinearHypergraph lh;
  static_cast<Hypergraph&>(lh) = std::move(h);
  out.h = std::move(lh);
  return out;
}

}  // namespace hreg
