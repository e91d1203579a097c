// Command line front end: generate, detect, regularize, decompose, verify.
// Reports are line-oriented "key value" text on stdout (or JSON with --json);
// wall-clock timings go to stderr only, so identical seeds give byte-identical
// output. Exit codes: 0 found/valid, 1 not found (exhaustive), 2 budget
// exhausted, 3 input error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hreg/certificate_io.hpp"
#include "hreg/constructions.hpp"
#include "hreg/coloured_graph.hpp"
#include "hreg/hypergraph.hpp"
#include "hreg/immersion.hpp"
#include "hreg/oracles.hpp"
#include "hreg/regsearch.hpp"
#include "hreg/regularize.hpp"
#include "hreg/rng.hpp"
#include "hreg/rregsearch.hpp"
#include "hreg/smallreg.hpp"

namespace {

using namespace hreg;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInputError = 3;

struct GlobalOpts {
  std::uint64_t seed = 0;
  long long budget = 0;  // 0 = command default
  double time_limit = 3600.0;
  int workers = 1;
  std::string out;
  bool json = false;
  bool timings = false;
};

struct Report {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
  void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }
  void add(const std::string& key, double value) {
    std::ostringstream ss;
    ss << value;
    add(key, ss.str());
  }

  void print(bool json) const {
    if (json) {
      nlohmann::ordered_json j;
      for (const auto& [k, v] : fields) j[k] = v;
      std::cout << j.dump(2) << '\n';
    } else {
      for (const auto& [k, v] : fields) std::cout << k << ' ' << v << '\n';
    }
  }
};

int status_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return kExitFound;
    case SearchStatus::NotFound: return kExitNotFound;
    case SearchStatus::BudgetExhausted: return kExitBudget;
  }
  return kExitInputError;
}

void emit_certificate(const CertificateDoc& doc, const GlobalOpts& opts, Report& report) {
  if (!opts.out.empty()) {
    std::ofstream out(opts.out);
    if (!out) fail(ErrorCode::MalformedHeader, "cannot write '" + opts.out + "'");
    write_certificate(doc, out);
    report.add("certificate", opts.out);
  } else {
    report.add("certificate", "-");
  }
}

void flush_certificate_stdout(const CertificateDoc& doc, const GlobalOpts& opts) {
  if (opts.out.empty()) std::cout << write_certificate(doc);
}

void emit_hypergraph(const Hypergraph& g, const GlobalOpts& opts, Report& report,
                     const std::vector<std::string>& extra_comments = {}) {
  std::ostringstream body;
  for (const auto& line : extra_comments) body << "# " << line << '\n';
  serialize_hypergraph(g, body);
  if (!opts.out.empty()) {
    std::ofstream out(opts.out);
    if (!out) fail(ErrorCode::MalformedHeader, "cannot write '" + opts.out + "'");
    out << body.str();
    report.add("output", opts.out);
  } else {
    report.add("output", "-");
  }
}

void flush_hypergraph_stdout(const Hypergraph& g, const GlobalOpts& opts,
                             const std::vector<std::string>& extra_comments = {}) {
  if (!opts.out.empty()) return;
  for (const auto& line : extra_comments) std::cout << "# " << line << '\n';
  serialize_hypergraph(g, std::cout);
}

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < xs.size(); ++i) ss << (i ? " " : "") << xs[i];
  return ss.str();
}

// -------------------------------------------------------------- subcommands

int cmd_gen_sts(const GlobalOpts& opts, int n) {
  Report report;
  report.add("command", "gen sts");
  report.add("seed", static_cast<long long>(opts.seed));
  auto g = gen_sts(n, opts.seed);
  report.add("n", g.n);
  report.add("m", g.edge_count());
  report.add("outcome", "found");
  emit_hypergraph(g, opts, report);
  report.print(opts.json);
  flush_hypergraph_stdout(g, opts);
  return kExitFound;
}

int cmd_gen_random(const GlobalOpts& opts, int n, int k, int m) {
  Report report;
  report.add("command", "gen random");
  report.add("seed", static_cast<long long>(opts.seed));
  auto g = gen_random_linear(n, k, m, opts.seed);
  report.add("n", g.n);
  report.add("target_m", m);
  report.add("m", g.edge_count());
  report.add("outcome", "found");
  emit_hypergraph(g, opts, report);
  report.print(opts.json);
  flush_hypergraph_stdout(g, opts);
  return kExitFound;
}

int cmd_gen_lower_bound(const GlobalOpts& opts, int n, int k, int r, double c0, int depth) {
  Report report;
  report.add("command", "gen lower-bound");
  report.add("seed", static_cast<long long>(opts.seed));
  ConstructionParams params;
  params.n = n;
  params.k = k;
  params.r = r;
  params.c0 = c0;
  params.seed = opts.seed;
  params.bad_check_depth = depth;
  auto [g, info] = gen_lower_bound(params);
  report.add("n", g.n);
  report.add("m", g.edge_count());
  report.add("trivial_branch", info.trivial_branch ? 1 : 0);
  if (!info.trivial_branch) {
    report.add("part_a", info.part_a_size);
    report.add("part_b", info.part_b_size);
    report.add("p", info.p);
    report.add("sampled_edges", info.sampled_edges);
    report.add("intersecting_pairs", info.intersecting_pairs);
    report.add("bad_subhypergraphs", info.bad_subhypergraphs);
    report.add("partial_scan", info.partial_scan ? 1 : 0);
  }
  report.add("outcome", "found");
  emit_hypergraph(g, opts, report);
  report.print(opts.json);
  flush_hypergraph_stdout(g, opts);
  return kExitFound;
}

int cmd_gen_pasch_free(const GlobalOpts& opts, int n) {
  Report report;
  report.add("command", "gen pasch-free");
  report.add("seed", static_cast<long long>(opts.seed));
  auto g = gen_pasch_free_probe(n, opts.seed);
  report.add("n", g.n);
  report.add("m", g.edge_count());
  report.add("outcome", "found");
  emit_hypergraph(g, opts, report);
  report.print(opts.json);
  flush_hypergraph_stdout(g, opts);
  return kExitFound;
}

int cmd_detect_even(const GlobalOpts& opts, const std::string& host_path) {
  Report report;
  report.add("command", "detect even");
  report.add("seed", static_cast<long long>(opts.seed));
  auto host = parse_simple_hypergraph_file(host_path);
  report.add("n", host.n);
  report.add("m", host.edge_count());
  auto cert = find_even_subhypergraph(host);
  if (!cert) {
    report.add("outcome", "not-found");
    report.print(opts.json);
    return kExitNotFound;
  }
  auto check = verify_even(host, *cert);
  if (!check.ok()) throw std::logic_error("even finder returned an invalid certificate");
  report.add("witness_edges", static_cast<long long>(cert->edge_indices.size()));
  report.add("outcome", "found");
  auto doc = make_certificate_doc(*cert);
  emit_certificate(doc, opts, report);
  report.print(opts.json);
  flush_certificate_stdout(doc, opts);
  return kExitFound;
}

int cmd_detect_regular(const GlobalOpts& opts, const std::string& host_path, int r,
                       int max_witness, long long samples) {
  Report report;
  report.add("command", "detect regular");
  report.add("seed", static_cast<long long>(opts.seed));
  auto host = parse_hypergraph_file(host_path);
  report.add("n", host.n);
  report.add("m", host.edge_count());
  report.add("r", r);

  // Fast probabilistic pipeline first, exact oracle as the decider.
  RRegParams pipeline;
  pipeline.seed = opts.seed;
  pipeline.matching_budget = samples;
  pipeline.workers = opts.workers;
  auto fast = find_r_regular_sunflower(host, r, pipeline);
  report.add("pipeline_matchings", fast.matchings_sampled);
  report.add("pipeline_partitions", fast.partitions_tried);
  report.add("pipeline_lemma_t", fast.lemma_t);

  RegularCertificate cert;
  SearchStatus status;
  long long oracle_nodes = 0;
  if (fast.status == SearchStatus::Found) {
    cert = *fast.cert;
    status = SearchStatus::Found;
    report.add("phase", "sunflower");
  } else {
    OracleBudget budget;
    if (opts.budget > 0) budget.max_nodes = opts.budget;
    if (max_witness > 0) budget.max_edges_in_witness = max_witness;
    budget.time_limit_seconds = opts.time_limit;
    auto exact = find_r_regular_exact(host, r, budget);
    oracle_nodes = exact.nodes_explored;
    status = exact.status;
    if (exact.status == SearchStatus::Found) cert = *exact.cert;
    report.add("phase", "oracle");
  }
  report.add("oracle_nodes", oracle_nodes);
  report.add("outcome", search_status_name(status));
  if (status != SearchStatus::Found) {
    report.print(opts.json);
    return status_exit(status);
  }
  if (!verify_regular(host, cert).ok())
    throw std::logic_error("regular detection produced an invalid certificate");
  report.add("witness_edges", static_cast<long long>(cert.edge_indices.size()));
  auto doc = make_certificate_doc(cert);
  emit_certificate(doc, opts, report);
  report.print(opts.json);
  flush_certificate_stdout(doc, opts);
  return kExitFound;
}

int cmd_detect_two_regular(const GlobalOpts& opts, const std::string& host_path,
                           const std::string& strategy_name_arg, int h, int t, long long q,
                           double alpha, int partition_attempts,
                           const std::string& coloured_cert_path) {
  Report report;
  report.add("command", "detect two-regular");
  report.add("seed", static_cast<long long>(opts.seed));
  auto host = parse_hypergraph_file(host_path);
  report.add("n", host.n);
  report.add("m", host.edge_count());
  if (host.edge_count() == 0) {
    report.add("outcome", "not-found");
    report.print(opts.json);
    return kExitNotFound;
  }

  SearchParams params;
  params.h = h;
  params.t = t;
  params.q = static_cast<std::uint64_t>(std::max<long long>(q, 0));
  params.alpha = alpha;
  params.sample_budget = opts.budget > 0 ? opts.budget : 1'000'000;
  params.workers = opts.workers;
  params.seed = opts.seed;
  std::optional<Strategy> forced;
  if (strategy_name_arg == "cycles")
    forced = Strategy::Cycles;
  else if (strategy_name_arg == "paths")
    forced = Strategy::Paths;
  else if (strategy_name_arg == "matchings")
    forced = Strategy::Matchings;

  auto result = detect_two_regular(host, forced, params, partition_attempts);
  report.add("partition_attempts", result.partitions_tried);
  report.add("samples", result.samples);
  report.add("outcome", search_status_name(result.status));
  if (result.status != SearchStatus::Found) {
    report.print(opts.json);
    return status_exit(result.status);
  }
  report.add("strategy", strategy_name(result.strategy_used));
  report.add("t", result.t_used);
  report.add("witness_edges", static_cast<long long>(result.cert->edge_indices.size()));
  if (!coloured_cert_path.empty()) {
    // the same witness relative to the tripartition, as a coloured document
    CertificateDoc coloured;
    coloured.kind = "two-regular-coloured";
    coloured.colour_part = result.colour_part;
    coloured.parts = result.part_of;
    coloured.edges = result.cert->edge_indices;
    std::ofstream out(coloured_cert_path);
    if (!out) fail(ErrorCode::MalformedHeader, "cannot write '" + coloured_cert_path + "'");
    write_certificate(coloured, out);
    report.add("coloured_certificate", coloured_cert_path);
  }
  auto doc = make_certificate_doc(*result.cert);
  emit_certificate(doc, opts, report);
  report.print(opts.json);
  flush_certificate_stdout(doc, opts);
  return kExitFound;
}

int cmd_detect_small_two_regular(const GlobalOpts& opts, const std::string& host_path, int ell,
                                 int partition_attempts) {
  Report report;
  report.add("command", "detect small-two-regular");
  report.add("seed", static_cast<long long>(opts.seed));
  auto host = parse_hypergraph_file(host_path);
  report.add("n", host.n);
  report.add("m", host.edge_count());
  report.add("l", ell);
  if (host.edge_count() == 0) {
    report.add("outcome", "not-found");
    report.print(opts.json);
    return kExitNotFound;
  }

  const long long budget = opts.budget > 0 ? opts.budget : 1'000'000;
  auto result =
      detect_small_two_regular(host, ell, budget, partition_attempts, opts.seed, opts.workers);
  report.add("partition_attempts", result.partitions_tried);
  report.add("dfs_nodes", result.nodes);
  report.add("outcome", search_status_name(result.status));
  if (result.status != SearchStatus::Found) {
    report.print(opts.json);
    return status_exit(result.status);
  }
  report.add("witness_edges", static_cast<long long>(result.cert->edge_indices.size()));
  auto doc = make_certificate_doc(*result.cert);
  emit_certificate(doc, opts, report);
  report.print(opts.json);
  flush_certificate_stdout(doc, opts);
  return kExitFound;
}

int cmd_regularize(const GlobalOpts& opts, const std::string& host_path, bool equal_parts,
                   double d) {
  Report report;
  report.add("command", equal_parts ? "regularize equal-parts" : "regularize kpartite");
  report.add("seed", static_cast<long long>(opts.seed));
  auto host = parse_hypergraph_file(host_path);
  report.add("n", host.n);
  report.add("m", host.edge_count());
  RegularizeParams params;
  params.seed = opts.seed;
  BalancedHypergraph balanced;
  if (equal_parts) {
    if (d <= 0) d = static_cast<double>(host.edge_count()) / std::max(host.n, 1);
    report.add("d", d);
    balanced = balanced_equal_parts(host, d, params);
  } else {
    balanced = balanced_kpartite(host, params);
  }
  report.add("lambda", balanced.lambda);
  report.add("mu", balanced.mu);
  report.add("edges_kept", balanced.host.edge_count());
  for (std::size_t p = 0; p < balanced.parts.size(); ++p)
    report.add("part_" + std::to_string(p) + "_size",
               static_cast<long long>(balanced.parts[p].size()));
  report.add("source_edges", join_ints(balanced.source_edge_index));
  report.add("outcome", "found");
  std::vector<std::string> comments;
  for (std::size_t p = 0; p < balanced.parts.size(); ++p)
    comments.push_back("part " + std::to_string(p) + ": " + join_ints(balanced.parts[p]));
  emit_hypergraph(balanced.host, opts, report, comments);
  report.print(opts.json);
  flush_hypergraph_stdout(balanced.host, opts, comments);
  return kExitFound;
}

int cmd_immersion_lift(const GlobalOpts& opts, const std::string& host_path,
                       const std::string& map_path, bool keep_isolated) {
  Report report;
  report.add("command", "immersion lift");
  report.add("seed", static_cast<long long>(opts.seed));
  auto host = parse_simple_hypergraph_file(host_path);
  auto lifted = pair_hypergraph(host, !keep_isolated);
  report.add("host_n", host.n);
  report.add("host_m", host.edge_count());
  report.add("pair_vertices", lifted.h.n);
  report.add("m", lifted.h.edge_count());
  if (!map_path.empty()) {
    std::ofstream map_out(map_path);
    if (!map_out) fail(ErrorCode::MalformedHeader, "cannot write '" + map_path + "'");
    map_out << "pair_map\n";
    for (std::size_t i = 0; i < lifted.pair_of.size(); ++i)
      map_out << i << ' ' << lifted.pair_of[i].first << ' ' << lifted.pair_of[i].second << '\n';
    map_out << "end\n";
    report.add("pair_map", map_path);
  }
  report.add("outcome", "found");
  emit_hypergraph(lifted.h, opts, report);
  report.print(opts.json);
  flush_hypergraph_stdout(lifted.h, opts);
  return kExitFound;
}

void add_surface_fields(Report& report, const SurfaceComplex& complex) {
  report.add("components", static_cast<long long>(complex.components.size()));
  for (std::size_t i = 0; i < complex.components.size(); ++i) {
    const auto& c = complex.components[i];
    std::ostringstream ss;
    ss << "chi " << c.chi << " orientable " << (c.orientable ? 1 : 0) << " triangles "
       << c.triangles.size() << " name " << c.name;
    report.add("surface_" + std::to_string(i), ss.str());
  }
}

int cmd_immersion_decompose(const GlobalOpts& opts, const std::string& host_path) {
  Report report;
  report.add("command", "immersion decompose");
  report.add("seed", static_cast<long long>(opts.seed));
  auto host = parse_simple_hypergraph_file(host_path);
  auto decomposition = clone_decompose(host);
  ImmersionCertificate cert;
  cert.surface = std::move(decomposition.complex);
  cert.phi = std::move(decomposition.phi);
  cert.host_edges.resize(host.edge_count());
  std::iota(cert.host_edges.begin(), cert.host_edges.end(), 0);
  if (!verify_immersion(host, cert).ok())
    throw std::logic_error("decomposition produced an invalid certificate");
  report.add("clone_steps", decomposition.clone_steps);
  report.add("clones_added", decomposition.clones_added);
  add_surface_fields(report, cert.surface);
  report.add("outcome", "found");
  auto doc = make_certificate_doc(cert);
  emit_certificate(doc, opts, report);
  report.print(opts.json);
  flush_certificate_stdout(doc, opts);
  return kExitFound;
}

int cmd_immersion_find(const GlobalOpts& opts, const std::string& host_path) {
  Report report;
  report.add("command", "immersion find");
  report.add("seed", static_cast<long long>(opts.seed));
  auto host = parse_simple_hypergraph_file(host_path);
  report.add("n", host.n);
  report.add("m", host.edge_count());
  OracleBudget budget;
  if (opts.budget > 0) budget.max_nodes = opts.budget;
  budget.time_limit_seconds = opts.time_limit;
  auto result = find_zero_immersion(host, budget, opts.seed);
  report.add("oracle_nodes", result.oracle_nodes);
  report.add("collision_samples", result.collision_samples);
  report.add("outcome", search_status_name(result.status));
  if (result.status != SearchStatus::Found) {
    report.print(opts.json);
    return status_exit(result.status);
  }
  add_surface_fields(report, result.cert->surface);
  auto doc = make_certificate_doc(*result.cert);
  emit_certificate(doc, opts, report);
  report.print(opts.json);
  flush_certificate_stdout(doc, opts);
  return kExitFound;
}

int cmd_verify(const GlobalOpts& opts, const std::string& cert_path,
               const std::string& host_path) {
  Report report;
  report.add("command", "verify");
  auto doc = parse_certificate_file(cert_path);
  auto host = parse_simple_hypergraph_file(host_path);
  auto result = verify_certificate(doc, host);
  report.add("kind", doc.kind);
  report.add("violations", static_cast<long long>(result.violations.size()));
  for (std::size_t i = 0; i < result.violations.size(); ++i)
    report.add("violation_" + std::to_string(i), result.violations[i]);
  report.add("outcome", result.ok() ? "valid" : "invalid");
  report.print(opts.json);
  return result.ok() ? kExitFound : kExitInputError;
}

int cmd_oracle_regular(const GlobalOpts& opts, const std::string& host_path, int r,
                       int max_witness) {
  Report report;
  report.add("command", "oracle regular");
  report.add("seed", static_cast<long long>(opts.seed));
  auto host = parse_simple_hypergraph_file(host_path);
  OracleBudget budget;
  if (opts.budget > 0) budget.max_nodes = opts.budget;
  if (max_witness > 0) budget.max_edges_in_witness = max_witness;
  budget.time_limit_seconds = opts.time_limit;
  auto result = find_r_regular_exact(host, r, budget);
  report.add("nodes", result.nodes_explored);
  report.add("outcome", search_status_name(result.status));
  if (result.status != SearchStatus::Found) {
    report.print(opts.json);
    return status_exit(result.status);
  }
  report.add("witness_edges", static_cast<long long>(result.cert->edge_indices.size()));
  auto doc = make_certificate_doc(*result.cert);
  emit_certificate(doc, opts, report);
  report.print(opts.json);
  flush_certificate_stdout(doc, opts);
  return kExitFound;
}

int cmd_oracle_even(const GlobalOpts& opts, const std::string& host_path) {
  return cmd_detect_even(opts, host_path);
}

int cmd_oracle_homcount(const GlobalOpts& opts, const std::string& graph_path, int h) {
  Report report;
  report.add("command", "oracle homcount");
  auto host = parse_simple_hypergraph_file(graph_path);
  if (host.k != 2) fail(ErrorCode::WrongUniformity, "hom counting expects a graph (k = 2) file");
  Graph g;
  g.n = host.n;
  for (const auto& e : host.edges) g.edges.emplace_back(e[0], e[1]);
  auto count = hom_cycle_count(g, h);
  report.add("h", h);
  report.add("count", count.str());
  report.add("outcome", "found");
  report.print(opts.json);
  return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular substructures in linear uniform hypergraphs"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_option("--seed", opts.seed, "root random seed")->capture_default_str();
  app.add_option("--budget", opts.budget, "search budget (nodes or samples; 0 = default)");
  app.add_option("--time-limit", opts.time_limit, "oracle time limit in seconds");
  app.add_option("--workers", opts.workers, "parallel sampling workers (default 1, deterministic)");
  app.add_option("--out", opts.out, "output file for certificates / generated hypergraphs");
  app.add_flag("--json", opts.json, "machine-readable report");
  app.add_flag("--timings", opts.timings, "print wall-clock timing to stderr");

  // gen
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  int gen_n = 9, gen_k = 3, gen_m = 0, gen_r = 3, gen_depth = 12;
  double gen_c0 = 0.5;
  auto* gen_sts_cmd = gen->add_subcommand("sts", "Steiner triple system");
  gen_sts_cmd->add_option("--n", gen_n, "order, 1 or 3 mod 6")->required();
  auto* gen_random_cmd = gen->add_subcommand("random", "random linear k-graph");
  gen_random_cmd->add_option("--n", gen_n)->required();
  gen_random_cmd->add_option("--k", gen_k)->capture_default_str();
  gen_random_cmd->add_option("--m", gen_m, "target edge count")->required();
  auto* gen_lb_cmd = gen->add_subcommand("lower-bound", "r-regular-free construction");
  gen_lb_cmd->add_option("--n", gen_n)->required();
  gen_lb_cmd->add_option("--k", gen_k)->capture_default_str();
  gen_lb_cmd->add_option("--r", gen_r)->capture_default_str();
  gen_lb_cmd->add_option("--c0", gen_c0, "size constant of part A")->capture_default_str();
  gen_lb_cmd->add_option("--bad-check-depth", gen_depth)->capture_default_str();
  auto* gen_pf_cmd = gen->add_subcommand("pasch-free", "anti-Pasch negative controls");
  gen_pf_cmd->add_option("--n", gen_n)->required();

  // detect
  auto* detect = app.add_subcommand("detect", "find substructures");
  detect->require_subcommand(1);
  std::string host_path, strategy = "auto";
  int det_r = 2, det_h = 2, det_t = 0, det_ell = 2, det_attempts = 120, det_max_witness = 0;
  long long det_q = 0, det_samples = 100'000;
  double det_alpha = 2.0;
  auto* det_even = detect->add_subcommand("even", "even subhypergraph (GF(2))");
  det_even->add_option("host", host_path)->required();
  auto* det_reg = detect->add_subcommand("regular", "r-regular subhypergraph");
  det_reg->add_option("host", host_path)->required();
  det_reg->add_option("--r", det_r)->capture_default_str();
  det_reg->add_option("--max-witness", det_max_witness, "cap witness size");
  det_reg->add_option("--samples", det_samples, "sunflower pipeline matching budget");
  auto* det_two = detect->add_subcommand("two-regular", "2-regular via collision search");
  det_two->set_help_flag("--help", "print help");
  det_two->add_option("host", host_path)->required();
  det_two->add_option("--strategy", strategy, "auto|cycles|paths|matchings")
      ->check(CLI::IsMember({"auto", "cycles", "paths", "matchings"}))
      ->capture_default_str();
  det_two->add_option("--h", det_h)->capture_default_str();
  det_two->add_option("--t", det_t, "sequence length (0 = derive)");
  det_two->add_option("--q", det_q, "path extension cap (0 = derive)");
  det_two->add_option("--alpha", det_alpha)->capture_default_str();
  det_two->add_option("--partition-attempts", det_attempts)->capture_default_str();
  std::string coloured_cert_path;
  det_two->add_option("--coloured-cert", coloured_cert_path,
                      "also write the witness as a two-regular-coloured document");
  auto* det_small = detect->add_subcommand("small-two-regular", "4l-edge witness via pair product");
  det_small->add_option("host", host_path)->required();
  det_small->add_option("--l", det_ell, "half cycle length, witness has 4l edges")
      ->capture_default_str();
  det_small->add_option("--partition-attempts", det_attempts)->capture_default_str();

  // regularize
  auto* reg = app.add_subcommand("regularize", "balanced partite subhypergraphs");
  reg->require_subcommand(1);
  double reg_d = 0;
  auto* reg_kp = reg->add_subcommand("kpartite", "2 lambda^k balanced k-partite");
  reg_kp->add_option("host", host_path)->required();
  auto* reg_eq = reg->add_subcommand("equal-parts", "96 lambda^6 balanced, |X| <= |Y| = |Z|");
  reg_eq->add_option("host", host_path)->required();
  reg_eq->add_option("--d", reg_d, "density parameter (default e/n)");

  // immersion
  auto* imm = app.add_subcommand("immersion", "pair lift, cloning, surfaces");
  imm->require_subcommand(1);
  std::string map_path;
  bool keep_isolated = false;
  auto* imm_lift = imm->add_subcommand("lift", "pair hypergraph of a 3-graph");
  imm_lift->add_option("host", host_path)->required();
  imm_lift->add_option("--map", map_path, "write the pair-vertex map here");
  imm_lift->add_flag("--keep-isolated", keep_isolated, "keep uncovered pairs as vertices");
  auto* imm_dec = imm->add_subcommand("decompose", "clone-decompose a 2-regular-link 3-graph");
  imm_dec->add_option("host", host_path)->required();
  auto* imm_find = imm->add_subcommand("find", "find a 0-immersion of a closed surface");
  imm_find->add_option("host", host_path)->required();

  // verify
  std::string cert_path;
  auto* ver = app.add_subcommand("verify", "check a certificate against a host");
  ver->add_option("certificate", cert_path)->required();
  ver->add_option("host", host_path)->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact baselines");
  oracle->require_subcommand(1);
  int orc_r = 2, orc_h = 2, orc_max_witness = 0;
  auto* orc_reg = oracle->add_subcommand("regular", "exhaustive backtracking");
  orc_reg->add_option("host", host_path)->required();
  orc_reg->add_option("--r", orc_r)->capture_default_str();
  orc_reg->add_option("--max-witness", orc_max_witness, "cap witness size");
  auto* orc_even = oracle->add_subcommand("even", "GF(2) nullspace");
  orc_even->add_option("host", host_path)->required();
  auto* orc_hom = oracle->add_subcommand("homcount", "hom(C_2h, G) for a graph file");
  orc_hom->set_help_flag("--help", "print help");
  orc_hom->add_option("graph", host_path)->required();
  orc_hom->add_option("--h", orc_h)->capture_default_str();

  // global flags are accepted anywhere on the command line
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  auto started = std::chrono::steady_clock::now();
  int code = kExitInputError;
  try {
    if (gen_sts_cmd->parsed())
      code = cmd_gen_sts(opts, gen_n);
    else if (gen_random_cmd->parsed())
      code = cmd_gen_random(opts, gen_n, gen_k, gen_m);
    else if (gen_lb_cmd->parsed())
      code = cmd_gen_lower_bound(opts, gen_n, gen_k, gen_r, gen_c0, gen_depth);
    else if (gen_pf_cmd->parsed())
      code = cmd_gen_pasch_free(opts, gen_n);
    else if (det_even->parsed())
      code = cmd_detect_even(opts, host_path);
    else if (det_reg->parsed())
      code = cmd_detect_regular(opts, host_path, det_r, det_max_witness, det_samples);
    else if (det_two->parsed())
      code = cmd_detect_two_regular(opts, host_path, strategy, det_h, det_t, det_q, det_alpha,
                                    det_attempts, coloured_cert_path);
    else if (det_small->parsed())
      code = cmd_detect_small_two_regular(opts, host_path, det_ell, det_attempts);
    else if (reg_kp->parsed())
      code = cmd_regularize(opts, host_path, false, 0);
    else if (reg_eq->parsed())
      code = cmd_regularize(opts, host_path, true, reg_d);
    else if (imm_lift->parsed())
      code = cmd_immersion_lift(opts, host_path, map_path, keep_isolated);
    else if (imm_dec->parsed())
      code = cmd_immersion_decompose(opts, host_path);
    else if (imm_find->parsed())
      code = cmd_immersion_find(opts, host_path);
    else if (ver->parsed())
      code = cmd_verify(opts, cert_path, host_path);
    else if (orc_reg->parsed())
      code = cmd_oracle_regular(opts, host_path, orc_r, orc_max_witness);
    else if (orc_even->parsed())
      code = cmd_oracle_even(opts, host_path);
    else if (orc_hom->parsed())
      code = cmd_oracle_homcount(opts, host_path, orc_h);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (opts.timings) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "elapsed_ms " << elapsed << '\n';
  }
  return code;
}
