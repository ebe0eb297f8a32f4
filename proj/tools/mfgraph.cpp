// mfgraph: the single experiment binary.  Subcommands: generate,
// oracle-stats, test-ham, build-spanner, property-test, run-suite,
// scaling-probe.  Global flags: --seed, --out, --format {jsonl|csv}, and
// --scaled-mode-ack, which must accompany any walk-oracle or spanner
// parameters that deviate from the formula values.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "minorfree/generators.hpp"
#include "minorfree/graph.hpp"
#include "minorfree/hamiltonicity.hpp"
#include "minorfree/oracles.hpp"
#include "minorfree/pathcover.hpp"
#include "minorfree/property.hpp"
#include "minorfree/report.hpp"
#include "minorfree/rng.hpp"
#include "minorfree/spanning.hpp"
#include "minorfree/suite.hpp"

using namespace minorfree;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string out;  // empty: stdout
  std::string format = "jsonl";
  bool scaled_ack = false;
};

// Oracle knobs shared by the subcommands that take --oracle.
struct OracleFlags {
  std::string mode = "ball";
  double epsilon_prime = 0.0;  // 0: derived from the subcommand's parameter
  std::uint32_t radius = 0;
  std::uint64_t cap = 0;
  std::uint64_t part_size = 12;
  std::uint64_t ell = 0;
  std::uint64_t walks_per_length = 0;
  int length_exp = 0;

  OracleOptions options(std::uint64_t seed, double fallback_eps) const {
    OracleOptions o;
    o.mode = mode;
    o.epsilon_prime = epsilon_prime > 0.0 ? epsilon_prime : fallback_eps;
    o.radius = radius;
    o.cap = cap;
    o.part_size = part_size;
    o.ell = ell;
    o.walks_per_length = walks_per_length;
    o.max_walk_length_exp = length_exp;
    o.seed = seed;
    return o;
  }
};

void add_oracle_flags(CLI::App* sub, OracleFlags& f) {
  sub->add_option("--oracle", f.mode, "Covering oracle: ball|exhaustive|walk")
      ->capture_default_str();
  sub->add_option("--oracle-epsilon", f.epsilon_prime,
                  "Oracle partition parameter (0 = derived)");
  sub->add_option("--radius", f.radius, "Ball oracle radius (0 = derived)");
  sub->add_option("--cap", f.cap, "Cover size cap (0 = default)");
  sub->add_option("--part-size", f.part_size,
                  "Exhaustive-partition part-size bound")
      ->capture_default_str();
  sub->add_option("--ell", f.ell, "Walk oracle base length (0 = theory scale)");
  sub->add_option("--walks-per-length", f.walks_per_length,
                  "Walk oracle walks per length (0 = theory scale)");
  sub->add_option("--length-exp", f.length_exp,
                  "Walk oracle length exponent (0 = theory scale)");
}

void require_ack(bool scaled, const GlobalOpts& g, const std::string& what) {
  if (scaled && !g.scaled_ack) {
    throw std::runtime_error(
        what + " deviates from the formula parameters; pass --scaled-mode-ack "
               "to acknowledge running in scaled mode");
  }
}

void emit_report(ExperimentReport& report, const GlobalOpts& g,
                 double wall_ms) {
  // Wall time is informational and aggregate-only: per-run records must be
  // byte-identical under replay.
  report.aggregate["wall_ms_total"] = std::lround(wall_ms);
  if (g.out.empty()) {
    report.write(std::cout, g.format);
    return;
  }
  std::ofstream os(g.out);
  if (!os) throw std::runtime_error("cannot open output file: " + g.out);
  report.write(os, g.format);
}

nlohmann::json witness_json(const HamWitness& w) {
  return nlohmann::json{
      {"kind", witness_kind_name(w.kind)},
      {"sample_vertex", w.sample_vertex},
      {"cover", w.cover},
      {"subset", w.subset},
      {"path_cover", w.path_cover},
      {"cut_size", w.cut_size},
  };
}

nlohmann::json edge_json(const QueryGraph& g, EdgeRef e) {
  return nlohmann::json{
      {"u", e.u}, {"v", e.v}, {"weight_micro", g.weight_of(e)}};
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
  std::string family = "grid";
  std::uint64_t n = 0;
  bool weighted = false;
  std::uint32_t wmax = 1;
  std::uint32_t star_size = 4;
  std::uint32_t path_len = 4;
  double chord_fraction = 0.25;
  std::string graph_out;
};

ExperimentReport run_generate(const GenerateOpts& o, const GlobalOpts& g) {
  const auto fam = family_from_name(o.family);
  if (!fam) throw std::runtime_error("unknown family: " + o.family);
  GenSpec spec;
  spec.family = *fam;
  spec.n = static_cast<VertexId>(o.n);
  spec.seed = g.seed;
  spec.weighted = o.weighted;
  spec.wmax = o.wmax;
  spec.star_size = o.star_size;
  spec.path_len = o.path_len;
  spec.chord_fraction = o.chord_fraction;
  const GeneratedInstance inst = generate(spec);

  save_graph(o.graph_out, inst.graph);
  nlohmann::json sidecar;
  sidecar["truth"] = ground_truth_json(inst.truth);
  sidecar["generator"] = nlohmann::json{
      {"family", o.family},       {"n", o.n},
      {"seed", g.seed},           {"weighted", o.weighted},
      {"wmax", o.wmax},           {"star_size", o.star_size},
      {"path_len", o.path_len},   {"chord_fraction", o.chord_fraction},
  };
  const std::string sidecar_path = o.graph_out + ".truth.json";
  std::ofstream side(sidecar_path);
  if (!side) {
    throw std::runtime_error("cannot open sidecar file: " + sidecar_path);
  }
  side << sidecar.dump(2) << "\n";

  ExperimentReport report;
  report.subcommand = "generate";
  report.parameters = sidecar["generator"];
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [deg, count] : degree_histogram(inst.graph)) {
    hist[std::to_string(deg)] = count;
  }
  report.add_record(nlohmann::json{
      {"run", 0},
      {"n", inst.graph.n()},
      {"m", inst.graph.m()},
      {"max_degree", inst.graph.max_degree()},
      {"degree_histogram", hist},
      {"graph_file", o.graph_out},
      {"truth_file", sidecar_path},
      {"truth", sidecar["truth"]},
  });
  return report;
}

// ------------------------------------------------------------ oracle-stats

struct OracleStatsOpts {
  std::string graph;
  double epsilon = 0.5;
  std::uint64_t queries = 100;
  OracleFlags oracle;
};

ExperimentReport run_oracle_stats(const OracleStatsOpts& o,
                                  const GlobalOpts& g) {
  const QueryGraph graph = load_graph(o.graph);
  OracleOptions oo = o.oracle.options(g.seed, /*fallback_eps=*/o.epsilon);
  oo.mode = o.oracle.mode;
  require_ack(oo.scaled(), g, "walk oracle configuration");
  if (oo.mode == "walk" && !oo.scaled()) {
    std::cerr << "warning: theory-scale walk parameters are astronomically "
                 "large; this is unlikely to terminate at desk scale\n";
  }
  const auto oracle = make_cover_oracle(graph, oo);

  ExperimentReport report;
  report.subcommand = "oracle-stats";
  report.parameters = nlohmann::json{
      {"graph", o.graph},   {"mode", oo.mode},
      {"epsilon", o.epsilon}, {"queries", o.queries},
      {"seed", g.seed},     {"size_bound", oracle->size_bound()},
  };

  RngStream stream = make_stream(g.seed, "oracle-stats");
  double cover_sum = 0.0;
  std::uint64_t max_queries = 0;
  std::uint64_t cap_events = 0;
  for (std::uint64_t i = 0; i < o.queries; ++i) {
    const VertexId v = static_cast<VertexId>(stream.below(graph.n()));
    QueryCounter counter;
    const CoverResult res = oracle->cover(v, &counter);
    cover_sum += static_cast<double>(res.vertices.size());
    max_queries = std::max(max_queries, counter.total());
    if (res.cap_violation) ++cap_events;
    report.add_record(nlohmann::json{
        {"run", i},
        {"vertex", v},
        {"cover_size", res.vertices.size()},
        {"cap_violation", res.cap_violation},
        {"queries", counter_json(counter)},
    });
  }
  report.aggregate = nlohmann::json{
      {"n", graph.n()},
      {"m", graph.m()},
      {"mean_cover_size",
       o.queries > 0 ? cover_sum / static_cast<double>(o.queries) : 0.0},
      {"max_queries", max_queries},
      {"cap_violations", cap_events},
  };
  if (const auto* ex = dynamic_cast<const ExhaustiveCoverOracle*>(oracle.get())) {
    report.aggregate["partition_cut_edges"] = ex->handle().cut_edge_count;
    report.aggregate["partition_parts"] = ex->handle().parts.size();
  }
  return report;
}

// ---------------------------------------------------------------- test-ham

struct TestHamOpts {
  std::string graph;
  std::string mode = "one-sided";
  double epsilon = 0.25;
  std::uint64_t runs = 1;
  OracleFlags oracle;
};

ExperimentReport run_test_ham(const TestHamOpts& o, const GlobalOpts& g) {
  const QueryGraph graph = load_graph(o.graph);
  ExperimentReport report;
  report.subcommand = "test-ham";
  report.parameters = nlohmann::json{
      {"graph", o.graph}, {"mode", o.mode},   {"epsilon", o.epsilon},
      {"runs", o.runs},   {"seed", g.seed},   {"oracle", o.oracle.mode},
  };

  if (o.mode == "exact") {
    const std::size_t d = ham_distance(graph);
    report.add_record(nlohmann::json{
        {"run", 0}, {"ham_distance", d}, {"is_hamiltonian", d == 0}});
    report.aggregate = nlohmann::json{{"ham_distance", d}};
    return report;
  }

  std::unique_ptr<CoveringOracle> oracle;
  if (o.mode == "one-sided") {
    OracleOptions oo = o.oracle.options(g.seed, o.epsilon / 6.0);
    // Desk-scale ball defaults that keep covers inside the subset-sweep
    // budget.
    if (oo.mode == "ball") {
      if (oo.radius == 0) oo.radius = 2;
      if (oo.cap == 0) oo.cap = 13;
    }
    require_ack(oo.scaled(), g, "walk oracle configuration");
    oracle = make_cover_oracle(graph, oo);
  } else if (o.mode != "tolerant") {
    throw std::runtime_error("unknown test-ham mode: " + o.mode);
  }

  std::size_t accepted = 0;
  for (std::uint64_t i = 0; i < o.runs; ++i) {
    const std::uint64_t run_seed = derive_key(g.seed, "run", i);
    nlohmann::json rec{{"run", i}};
    if (o.mode == "one-sided") {
      const OneSidedResult res =
          test_ham_one_sided(graph, o.epsilon, *oracle, run_seed);
      rec["accepted"] = res.accepted;
      rec["samples"] = res.samples;
      rec["queries"] = counter_json(res.queries);
      if (res.witness.has_value()) rec["witness"] = witness_json(*res.witness);
      if (res.accepted) ++accepted;
    } else {
      EstimatorConfig ec;
      ec.seed = run_seed;
      ec.part_size = o.oracle.part_size;
      const TolerantResult res = tolerant_test_ham(graph, o.epsilon, ec);
      rec["accepted"] = res.accepted;
      rec["estimate"] = res.estimate.value;
      rec["threshold"] = res.threshold;
      if (res.accepted) ++accepted;
    }
    report.add_record(std::move(rec));
  }
  report.aggregate = nlohmann::json{
      {"accept_frequency",
       o.runs > 0 ? static_cast<double>(accepted) / static_cast<double>(o.runs)
                  : 0.0}};
  return report;
}

// ------------------------------------------------------------ build-spanner

struct BuildSpannerOpts {
  std::string graph;
  std::string mode = "global";
  double epsilon = 0.5;
  std::uint32_t wmax = 1;
  std::uint64_t heavy_threshold = 0;
  std::uint64_t part_bound = 0;
  std::uint64_t sample_size = 0;
  OracleFlags oracle;
};

ExperimentReport run_build_spanner(const BuildSpannerOpts& o,
                                   const GlobalOpts& g) {
  const QueryGraph graph = load_graph(o.graph);
  SpanConfig cfg;
  cfg.epsilon = o.epsilon;
  cfg.W = o.wmax;
  cfg.seed = g.seed;
  cfg.heavy_threshold_override = o.heavy_threshold;
  cfg.part_bound_override = o.part_bound;
  cfg.sample_size_override = o.sample_size;
  require_ack(cfg.scaled(), g, "spanner configuration");

  const MsfResult opt = kruskal_msf(graph);
  ExperimentReport report;
  report.subcommand = "build-spanner";
  report.parameters = nlohmann::json{
      {"graph", o.graph},
      {"mode", o.mode},
      {"epsilon", o.epsilon},
      {"wmax", o.wmax},
      {"seed", g.seed},
      {"heavy_threshold", cfg.heavy_threshold()},
      {"part_bound", cfg.part_bound()},
      {"scaled", cfg.scaled()},
  };
  const double n = static_cast<double>(graph.n());
  const double edge_bound =
      (n - 1.0) + o.epsilon * n / static_cast<double>(o.wmax);

  if (o.mode == "global") {
    const GlobalBuild build = build_global(graph, cfg);
    for (const EdgeRef& e : build.edges) {
      report.add_record(edge_json(graph, e));
    }
    report.aggregate = nlohmann::json{
        {"edge_count", build.edges.size()},
        {"total_weight_micro", build.total_weight},
        {"opt_weight_micro", opt.total_weight},
        {"weight_ratio",
         opt.total_weight > 0 ? static_cast<double>(build.total_weight) /
                                    static_cast<double>(opt.total_weight)
                              : 0.0},
        {"edge_bound", edge_bound},
        {"edge_bound_ok",
         static_cast<double>(build.edges.size()) <= edge_bound},
        {"heavy_edge_count", build.heavy_edge_count},
        {"partition_cut_count", build.partition_cut_count},
        {"forest_edge_count", build.forest_edges.size()},
        {"sampled_edge_count", build.sampled_edges.size()},
    };
    return report;
  }

  if (o.mode != "local-bounded" && o.mode != "local-unbounded") {
    throw std::runtime_error("unknown build-spanner mode: " + o.mode);
  }

  std::unique_ptr<CoveringOracle> oracle;
  std::unique_ptr<SpannerContext> ctx;
  if (o.mode == "local-bounded") {
    OracleOptions oo = o.oracle.options(
        g.seed, o.epsilon / static_cast<double>(o.wmax));
    require_ack(oo.scaled(), g, "walk oracle configuration");
    oracle = make_cover_oracle(graph, oo);
    report.parameters["oracle"] = oo.mode;
  } else {
    ctx = std::make_unique<SpannerContext>(graph, cfg);
  }

  std::map<std::string, std::uint64_t> rules;
  Weight total_weight = 0;
  std::uint64_t yes_count = 0;
  std::uint64_t query_total = 0;
  std::uint64_t query_max = 0;
  for (const EdgeRef& e : graph.edges()) {
    QueryCounter counter;
    const SpannerDecision d =
        o.mode == "local-bounded"
            ? local_edge_bounded(graph, e, cfg, *oracle, &counter)
            : local_edge_unbounded(graph, e, cfg, *ctx, &counter);
    ++rules[d.rule];
    query_total += counter.total();
    query_max = std::max(query_max, counter.total());
    if (d.yes) {
      ++yes_count;
      total_weight += graph.weight_of(e);
      nlohmann::json rec = edge_json(graph, e);
      rec["rule"] = d.rule;
      report.add_record(std::move(rec));
    }
  }
  nlohmann::json rule_json = nlohmann::json::object();
  for (const auto& [rule, count] : rules) rule_json[rule] = count;
  const double m = static_cast<double>(graph.m());
  report.aggregate = nlohmann::json{
      {"edge_count", yes_count},
      {"total_weight_micro", total_weight},
      {"opt_weight_micro", opt.total_weight},
      {"weight_ratio",
       opt.total_weight > 0 ? static_cast<double>(total_weight) /
                                  static_cast<double>(opt.total_weight)
                            : 0.0},
      {"edge_bound", edge_bound},
      {"edge_bound_ok", static_cast<double>(yes_count) <= edge_bound},
      {"rules", rule_json},
      {"mean_queries_per_edge", m > 0 ? static_cast<double>(query_total) / m
                                      : 0.0},
      {"max_queries_per_edge", query_max},
  };
  return report;
}

// ------------------------------------------------------------ property-test

struct PropertyTestOpts {
  std::string graph;
  std::string property = "bipartite";
  double epsilon = 0.3;
  std::uint64_t runs = 1;
  OracleFlags oracle;
};

ExperimentReport run_property_test(const PropertyTestOpts& o,
                                   const GlobalOpts& g) {
  const QueryGraph graph = load_graph(o.graph);
  if (o.property != "bipartite") {
    throw std::runtime_error("unknown property: " + o.property);
  }
  const PropertyDecider decider = bipartite_decider();
  OracleOptions oo = o.oracle.options(g.seed, o.epsilon / 2.0);
  require_ack(oo.scaled(), g, "walk oracle configuration");
  const auto oracle = make_cover_oracle(graph, oo);

  ExperimentReport report;
  report.subcommand = "property-test";
  report.parameters = nlohmann::json{
      {"graph", o.graph},   {"property", o.property},
      {"epsilon", o.epsilon}, {"runs", o.runs},
      {"seed", g.seed},     {"oracle", oo.mode},
  };
  std::size_t accepted = 0;
  for (std::uint64_t i = 0; i < o.runs; ++i) {
    const std::uint64_t run_seed = derive_key(g.seed, "run", i);
    const PropertyTestResult res =
        test_property(graph, decider, o.epsilon, *oracle, run_seed);
    nlohmann::json rec{
        {"run", i},
        {"accepted", res.accepted},
        {"samples", res.samples},
        {"queries", counter_json(res.queries)},
    };
    if (res.witness_vertex.has_value()) {
      rec["witness_vertex"] = *res.witness_vertex;
      rec["witness_cover"] = res.witness_cover;
    }
    if (res.accepted) ++accepted;
    report.add_record(std::move(rec));
  }
  report.aggregate = nlohmann::json{
      {"accept_frequency",
       o.runs > 0 ? static_cast<double>(accepted) / static_cast<double>(o.runs)
                  : 0.0}};
  return report;
}

// -------------------------------------------------------------- run-suite

ExperimentReport run_suite_command(const std::string& config_path,
                                   const GlobalOpts& g) {
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config file: " + config_path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> warnings;
  const SuiteConfig cfg = parse_suite_config(buf.str(), &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  require_ack(cfg.oracle.scaled(), g, "walk oracle configuration");
  return run_suite(cfg);
}

// ----------------------------------------------------------- scaling-probe

struct ScalingProbeOpts {
  std::string family = "grid";
  std::vector<std::uint64_t> ns;
  double epsilon = 0.5;
  std::string algorithm = "local-bounded";
  bool weighted = false;
  std::uint32_t wmax = 1;
  std::uint64_t edges_per_n = 200;
  OracleFlags oracle;
};

ExperimentReport run_scaling_probe(const ScalingProbeOpts& o,
                                   const GlobalOpts& g) {
  if (o.algorithm != "local-bounded" && o.algorithm != "kruskal") {
    throw std::runtime_error("unknown algorithm: " + o.algorithm);
  }
  const auto fam = family_from_name(o.family);
  if (!fam) throw std::runtime_error("unknown family: " + o.family);

  ExperimentReport report;
  report.subcommand = "scaling-probe";
  report.parameters = nlohmann::json{
      {"family", o.family},     {"ns", o.ns},
      {"epsilon", o.epsilon},   {"algorithm", o.algorithm},
      {"weighted", o.weighted}, {"wmax", o.wmax},
      {"edges_per_n", o.edges_per_n}, {"seed", g.seed},
  };

  std::vector<double> per_edge_means;
  std::vector<double> totals;
  std::size_t run = 0;
  for (const std::uint64_t n : o.ns) {
    GenSpec spec;
    spec.family = *fam;
    spec.n = static_cast<VertexId>(n);
    spec.seed = g.seed;
    spec.weighted = o.weighted;
    spec.wmax = o.wmax;
    const GeneratedInstance inst = generate(spec);
    const QueryGraph& graph = inst.graph;

    nlohmann::json rec{
        {"run", run++}, {"n", graph.n()}, {"m", graph.m()},
        {"algorithm", o.algorithm},
    };
    if (o.algorithm == "local-bounded") {
      SpanConfig cfg;
      cfg.epsilon = o.epsilon;
      cfg.W = o.wmax;
      cfg.seed = g.seed;
      OracleOptions oo = o.oracle.options(
          g.seed, o.epsilon / static_cast<double>(o.wmax));
      require_ack(oo.scaled(), g, "walk oracle configuration");
      const auto oracle = make_cover_oracle(graph, oo);

      const auto all_edges = graph.edges();
      std::vector<EdgeRef> sample;
      if (all_edges.size() <= o.edges_per_n) {
        sample.assign(all_edges.begin(), all_edges.end());
      } else {
        RngStream stream = make_stream(g.seed, "probe-edges");
        sample.reserve(o.edges_per_n);
        for (std::uint64_t i = 0; i < o.edges_per_n; ++i) {
          sample.push_back(all_edges[stream.below(all_edges.size())]);
        }
      }
      std::uint64_t total = 0;
      std::uint64_t max_edge = 0;
      for (const EdgeRef& e : sample) {
        QueryCounter counter;
        local_edge_bounded(graph, e, cfg, *oracle, &counter);
        total += counter.total();
        max_edge = std::max(max_edge, counter.total());
      }
      const double mean = sample.empty()
                              ? 0.0
                              : static_cast<double>(total) /
                                    static_cast<double>(sample.size());
      per_edge_means.push_back(mean);
      totals.push_back(static_cast<double>(total));
      rec["edges_sampled"] = sample.size();
      rec["mean_queries_per_edge"] = mean;
      rec["max_queries_per_edge"] = max_edge;
      rec["total_queries"] = total;
    } else {
      // Exact control: read the whole graph through the counted interface,
      // then build the forest from it.
      QueryCounter counter;
      for (VertexId v = 0; v < graph.n(); ++v) {
        const std::uint32_t deg = graph.degree(v, &counter);
        for (std::uint32_t i = 1; i <= deg; ++i) {
          graph.neighbor(v, i, &counter);
        }
      }
      const MsfResult msf = kruskal_msf(graph);
      const double mean =
          graph.m() > 0 ? static_cast<double>(counter.total()) /
                              static_cast<double>(graph.m())
                        : 0.0;
      per_edge_means.push_back(mean);
      totals.push_back(static_cast<double>(counter.total()));
      rec["total_queries"] = counter.total();
      rec["mean_queries_per_edge"] = mean;
      rec["msf_weight_micro"] = msf.total_weight;
    }
    report.add_record(std::move(rec));
  }

  nlohmann::json agg;
  if (!per_edge_means.empty()) {
    const auto [lo, hi] =
        std::minmax_element(per_edge_means.begin(), per_edge_means.end());
    if (*lo > 0.0) agg["per_edge_flatness_ratio"] = *hi / *lo;
    const auto [tlo, thi] = std::minmax_element(totals.begin(), totals.end());
    if (*tlo > 0.0) agg["total_growth_ratio"] = *thi / *tlo;
  }
  report.aggregate = agg;
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mfgraph: generators, covering/partition oracles, Hamiltonicity "
      "testers, local sparse spanning subgraphs, and property tests over "
      "minor-free graphs"};
  app.require_subcommand(1);

  GlobalOpts global;
  app.add_option("--seed", global.seed, "Root seed for all derived randomness")
      ->capture_default_str();
  app.add_option("--out", global.out, "Output file (default: stdout)");
  app.add_option("--format", global.format, "Report format: jsonl|csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"jsonl", "csv"}));
  app.add_flag("--scaled-mode-ack", global.scaled_ack,
               "Acknowledge oracle/spanner parameters that deviate from the "
               "formula values");

  GenerateOpts gen;
  auto* gen_cmd = app.add_subcommand("generate", "Generate a graph instance");
  gen_cmd->fallthrough();
  gen_cmd->add_option("--family", gen.family,
                      "grid|random_tree|cycle_chords_planar|apollonian|"
                      "star_forest|disjoint_paths")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_flag("--weighted", gen.weighted, "Draw edge weights");
  gen_cmd->add_option("--wmax", gen.wmax, "Weight upper bound (whole units)")
      ->capture_default_str();
  gen_cmd->add_option("--star-size", gen.star_size, "Vertices per star")
      ->capture_default_str();
  gen_cmd->add_option("--path-len", gen.path_len, "Vertices per path")
      ->capture_default_str();
  gen_cmd->add_option("--chord-fraction", gen.chord_fraction,
                      "Chords per vertex")
      ->capture_default_str();
  gen_cmd->add_option("-o,--graph-out", gen.graph_out, "Graph output file")
      ->required();

  OracleStatsOpts stats;
  auto* stats_cmd =
      app.add_subcommand("oracle-stats", "Covering-oracle statistics");
  stats_cmd->fallthrough();
  stats_cmd->add_option("--graph", stats.graph, "Graph file")->required();
  stats_cmd->add_option("--mode", stats.oracle.mode,
                        "Oracle: walk|ball|exhaustive")
      ->capture_default_str();
  stats_cmd->add_option("--epsilon", stats.epsilon, "Oracle parameter")
      ->capture_default_str();
  stats_cmd->add_option("--queries", stats.queries, "Covering queries to run")
      ->capture_default_str();
  stats_cmd->add_option("--radius", stats.oracle.radius,
                        "Ball radius (0 = derived)");
  stats_cmd->add_option("--cap", stats.oracle.cap, "Cover size cap");
  stats_cmd->add_option("--part-size", stats.oracle.part_size,
                        "Exhaustive part-size bound")
      ->capture_default_str();
  stats_cmd->add_option("--ell", stats.oracle.ell, "Walk base length");
  stats_cmd->add_option("--walks-per-length", stats.oracle.walks_per_length,
                        "Walks per length");
  stats_cmd->add_option("--length-exp", stats.oracle.length_exp,
                        "Walk length exponent");

  TestHamOpts ham;
  auto* ham_cmd = app.add_subcommand("test-ham", "Hamiltonicity testing");
  ham_cmd->fallthrough();
  ham_cmd->add_option("--graph", ham.graph, "Graph file")->required();
  ham_cmd->add_option("--mode", ham.mode, "one-sided|tolerant|exact")
      ->capture_default_str();
  ham_cmd->add_option("--epsilon", ham.epsilon, "Proximity parameter")
      ->capture_default_str();
  ham_cmd->add_option("--runs", ham.runs, "Independent runs")
      ->capture_default_str();
  add_oracle_flags(ham_cmd, ham.oracle);

  BuildSpannerOpts span;
  auto* span_cmd =
      app.add_subcommand("build-spanner", "Sparse spanning subgraph");
  span_cmd->fallthrough();
  span_cmd->add_option("--graph", span.graph, "Graph file")->required();
  span_cmd->add_option("--mode", span.mode,
                       "global|local-bounded|local-unbounded")
      ->capture_default_str();
  span_cmd->add_option("--epsilon", span.epsilon, "Sparsity parameter")
      ->capture_default_str();
  span_cmd->add_option("--wmax", span.wmax, "Weight upper bound W")
      ->capture_default_str();
  span_cmd->add_option("--heavy-threshold", span.heavy_threshold,
                       "Heavy-degree threshold override (0 = formula)");
  span_cmd->add_option("--part-bound", span.part_bound,
                       "Partition part-size override (0 = formula)");
  span_cmd->add_option("--sample-size", span.sample_size,
                       "Cluster sample-size override (0 = formula)");
  add_oracle_flags(span_cmd, span.oracle);

  PropertyTestOpts prop;
  auto* prop_cmd =
      app.add_subcommand("property-test", "Monotone+additive property tester");
  prop_cmd->fallthrough();
  prop_cmd->add_option("--graph", prop.graph, "Graph file")->required();
  prop_cmd->add_option("--property", prop.property, "Property name")
      ->capture_default_str();
  prop_cmd->add_option("--epsilon", prop.epsilon, "Proximity parameter")
      ->capture_default_str();
  prop_cmd->add_option("--runs", prop.runs, "Independent runs")
      ->capture_default_str();
  add_oracle_flags(prop_cmd, prop.oracle);

  std::string suite_config;
  auto* suite_cmd =
      app.add_subcommand("run-suite", "Run a declared experiment grid");
  suite_cmd->fallthrough();
  suite_cmd->add_option("--config", suite_config, "Suite config (JSON)")
      ->required();

  ScalingProbeOpts probe;
  auto* probe_cmd =
      app.add_subcommand("scaling-probe", "Query counts across sizes");
  probe_cmd->fallthrough();
  probe_cmd->add_option("--family", probe.family, "Graph family")
      ->capture_default_str();
  probe_cmd->add_option("--ns", probe.ns, "Vertex counts (comma-separated)")
      ->required()
      ->delimiter(',');
  probe_cmd->add_option("--epsilon", probe.epsilon, "Sparsity parameter")
      ->capture_default_str();
  probe_cmd->add_option("--algorithm", probe.algorithm,
                        "local-bounded|kruskal")
      ->capture_default_str();
  probe_cmd->add_flag("--weighted", probe.weighted, "Draw edge weights");
  probe_cmd->add_option("--wmax", probe.wmax, "Weight upper bound W")
      ->capture_default_str();
  probe_cmd->add_option("--edges-per-n", probe.edges_per_n,
                        "Edges sampled per instance")
      ->capture_default_str();
  add_oracle_flags(probe_cmd, probe.oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    if (gen_cmd->parsed()) {
      report = run_generate(gen, global);
    } else if (stats_cmd->parsed()) {
      report = run_oracle_stats(stats, global);
    } else if (ham_cmd->parsed()) {
      report = run_test_ham(ham, global);
    } else if (span_cmd->parsed()) {
      report = run_build_spanner(span, global);
    } else if (prop_cmd->parsed()) {
      report = run_property_test(prop, global);
    } else if (suite_cmd->parsed()) {
      report = run_suite_command(suite_config, global);
    } else if (probe_cmd->parsed()) {
      report = run_scaling_probe(probe, global);
    }
    const auto stop = std::chrono::steady_clock::now();
    const double wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    emit_report(report, global, wall_ms);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
