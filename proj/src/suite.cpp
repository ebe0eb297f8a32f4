#include "minorfree/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "minorfree/hamiltonicity.hpp"
#include "minorfree/pathcover.hpp"
#include "minorfree/property.hpp"
#include "minorfree/rng.hpp"
#include "minorfree/spanning.hpp"

namespace minorfree {

namespace {

constexpr std::uint64_t kDefaultBallCap = 512;
constexpr std::uint64_t kDefaultWalkCap = 64;

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  const std::size_t stop = std::min(byte, text.size());
  for (std::size_t i = 0; i + 1 < stop; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
  throw std::invalid_argument("config field '" + path + "': " + why);
}

void check_keys(const nlohmann::json& obj, const std::string& where,
                const std::set<std::string>& known) {
  for (const auto& item : obj.items()) {
    if (!known.count(item.key())) {
      bad_field(where.empty() ? item.key() : where + "." + item.key(),
                "not a recognized key");
    }
  }
}

double read_number(const nlohmann::json& obj, const std::string& key,
                   double fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) bad_field(key, "expected a number");
  return it->get<double>();
}

std::uint64_t read_uint(const nlohmann::json& obj, const std::string& key,
                        std::uint64_t fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_unsigned()) bad_field(key, "expected a non-negative integer");
  return it->get<std::uint64_t>();
}

std::string read_string(const nlohmann::json& obj, const std::string& key,
                        const std::string& fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_string()) bad_field(key, "expected a string");
  return it->get<std::string>();
}

bool read_bool(const nlohmann::json& obj, const std::string& key,
               bool fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) bad_field(key, "expected a boolean");
  return it->get<bool>();
}

nlohmann::json oracle_json(const OracleOptions& o) {
  return nlohmann::json{
      {"mode", o.mode},           {"epsilon_prime", o.epsilon_prime},
      {"radius", o.radius},       {"cap", o.cap},
      {"part_size", o.part_size}, {"ell", o.ell},
      {"walks_per_length", o.walks_per_length},
      {"max_walk_length_exp", o.max_walk_length_exp},
      {"seed", o.seed},
  };
}

nlohmann::json config_json(const SuiteConfig& cfg) {
  return nlohmann::json{
      {"task", cfg.task},
      {"family", family_name(cfg.family)},
      {"ns", cfg.ns},
      {"seeds", cfg.seeds},
      {"epsilon", cfg.epsilon},
      {"weighted", cfg.weighted},
      {"wmax", cfg.wmax},
      {"edges_per_instance", cfg.edges_per_instance},
      {"mode", cfg.mode},
      {"runs", cfg.runs},
      {"property", cfg.property},
      {"oracle", oracle_json(cfg.oracle)},
  };
}

// Fills zero-valued oracle knobs with the calling task's derived defaults.
OracleOptions resolve_oracle(OracleOptions o, double epsilon_prime_fallback) {
  if (o.epsilon_prime <= 0.0) o.epsilon_prime = epsilon_prime_fallback;
  return o;
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

}  // namespace

std::uint32_t OracleOptions::resolved_radius() const {
  if (radius != 0) return radius;
  if (epsilon_prime <= 0.0) {
    throw std::invalid_argument(
        "ball radius underived: no radius and no positive epsilon_prime");
  }
  const double raw = std::ceil(1.0 / epsilon_prime);
  return raw > 1e9 ? 1'000'000'000u : static_cast<std::uint32_t>(raw);
}

std::uint64_t OracleOptions::resolved_cap() const {
  if (cap != 0) return cap;
  return mode == "walk" ? kDefaultWalkCap : kDefaultBallCap;
}

bool OracleOptions::scaled() const {
  return mode == "walk" &&
         (ell != 0 || walks_per_length != 0 || max_walk_length_exp != 0);
}

std::unique_ptr<CoveringOracle> make_cover_oracle(const QueryGraph& g,
                                                  const OracleOptions& opts) {
  if (opts.mode == "ball") {
    return std::make_unique<BallCoverOracle>(g, opts.resolved_radius(),
                                             opts.resolved_cap());
  }
  if (opts.mode == "exhaustive") {
    if (opts.epsilon_prime <= 0.0) {
      throw std::invalid_argument(
          "exhaustive oracle requires a positive epsilon_prime");
    }
    return std::make_unique<ExhaustiveCoverOracle>(g, opts.epsilon_prime,
                                                   opts.part_size);
  }
  if (opts.mode == "walk") {
    OracleParams p;
    if (opts.scaled()) {
      p.epsilon = opts.epsilon_prime;
      p.ell = opts.ell != 0 ? opts.ell : 1;
      p.walks_per_length = opts.walks_per_length != 0 ? opts.walks_per_length : 2;
      p.max_walk_length_exp =
          opts.max_walk_length_exp != 0 ? opts.max_walk_length_exp : 2;
      p.part_size_cap = opts.resolved_cap();
      p.seed = opts.seed;
      p.scaled = true;
    } else {
      p = OracleParams::theory_scale(opts.epsilon_prime, 10, opts.seed);
      if (opts.cap != 0) p.part_size_cap = opts.cap;
    }
    return std::make_unique<WalkCoverOracle>(g, p);
  }
  throw std::invalid_argument("unknown oracle mode: " + opts.mode);
}

SuiteConfig parse_suite_config(const std::string& text,
                               std::vector<std::string>* warnings) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config parse error at line " +
                                std::to_string(line_of_byte(text, e.byte)) +
                                ": " + e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("config root must be a JSON object");
  }
  check_keys(j, "",
             {"task", "family", "ns", "seeds", "epsilon", "weighted", "wmax",
              "edges_per_instance", "mode", "runs", "property", "oracle"});

  SuiteConfig cfg;
  cfg.task = read_string(j, "task", cfg.task);
  if (cfg.task != "spanner-queries" && cfg.task != "test-ham" &&
      cfg.task != "property-test") {
    bad_field("task", "unknown task '" + cfg.task + "'");
  }
  const std::string fam = read_string(j, "family", family_name(cfg.family));
  const auto parsed_family = family_from_name(fam);
  if (!parsed_family) bad_field("family", "unknown family '" + fam + "'");
  cfg.family = *parsed_family;

  if (const auto it = j.find("ns"); it != j.end()) {
    if (!it->is_array()) bad_field("ns", "expected an array of vertex counts");
    for (const auto& v : *it) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
        bad_field("ns", "entries must be positive integers");
      }
      cfg.ns.push_back(static_cast<VertexId>(v.get<std::uint64_t>()));
    }
  }
  if (const auto it = j.find("seeds"); it != j.end()) {
    if (!it->is_array()) bad_field("seeds", "expected an array of seeds");
    std::set<std::uint64_t> seen;
    for (const auto& v : *it) {
      if (!v.is_number_unsigned()) {
        bad_field("seeds", "entries must be non-negative integers");
      }
      const std::uint64_t s = v.get<std::uint64_t>();
      if (!seen.insert(s).second) {
        if (warnings != nullptr) {
          warnings->push_back("duplicate seed " + std::to_string(s) +
                              " dropped");
        }
        continue;
      }
      cfg.seeds.push_back(s);
    }
  }
  cfg.epsilon = read_number(j, "epsilon", cfg.epsilon);
  if (!(cfg.epsilon > 0.0) || cfg.epsilon > 1.0) {
    bad_field("epsilon", "must lie in (0, 1]");
  }
  cfg.weighted = read_bool(j, "weighted", cfg.weighted);
  cfg.wmax = static_cast<std::uint32_t>(read_uint(j, "wmax", cfg.wmax));
  if (cfg.wmax == 0) bad_field("wmax", "must be at least 1");
  cfg.edges_per_instance = static_cast<std::size_t>(
      read_uint(j, "edges_per_instance", cfg.edges_per_instance));
  if (cfg.edges_per_instance == 0) {
    bad_field("edges_per_instance", "must be at least 1");
  }
  cfg.mode = read_string(j, "mode", cfg.mode);
  if (cfg.mode != "one-sided" && cfg.mode != "tolerant" &&
      cfg.mode != "exact") {
    bad_field("mode", "unknown mode '" + cfg.mode + "'");
  }
  cfg.runs = static_cast<std::size_t>(read_uint(j, "runs", cfg.runs));
  if (cfg.runs == 0) bad_field("runs", "must be at least 1");
  cfg.property = read_string(j, "property", cfg.property);
  if (cfg.property != "bipartite") {
    bad_field("property", "unknown property '" + cfg.property + "'");
  }

  if (const auto it = j.find("oracle"); it != j.end()) {
    if (!it->is_object()) bad_field("oracle", "expected an object");
    check_keys(*it, "oracle",
               {"mode", "epsilon_prime", "radius", "cap", "part_size", "ell",
                "walks_per_length", "max_walk_length_exp", "seed"});
    OracleOptions& o = cfg.oracle;
    o.mode = read_string(*it, "mode", o.mode);
    if (o.mode != "ball" && o.mode != "exhaustive" && o.mode != "walk") {
      bad_field("oracle.mode", "unknown mode '" + o.mode + "'");
    }
    o.epsilon_prime = read_number(*it, "epsilon_prime", o.epsilon_prime);
    o.radius = static_cast<std::uint32_t>(read_uint(*it, "radius", o.radius));
    o.cap = read_uint(*it, "cap", o.cap);
    o.part_size = read_uint(*it, "part_size", o.part_size);
    if (o.part_size == 0) bad_field("oracle.part_size", "must be at least 1");
    o.ell = read_uint(*it, "ell", o.ell);
    o.walks_per_length = read_uint(*it, "walks_per_length", o.walks_per_length);
    o.max_walk_length_exp = static_cast<int>(
        read_uint(*it, "max_walk_length_exp",
                  static_cast<std::uint64_t>(o.max_walk_length_exp)));
    o.seed = read_uint(*it, "seed", o.seed);
  }
  return cfg;
}

std::vector<SuiteRunSpec> expand_grid(const SuiteConfig& cfg) {
  std::vector<SuiteRunSpec> grid;
  std::size_t index = 0;
  for (const VertexId n : cfg.ns) {
    for (const std::uint64_t seed : cfg.seeds) {
      grid.push_back(SuiteRunSpec{index++, n, seed});
    }
  }
  return grid;
}

namespace {

nlohmann::json run_spanner_queries(const SuiteConfig& cfg,
                                   const SuiteRunSpec& spec) {
  GenSpec gs;
  gs.family = cfg.family;
  gs.n = spec.n;
  gs.seed = spec.seed;
  gs.weighted = cfg.weighted;
  gs.wmax = cfg.wmax;
  const GeneratedInstance inst = generate(gs);
  const QueryGraph& g = inst.graph;

  SpanConfig sc;
  sc.epsilon = cfg.epsilon;
  sc.W = cfg.wmax;
  sc.seed = spec.seed;
  const OracleOptions oo =
      resolve_oracle(cfg.oracle, cfg.epsilon / static_cast<double>(sc.W));
  const auto oracle = make_cover_oracle(g, oo);

  const auto all_edges = g.edges();
  std::vector<EdgeRef> sample;
  if (all_edges.size() <= cfg.edges_per_instance) {
    sample.assign(all_edges.begin(), all_edges.end());
  } else {
    RngStream stream = make_stream(spec.seed, "suite-edges");
    sample.reserve(cfg.edges_per_instance);
    for (std::size_t i = 0; i < cfg.edges_per_instance; ++i) {
      sample.push_back(all_edges[stream.below(all_edges.size())]);
    }
  }

  std::uint64_t total = 0;
  std::uint64_t max_edge = 0;
  std::size_t yes = 0;
  for (const EdgeRef& e : sample) {
    QueryCounter counter;
    const SpannerDecision d = local_edge_bounded(g, e, sc, *oracle, &counter);
    total += counter.total();
    max_edge = std::max(max_edge, counter.total());
    if (d.yes) ++yes;
  }
  const double count = static_cast<double>(sample.size());
  return nlohmann::json{
      {"run", spec.index},
      {"task", cfg.task},
      {"family", family_name(cfg.family)},
      {"n", g.n()},
      {"m", g.m()},
      {"seed", spec.seed},
      {"edges_sampled", sample.size()},
      {"yes_fraction", count > 0 ? static_cast<double>(yes) / count : 0.0},
      {"mean_queries_per_edge",
       count > 0 ? static_cast<double>(total) / count : 0.0},
      {"max_queries_per_edge", max_edge},
  };
}

std::vector<nlohmann::json> run_test_ham(const SuiteConfig& cfg,
                                         const SuiteRunSpec& spec) {
  GenSpec gs;
  gs.family = cfg.family;
  gs.n = spec.n;
  gs.seed = spec.seed;
  gs.weighted = cfg.weighted;
  gs.wmax = cfg.wmax;
  const GeneratedInstance inst = generate(gs);
  const QueryGraph& g = inst.graph;

  std::vector<nlohmann::json> out;
  nlohmann::json base{
      {"run", spec.index},
      {"task", cfg.task},
      {"family", family_name(cfg.family)},
      {"n", g.n()},
      {"seed", spec.seed},
      {"mode", cfg.mode},
  };
  if (cfg.mode == "exact") {
    nlohmann::json rec = base;
    const std::size_t d = ham_distance(g);
    rec["ham_distance"] = d;
    rec["is_hamiltonian"] = (d == 0);
    out.push_back(std::move(rec));
    return out;
  }
  std::unique_ptr<CoveringOracle> oracle;
  if (cfg.mode == "one-sided") {
    OracleOptions oo = resolve_oracle(cfg.oracle, cfg.epsilon / 6.0);
    // Desk-scale defaults: the subset sweep caps covers at the path-cover
    // budget, so underived ball knobs use a small radius and cap.
    if (oo.mode == "ball") {
      if (oo.radius == 0) oo.radius = 2;
      if (oo.cap == 0) oo.cap = 13;
    }
    oracle = make_cover_oracle(g, oo);
  }
  for (std::size_t rep = 0; rep < cfg.runs; ++rep) {
    const std::uint64_t run_seed = derive_key(spec.seed, "suite-run", rep);
    nlohmann::json rec = base;
    rec["rep"] = rep;
    if (cfg.mode == "one-sided") {
      const OneSidedResult res =
          test_ham_one_sided(g, cfg.epsilon, *oracle, run_seed);
      rec["accepted"] = res.accepted;
      rec["samples"] = res.samples;
      rec["queries"] = counter_json(res.queries);
      if (res.witness.has_value()) rec["witness"] = witness_json(*res.witness);
    } else {
      EstimatorConfig ec;
      ec.seed = run_seed;
      const TolerantResult res = tolerant_test_ham(g, cfg.epsilon, ec);
      rec["accepted"] = res.accepted;
      rec["estimate"] = res.estimate.value;
      rec["threshold"] = res.threshold;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<nlohmann::json> run_property_test(const SuiteConfig& cfg,
                                              const SuiteRunSpec& spec) {
  GenSpec gs;
  gs.family = cfg.family;
  gs.n = spec.n;
  gs.seed = spec.seed;
  gs.weighted = cfg.weighted;
  gs.wmax = cfg.wmax;
  const GeneratedInstance inst = generate(gs);
  const QueryGraph& g = inst.graph;

  const OracleOptions oo = resolve_oracle(cfg.oracle, cfg.epsilon / 2.0);
  const auto oracle = make_cover_oracle(g, oo);
  const PropertyDecider decider = bipartite_decider();

  std::vector<nlohmann::json> out;
  for (std::size_t rep = 0; rep < cfg.runs; ++rep) {
    const std::uint64_t run_seed = derive_key(spec.seed, "suite-run", rep);
    const PropertyTestResult res =
        test_property(g, decider, cfg.epsilon, *oracle, run_seed);
    nlohmann::json rec{
        {"run", spec.index},
        {"task", cfg.task},
        {"family", family_name(cfg.family)},
        {"n", g.n()},
        {"seed", spec.seed},
        {"rep", rep},
        {"property", cfg.property},
        {"accepted", res.accepted},
        {"samples", res.samples},
        {"queries", counter_json(res.queries)},
    };
    if (res.witness_vertex.has_value()) {
      rec["witness_vertex"] = *res.witness_vertex;
      rec["witness_cover"] = res.witness_cover;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

ExperimentReport run_suite(const SuiteConfig& cfg) {
  ExperimentReport report;
  report.subcommand = "run-suite";
  report.parameters = config_json(cfg);

  const std::vector<SuiteRunSpec> grid = expand_grid(cfg);
  for (const SuiteRunSpec& spec : grid) {
    if (cfg.task == "spanner-queries") {
      report.add_record(run_spanner_queries(cfg, spec));
    } else if (cfg.task == "test-ham") {
      for (auto& rec : run_test_ham(cfg, spec)) {
        report.add_record(std::move(rec));
      }
    } else {
      for (auto& rec : run_property_test(cfg, spec)) {
        report.add_record(std::move(rec));
      }
    }
  }

  nlohmann::json agg;
  agg["runs"] = report.records.size();
  if (cfg.task == "spanner-queries") {
    nlohmann::json per_n = nlohmann::json::array();
    for (const VertexId n : cfg.ns) {
      double sum = 0.0;
      std::size_t count = 0;
      for (const auto& rec : report.records) {
        if (rec.at("n").get<std::uint64_t>() == n) {
          sum += rec.at("mean_queries_per_edge").get<double>();
          ++count;
        }
      }
      if (count > 0) {
        per_n.push_back(nlohmann::json{
            {"n", n}, {"mean_queries_per_edge", sum / count}});
      }
    }
    agg["per_n"] = per_n;
    double lo = 0.0;
    double hi = 0.0;
    for (const auto& row : per_n) {
      const double v = row.at("mean_queries_per_edge").get<double>();
      if (lo == 0.0 || v < lo) lo = v;
      hi = std::max(hi, v);
    }
    if (lo > 0.0) agg["flatness_ratio"] = hi / lo;
  } else {
    std::size_t accepted = 0;
    std::size_t decided = 0;
    for (const auto& rec : report.records) {
      const auto it = rec.find("accepted");
      if (it != rec.end()) {
        ++decided;
        if (it->get<bool>()) ++accepted;
      }
    }
    if (decided > 0) {
      agg["accept_frequency"] =
          static_cast<double>(accepted) / static_cast<double>(decided);
    }
  }
  report.aggregate = agg;
  return report;
}

}  // namespace minorfree
