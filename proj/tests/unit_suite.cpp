// Suite orchestration: config parsing diagnostics, grid expansion, oracle
// construction from options, deterministic execution, and aggregate shape.

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "minorfree/generators.hpp"
#include "minorfree/graph.hpp"
#include "minorfree/oracles.hpp"
#include "minorfree/report.hpp"
#include "minorfree/suite.hpp"

using namespace minorfree;
using nlohmann::json;

namespace {

std::string dump_jsonl(const ExperimentReport& report) {
  std::ostringstream out;
  report.write_jsonl(out);
  return out.str();
}

}  // namespace

TEST_CASE("config parsing fills defaults and validates") {
  std::vector<std::string> warnings;
  const SuiteConfig cfg = parse_suite_config(
      R"({"task": "spanner-queries", "family": "grid", "ns": [16, 25],
          "seeds": [1, 2], "epsilon": 0.5})",
      &warnings);
  CHECK(cfg.task == "spanner-queries");
  CHECK(cfg.family == Family::grid);
  CHECK(cfg.ns == std::vector<VertexId>{16, 25});
  CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2});
  CHECK(cfg.epsilon == 0.5);
  CHECK(cfg.runs == 1);
  CHECK(warnings.empty());
}

TEST_CASE("duplicate seeds are dropped with a warning") {
  std::vector<std::string> warnings;
  const SuiteConfig cfg = parse_suite_config(
      R"({"ns": [9], "seeds": [4, 4, 5, 4]})", &warnings);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{4, 5});
  REQUIRE(warnings.size() == 2);
  CHECK(warnings[0].find("duplicate seed 4") != std::string::npos);
}

TEST_CASE("parse errors name the line") {
  try {
    parse_suite_config("{\n  \"ns\": [9],\n  broken\n}", nullptr);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("unknown and ill-typed fields are named") {
  CHECK_THROWS_WITH_AS(
      parse_suite_config(R"({"ns": [9], "frobnicate": 1})", nullptr),
      doctest::Contains("frobnicate"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_suite_config(R"({"ns": "nine"})", nullptr),
      doctest::Contains("ns"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_suite_config(R"({"ns": [9], "epsilon": 2.0})", nullptr),
      doctest::Contains("epsilon"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_suite_config(R"({"ns": [9], "task": "fly-to-the-moon"})", nullptr),
      doctest::Contains("task"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_suite_config(R"({"ns": [9], "oracle": {"radius": -1}})", nullptr),
      doctest::Contains("radius"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_suite_config("[1, 2]", nullptr),
                       doctest::Contains("object"), std::invalid_argument);
}

TEST_CASE("grid expansion is ns cross seeds in declared order") {
  SuiteConfig cfg;
  cfg.ns = {9, 16};
  cfg.seeds = {7, 8};
  const auto grid = expand_grid(cfg);
  REQUIRE(grid.size() == 4);
  CHECK(grid[0].n == 9);
  CHECK(grid[0].seed == 7);
  CHECK(grid[1].n == 9);
  CHECK(grid[1].seed == 8);
  CHECK(grid[3].n == 16);
  CHECK(grid[3].seed == 8);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(grid[i].index == i);

  cfg.ns.clear();
  CHECK(expand_grid(cfg).empty());
}

TEST_CASE("empty grid still yields a well-formed report") {
  SuiteConfig cfg;
  cfg.ns = {};
  cfg.seeds = {1};
  const ExperimentReport report = run_suite(cfg);
  CHECK(report.records.empty());
  const auto text = dump_jsonl(report);
  std::istringstream in(text);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) ++count;
  CHECK(count == 2);  // header and aggregate only
}

TEST_CASE("oracle options resolve defaults and scaling") {
  OracleOptions opts;
  opts.epsilon_prime = 0.25;
  CHECK(opts.resolved_radius() == 4);  // ceil(1/0.25)
  opts.radius = 7;
  CHECK(opts.resolved_radius() == 7);
  CHECK(opts.resolved_cap() == 512);  // ball default
  opts.cap = 9;
  CHECK(opts.resolved_cap() == 9);
  CHECK(!opts.scaled());  // ball is a baseline

  OracleOptions walk;
  walk.mode = "walk";
  walk.epsilon_prime = 0.5;
  CHECK(!walk.scaled());  // theory-scale formulas
  walk.ell = 3;
  CHECK(walk.scaled());  // explicit knobs deviate

  OracleOptions no_eps;
  CHECK_THROWS_AS(no_eps.resolved_radius(), std::invalid_argument);
}

TEST_CASE("make cover oracle produces each implementation") {
  GenSpec spec;
  spec.family = Family::grid;
  spec.n = 16;
  spec.seed = 1;
  const QueryGraph g = generate(spec).graph;

  OracleOptions ball;
  ball.epsilon_prime = 0.5;
  const auto ball_oracle = make_cover_oracle(g, ball);
  CHECK(ball_oracle->name() == "ball");
  CHECK(ball_oracle->cover(3, nullptr).contains(3));

  OracleOptions exhaustive;
  exhaustive.mode = "exhaustive";
  exhaustive.epsilon_prime = 0.5;
  exhaustive.part_size = 4;
  const auto ex_oracle = make_cover_oracle(g, exhaustive);
  CHECK(ex_oracle->name() == "exhaustive");
  CHECK(ex_oracle->size_bound() == 4);

  OracleOptions walk;
  walk.mode = "walk";
  walk.epsilon_prime = 0.5;
  walk.ell = 2;
  walk.walks_per_length = 2;
  walk.max_walk_length_exp = 2;
  const auto walk_oracle = make_cover_oracle(g, walk);
  CHECK(walk_oracle->name() == "walk");
  CHECK(walk_oracle->cover(5, nullptr).contains(5));

  OracleOptions bad;
  bad.mode = "psychic";
  bad.epsilon_prime = 0.5;
  CHECK_THROWS_AS(make_cover_oracle(g, bad), std::invalid_argument);

  OracleOptions no_eps;
  no_eps.mode = "exhaustive";
  CHECK_THROWS_AS(make_cover_oracle(g, no_eps), std::invalid_argument);
}

TEST_CASE("identical configs give byte-identical reports") {
  std::vector<std::string> warnings;
  const SuiteConfig cfg = parse_suite_config(
      R"({"task": "spanner-queries", "family": "grid", "ns": [25],
          "seeds": [3], "epsilon": 0.5, "weighted": true, "wmax": 2,
          "edges_per_instance": 20})",
      &warnings);
  const std::string first = dump_jsonl(run_suite(cfg));
  const std::string second = dump_jsonl(run_suite(cfg));
  CHECK(first == second);
  CHECK(!first.empty());
}

TEST_CASE("spanner-queries suite aggregates per size") {
  std::vector<std::string> warnings;
  const SuiteConfig cfg = parse_suite_config(
      R"({"task": "spanner-queries", "family": "grid", "ns": [16, 36],
          "seeds": [1, 2], "epsilon": 1.0, "edges_per_instance": 15})",
      &warnings);
  const ExperimentReport report = run_suite(cfg);
  CHECK(report.records.size() == 4);
  for (const json& rec : report.records) {
    CHECK(rec.at("task") == "spanner-queries");
    CHECK(rec.at("edges_sampled") == 15);
    CHECK(rec.at("mean_queries_per_edge").get<double>() > 0.0);
  }
  CHECK(report.aggregate.at("runs") == 4);
  REQUIRE(report.aggregate.contains("per_n"));
  CHECK(report.aggregate.at("per_n").size() == 2);
  CHECK(report.aggregate.contains("flatness_ratio"));
}

TEST_CASE("test-ham suite runs each mode") {
  std::vector<std::string> warnings;
  const SuiteConfig exact = parse_suite_config(
      R"({"task": "test-ham", "mode": "exact", "family": "star_forest",
          "ns": [20], "seeds": [1], "epsilon": 0.25})",
      &warnings);
  const ExperimentReport exact_report = run_suite(exact);
  REQUIRE(exact_report.records.size() == 1);
  CHECK(exact_report.records[0].at("ham_distance") == 9);
  CHECK(exact_report.records[0].at("is_hamiltonian") == false);

  const SuiteConfig one_sided = parse_suite_config(
      R"({"task": "test-ham", "mode": "one-sided", "family": "grid",
          "ns": [16], "seeds": [2], "epsilon": 0.5, "runs": 3})",
      &warnings);
  const ExperimentReport os_report = run_suite(one_sided);
  REQUIRE(os_report.records.size() == 3);
  for (const json& rec : os_report.records) {
    CHECK(rec.at("accepted") == true);  // grids are Hamiltonian
  }
  CHECK(os_report.aggregate.at("accept_frequency") == 1.0);

  const SuiteConfig tolerant = parse_suite_config(
      R"({"task": "test-ham", "mode": "tolerant", "family": "star_forest",
          "ns": [60], "seeds": [4], "epsilon": 0.2, "runs": 2})",
      &warnings);
  const ExperimentReport tol_report = run_suite(tolerant);
  REQUIRE(tol_report.records.size() == 2);
  for (const json& rec : tol_report.records) {
    CHECK(rec.contains("estimate"));
    CHECK(rec.contains("threshold"));
  }
}

TEST_CASE("property-test suite reports rejection witnesses") {
  std::vector<std::string> warnings;
  const SuiteConfig cfg = parse_suite_config(
      R"({"task": "property-test", "property": "bipartite", "family": "grid",
          "ns": [25], "seeds": [3], "epsilon": 0.5, "runs": 2})",
      &warnings);
  const ExperimentReport report = run_suite(cfg);
  REQUIRE(report.records.size() == 2);
  for (const json& rec : report.records) {
    CHECK(rec.at("accepted") == true);
    CHECK(!rec.contains("witness_vertex"));
  }
  CHECK(report.aggregate.at("accept_frequency") == 1.0);
}
