// Experiment reports: line structure of the JSONL stream, CSV layout and
// quoting, byte-level determinism, and the JSON views of counters and
// ground truth.

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "minorfree/generators.hpp"
#include "minorfree/graph.hpp"
#include "minorfree/report.hpp"

using namespace minorfree;
using nlohmann::json;

namespace {

ExperimentReport sample_report() {
  ExperimentReport report;
  report.subcommand = "demo";
  report.parameters = {{"epsilon", 0.5}, {"n", 16}};
  report.add_record({{"run", 0}, {"score", 1.5}, {"label", "plain"}});
  report.add_record({{"run", 1}, {"score", 2.0}, {"label", "with, comma"}});
  report.aggregate = {{"runs", 2}, {"mean_score", 1.75}};
  return report;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("jsonl stream is header, runs, aggregate") {
  std::ostringstream out;
  sample_report().write_jsonl(out);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 4);  // header + 2 records + aggregate

  const json header = json::parse(lines[0]);
  CHECK(header.at("kind") == "header");
  CHECK(header.at("tool_version") == kToolVersion);
  CHECK(header.at("subcommand") == "demo");
  CHECK(header.at("parameters").at("epsilon") == 0.5);

  const json first = json::parse(lines[1]);
  CHECK(first.at("kind") == "run");
  CHECK(first.at("run") == 0);
  const json second = json::parse(lines[2]);
  CHECK(second.at("label") == "with, comma");

  const json aggregate = json::parse(lines[3]);
  CHECK(aggregate.at("kind") == "aggregate");
  CHECK(aggregate.at("runs") == 2);
}

TEST_CASE("csv has comment metadata, sorted keys, and quoting") {
  std::ostringstream out;
  sample_report().write_csv(out);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() >= 5);
  CHECK(lines[0].rfind("# tool_version=", 0) == 0);
  CHECK(lines[1].rfind("# parameters=", 0) == 0);
  CHECK(lines[2] == "label,run,score");  // sorted union of record keys
  CHECK(lines[3] == "plain,0,1.5");
  CHECK(lines[4] == "\"with, comma\",1,2.0");  // comma value gets quoted
  CHECK(lines.back().rfind("# aggregate=", 0) == 0);
}

TEST_CASE("records missing a key leave the cell empty") {
  ExperimentReport report;
  report.subcommand = "demo";
  report.add_record({{"a", 1}});
  report.add_record({{"b", 2}});
  std::ostringstream out;
  report.write_csv(out);
  const auto lines = lines_of(out.str());
  CHECK(lines[2] == "a,b");
  CHECK(lines[3] == "1,");
  CHECK(lines[4] == ",2");
}

TEST_CASE("nested record values are serialized json") {
  ExperimentReport report;
  report.subcommand = "demo";
  report.add_record({{"queries", {{"neighbor", 3}, {"degree", 1}}}});
  std::ostringstream out;
  report.write_csv(out);
  const auto lines = lines_of(out.str());
  // The nested object arrives quoted with its inner quotes doubled.
  CHECK(lines[3].find("\"{\"\"degree\"\":1,\"\"neighbor\"\":3}\"") !=
        std::string::npos);
}

TEST_CASE("report writes are byte-identical across calls") {
  const ExperimentReport report = sample_report();
  std::ostringstream a, b;
  report.write_jsonl(a);
  report.write_jsonl(b);
  CHECK(a.str() == b.str());
  std::ostringstream c, d;
  report.write_csv(c);
  report.write_csv(d);
  CHECK(c.str() == d.str());
}

TEST_CASE("write dispatches on format and rejects unknown names") {
  const ExperimentReport report = sample_report();
  std::ostringstream as_jsonl, direct_jsonl;
  report.write(as_jsonl, "jsonl");
  report.write_jsonl(direct_jsonl);
  CHECK(as_jsonl.str() == direct_jsonl.str());
  std::ostringstream as_csv, direct_csv;
  report.write(as_csv, "csv");
  report.write_csv(direct_csv);
  CHECK(as_csv.str() == direct_csv.str());
  std::ostringstream sink;
  CHECK_THROWS_AS(report.write(sink, "xml"), std::invalid_argument);
}

TEST_CASE("counter json carries every class and the total") {
  QueryCounter counter;
  counter.neighbor_queries = 5;
  counter.degree_queries = 2;
  counter.random_neighbor_queries = 1;
  const json j = counter_json(counter);
  CHECK(j.at("neighbor") == 5);
  CHECK(j.at("degree") == 2);
  CHECK(j.at("random_neighbor") == 1);
  CHECK(j.at("total") == 8);
}

TEST_CASE("ground truth json mirrors the optional fields") {
  GenSpec spec;
  spec.family = Family::star_forest;
  spec.n = 20;
  spec.seed = 3;
  const GroundTruth truth = generate(spec).truth;
  const json j = ground_truth_json(truth);
  CHECK(j.at("family") == "star_forest");
  CHECK(j.at("n") == 20);
  CHECK(j.at("seed") == 3);
  CHECK(j.at("is_hamiltonian") == false);
  CHECK(j.at("certified_ham_distance") == 9);
  CHECK(j.contains("msf_weight_micro"));
  CHECK(!j.contains("planted_ham_order"));  // none planted for star forests

  GenSpec grid_spec;
  grid_spec.family = Family::grid;
  grid_spec.n = 9;
  const GroundTruth grid_truth = generate(grid_spec).truth;
  const json gj = ground_truth_json(grid_truth);
  CHECK(gj.at("is_hamiltonian") == true);
  CHECK(gj.at("planted_ham_order").size() == 9);
}
