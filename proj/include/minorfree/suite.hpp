#ifndef MINORFREE_SUITE_HPP
#define MINORFREE_SUITE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "minorfree/generators.hpp"
#include "minorfree/oracles.hpp"
#include "minorfree/report.hpp"

// Experiment orchestration shared by the command-line tool and the tests:
// covering-oracle construction from option structs, suite-config parsing
// with diagnostics, deterministic grid expansion with seed de-duplication,
// and the suite executor.

namespace minorfree {

// Options for constructing a covering oracle.  Zero-valued knobs mean
// "derive a default": radius 0 becomes ceil(1/epsilon_prime), cap 0 becomes
// a mode-specific desk-scale bound, and zero walk knobs select the
// theory-scale formulas (which are infeasibly large on purpose — callers
// that want runnable walk oracles must set the knobs and acknowledge the
// scaled mode).
struct OracleOptions {
  std::string mode = "ball";  // ball | exhaustive | walk
  double epsilon_prime = 0.0;  // 0: derived by the calling task
  std::uint32_t radius = 0;        // ball: BFS depth
  std::uint64_t cap = 0;           // ball / walk: size cap
  std::uint64_t part_size = 12;    // exhaustive: part-size bound
  std::uint64_t ell = 0;           // walk: base length
  std::uint64_t walks_per_length = 0;
  int max_walk_length_exp = 0;
  std::uint64_t seed = 0;

  std::uint32_t resolved_radius() const;
  std::uint64_t resolved_cap() const;
  // True when the options deviate from the theory-scale formulas (walk mode
  // with explicit knobs); ball and exhaustive are baselines and never scaled.
  bool scaled() const;
};

std::unique_ptr<CoveringOracle> make_cover_oracle(const QueryGraph& g,
                                                  const OracleOptions& opts);

// One experiment grid: family x ns x seeds, executed deterministically.
struct SuiteConfig {
  std::string task = "spanner-queries";  // spanner-queries | test-ham | property-test
  Family family = Family::grid;
  std::vector<VertexId> ns;
  std::vector<std::uint64_t> seeds;  // de-duplicated, first occurrence kept
  double epsilon = 0.5;
  bool weighted = false;
  std::uint32_t wmax = 1;
  std::size_t edges_per_instance = 200;  // spanner-queries: edge sample size
  std::string mode = "one-sided";        // test-ham: one-sided | tolerant | exact
  std::size_t runs = 1;                  // repeats per instance
  std::string property = "bipartite";
  OracleOptions oracle;
};

struct SuiteRunSpec {
  std::size_t index = 0;
  VertexId n = 0;
  std::uint64_t seed = 0;
};

// Parses and validates a JSON suite config.  Parse errors and schema
// violations throw std::invalid_argument naming the offending line or
// field; duplicate seeds are dropped with a warning appended to *warnings.
SuiteConfig parse_suite_config(const std::string& text,
                               std::vector<std::string>* warnings);

// Cartesian ns x seeds in declared order; empty if either list is empty.
std::vector<SuiteRunSpec> expand_grid(const SuiteConfig& cfg);

// Executes the grid and returns the full report (deterministic: identical
// config produces byte-identical records).
ExperimentReport run_suite(const SuiteConfig& cfg);

}  // namespace minorfree

#endif  // MINORFREE_SUITE_HPP
