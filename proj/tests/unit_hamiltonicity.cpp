// Hamiltonicity testing: the distance estimator's accuracy on instances with
// known distance, the tolerant wrapper's verdicts, cut-bound certificates,
// witness verification, and the one-sided tester's soundness.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"

#include "minorfree/generators.hpp"
#include "minorfree/graph.hpp"
#include "minorfree/hamiltonicity.hpp"
#include "minorfree/oracles.hpp"
#include "minorfree/pathcover.hpp"

using namespace minorfree;

namespace {

GeneratedInstance make(Family family, std::uint32_t n, std::uint64_t seed) {
  GenSpec spec;
  spec.family = family;
  spec.n = n;
  spec.seed = seed;
  return generate(spec);
}

}  // namespace

TEST_CASE("estimator is near zero on a hamiltonian grid") {
  const QueryGraph g = make(Family::grid, 144, 1).graph;
  EstimatorConfig cfg;
  cfg.epsilon = 0.25;
  int good = 0;
  for (std::uint64_t seed = 0; seed < 9; ++seed) {
    cfg.seed = seed;
    const HamEstimate est = estimate_ham_distance(g, cfg);
    // True distance is 0; the guarantee is +-epsilon*n = 36.
    if (est.value <= 36.0) ++good;
    CHECK(est.sample_size == 64);  // ceil(4 / 0.25^2)
    for (const double x : est.x_values) {
      CHECK(x > 0.0);
      CHECK(x <= 1.0);
    }
  }
  CHECK(good >= 6);  // per-run guarantee holds with probability >= 2/3
}

TEST_CASE("estimator is exact on isolated vertices") {
  // 100 isolated vertices: every part is a singleton with path cover 1, so
  // every sampled x equals 1 and the estimate is exactly n.
  const QueryGraph g = QueryGraph::from_edges(100, {}, std::nullopt);
  EstimatorConfig cfg;
  cfg.epsilon = 0.5;
  cfg.seed = 3;
  const HamEstimate est = estimate_ham_distance(g, cfg);
  CHECK(est.value == doctest::Approx(100.0));
}

TEST_CASE("estimator tracks the distance on a star forest") {
  // Stars of four: true distance 9 at n = 20 scale; here n = 100 gives
  // distance 49 (25 stars, cover 2 each, minus 1).
  const QueryGraph g = make(Family::star_forest, 100, 5).graph;
  REQUIRE(ham_distance(g) + 0 == 49);
  EstimatorConfig cfg;
  cfg.epsilon = 0.25;
  int good = 0;
  for (std::uint64_t seed = 0; seed < 9; ++seed) {
    cfg.seed = seed;
    const HamEstimate est = estimate_ham_distance(g, cfg);
    // Estimator tracks pc = 50 within +-epsilon*n = 25.
    if (est.value >= 25.0 && est.value <= 75.0) ++good;
  }
  CHECK(good >= 6);
}

TEST_CASE("estimator rejects oversized part bounds") {
  const QueryGraph g = make(Family::grid, 25, 1).graph;
  EstimatorConfig cfg;
  cfg.part_size = 23;  // beyond the exact path-cover budget
  CHECK_THROWS_AS(estimate_ham_distance(g, cfg), std::invalid_argument);
}

TEST_CASE("tolerant wrapper accepts near and rejects far") {
  EstimatorConfig cfg;

  const QueryGraph grid = make(Family::grid, 100, 2).graph;
  int accepts = 0;
  for (std::uint64_t seed = 0; seed < 9; ++seed) {
    cfg.seed = seed;
    const TolerantResult res = tolerant_test_ham(grid, 0.4, cfg);
    CHECK(res.threshold == doctest::Approx(0.75 * 0.4 * 100));
    if (res.accepted) ++accepts;
  }
  CHECK(accepts >= 6);

  // Star forest at n = 60: distance 29, far beyond 0.2 * 60 = 12.
  const QueryGraph stars = make(Family::star_forest, 60, 4).graph;
  REQUIRE(ham_distance(stars) == 29);
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 9; ++seed) {
    cfg.seed = seed;
    if (!tolerant_test_ham(stars, 0.2, cfg).accepted) ++rejects;
  }
  CHECK(rejects >= 6);

  // At epsilon = 1 every graph is 1-close (any order needs < n edges).
  cfg.seed = 0;
  CHECK(tolerant_test_ham(stars, 1.0, cfg).accepted);
}

TEST_CASE("cut bound certificates on hand instances") {
  // Two triangles joined by one edge: T = one triangle has pc 1, cut 1 — no
  // violation.
  const QueryGraph bowtie = QueryGraph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}},
      std::nullopt);
  const CutBoundCheck ok = cut_bound_witness(bowtie, {0, 1, 2});
  CHECK(!ok.violation);
  CHECK(ok.path_cover == 1);
  CHECK(ok.cut_size == 1);

  // Star with five leaves: T = leaves has pc 5 and cut 5; 2*(5-1) > 5.
  const QueryGraph star = QueryGraph::from_edges(
      6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}, std::nullopt);
  const CutBoundCheck bad = cut_bound_witness(star, {1, 2, 3, 4, 5});
  CHECK(bad.violation);
  CHECK(bad.path_cover == 5);
  CHECK(bad.cut_size == 5);

  // T = V on a Hamiltonian path: pc 1, cut 0, no violation.
  const QueryGraph p4 = QueryGraph::from_edges(
      4, {{0, 1}, {1, 2}, {2, 3}}, std::nullopt);
  const CutBoundCheck whole = cut_bound_witness(p4, {0, 1, 2, 3});
  CHECK(!whole.violation);
}

TEST_CASE("one-sided tester never rejects hamiltonian instances") {
  for (const std::uint32_t n : {64u, 100u}) {
    const QueryGraph g = make(Family::grid, n, 7).graph;
    const BallCoverOracle ball(g, 2, 13);
    const ExhaustiveCoverOracle exhaustive(g, 1.0 / 12.0, 12);
    for (const CoveringOracle* oracle :
         {static_cast<const CoveringOracle*>(&ball),
          static_cast<const CoveringOracle*>(&exhaustive)}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const OneSidedResult res = test_ham_one_sided(g, 0.5, *oracle, seed);
        CHECK(res.accepted);
        CHECK(!res.witness.has_value());
        CHECK(res.samples >= 1);
      }
    }
  }
}

TEST_CASE("one-sided tester rejects far instances with verified witnesses") {
  // Fifty disjoint 4-paths: any radius-2 ball around a path endpoint is the
  // whole path, which has an empty cut.
  GenSpec spec;
  spec.family = Family::disjoint_paths;
  spec.n = 200;
  spec.path_len = 4;
  const QueryGraph g = generate(spec).graph;
  const BallCoverOracle ball(g, 2, 13);
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 9; ++seed) {
    const OneSidedResult res = test_ham_one_sided(g, 0.5, ball, seed);
    if (!res.accepted) {
      ++rejects;
      REQUIRE(res.witness.has_value());
      CHECK(verify_witness(g, *res.witness));
      CHECK(res.witness->kind == HamWitness::Kind::empty_cut);
    }
  }
  CHECK(rejects >= 6);

  // Star forest: rejection via the cut bound or an empty cut, depending on
  // where the sample lands; every witness must verify.
  const QueryGraph stars = make(Family::star_forest, 40, 6).graph;
  const BallCoverOracle star_ball(stars, 2, 13);
  int star_rejects = 0;
  for (std::uint64_t seed = 0; seed < 9; ++seed) {
    const OneSidedResult res = test_ham_one_sided(stars, 0.2, star_ball, seed);
    if (!res.accepted) {
      ++star_rejects;
      REQUIRE(res.witness.has_value());
      CHECK(verify_witness(stars, *res.witness));
    }
  }
  CHECK(star_rejects >= 6);
}

TEST_CASE("witness verification rejects tampering") {
  GenSpec spec;
  spec.family = Family::disjoint_paths;
  spec.n = 40;
  spec.path_len = 4;
  const QueryGraph g = generate(spec).graph;
  const BallCoverOracle ball(g, 2, 13);
  HamWitness genuine;
  bool found = false;
  for (std::uint64_t seed = 0; seed < 20 && !found; ++seed) {
    const OneSidedResult res = test_ham_one_sided(g, 0.5, ball, seed);
    if (!res.accepted) {
      genuine = *res.witness;
      found = true;
    }
  }
  REQUIRE(found);
  REQUIRE(verify_witness(g, genuine));

  HamWitness wrong_kind = genuine;
  wrong_kind.kind = HamWitness::Kind::cut_bound;
  wrong_kind.subset = genuine.cover;
  CHECK(!verify_witness(g, wrong_kind));

  // An empty-cut claim about a set with outgoing edges must fail: take a
  // proper prefix of one path.
  HamWitness partial = genuine;
  REQUIRE(partial.cover.size() == 4);
  partial.cover.pop_back();
  CHECK(!verify_witness(g, partial));

  // A fabricated whole-graph claim on a non-cover set must fail too.
  HamWitness fake_whole = genuine;
  fake_whole.kind = HamWitness::Kind::whole_graph_cover;
  CHECK(!verify_witness(g, fake_whole));
}

TEST_CASE("witness kind names are stable strings") {
  CHECK(witness_kind_name(HamWitness::Kind::empty_cut) == "empty-cut");
  CHECK(witness_kind_name(HamWitness::Kind::cut_bound) == "cut-bound");
  CHECK(witness_kind_name(HamWitness::Kind::whole_graph_cover) ==
        "whole-graph-cover");
}

TEST_CASE("one-sided tester reports budget errors on oversized covers") {
  const QueryGraph g = make(Family::grid, 400, 3).graph;
  // Radius-4 balls on an interior grid vertex hold up to 41 vertices — far
  // beyond the 22-vertex subset-sweep ceiling — and the cap keeps them big.
  const BallCoverOracle big(g, 4, 41);
  CHECK_THROWS_AS(test_ham_one_sided(g, 0.5, big, 1), BudgetError);
}
