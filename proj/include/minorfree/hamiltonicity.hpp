#ifndef MINORFREE_HAMILTONICITY_HPP
#define MINORFREE_HAMILTONICITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minorfree/graph.hpp"
#include "minorfree/oracles.hpp"
#include "minorfree/pathcover.hpp"

// Hamiltonicity testing: the two-sided distance estimator for general
// (unbounded-degree) graphs, its tolerant accept/reject wrapper, and the
// one-sided tester for bounded-degree graphs whose every rejection carries a
// machine-checkable non-Hamiltonicity witness.

namespace minorfree {

// Configuration of the distance estimator.  The heavy-degree threshold is
// 8 * r_arb / epsilon (r_arb = arboricity bound of the minor-free family);
// the light subgraph is partitioned by the exhaustive baseline at parameter
// epsilon / 4 with the given part-size bound, and y = ceil(c / epsilon^2)
// vertices are sampled.
struct EstimatorConfig {
  double epsilon = 0.25;
  int r_arb = 10;
  std::uint64_t seed = 0;
  std::uint64_t sample_constant = 4;
  // Part-size bound for the baseline partition; must stay within the exact
  // path-cover budget since every part's path cover is computed exactly.
  std::uint64_t part_size = 12;
  std::uint64_t heavy_threshold_override = 0;  // 0 = use the formula

  std::uint64_t heavy_threshold() const;
};

struct HamEstimate {
  double value = 0;                 // estimated distance to Hamiltonicity
  std::uint64_t sample_size = 0;    // y
  std::vector<double> x_values;     // per-sample contributions, each in (0,1]
  double epsilon = 0;
  std::uint64_t heavy_threshold = 0;
  std::uint64_t partition_cut_count = 0;
  QueryCounter queries;
};

// Distance estimator: heavy vertices contribute 1, a light vertex v
// contributes pc(G[S_v]) / |S_v| for its part S_v of the light subgraph, and
// the estimate is (sum of contributions / y) * n.  The estimate tracks the
// minimum path-cover count, which is within one of the distance; the
// +-epsilon*n guarantee absorbs the off-by-one.  Throws BudgetError when a
// part exceeds the exact path-cover budget.
HamEstimate estimate_ham_distance(const QueryGraph& g,
                                  const EstimatorConfig& cfg);

struct TolerantResult {
  bool accepted = false;
  double threshold = 0;  // accept iff estimate < threshold = (3/4) epsilon n
  HamEstimate estimate;
};

// Tolerant wrapper: estimate at parameter epsilon/8 and accept iff the
// estimate is below (3/4) * epsilon * n.  Accepts epsilon/2-close graphs and
// rejects epsilon-far ones, each with probability >= 2/3.
TolerantResult tolerant_test_ham(const QueryGraph& g, double epsilon,
                                 EstimatorConfig cfg);

struct CutBoundCheck {
  bool violation = false;
  std::size_t path_cover = 0;  // pc(G[T])
  std::uint64_t cut_size = 0;  // |E(T, V\T)|
};

// The cut-bound certificate: a vertex set T with
// pc(G[T]) - 1 > |E(T, V\T)| / 2 proves no Hamiltonian path exists (a
// Hamiltonian path enters and leaves T at most cut-size times).
CutBoundCheck cut_bound_witness(const QueryGraph& g,
                                const std::vector<VertexId>& T);

struct HamWitness {
  enum class Kind {
    empty_cut,         // S != V with no outgoing edge: G is disconnected
    cut_bound,         // subset T violating the cut bound
    whole_graph_cover  // cover was all of V and pc(G) > 1
  };
  Kind kind = Kind::empty_cut;
  VertexId sample_vertex = 0;
  std::vector<VertexId> cover;   // S_v
  std::vector<VertexId> subset;  // violating T (cut_bound only)
  std::size_t path_cover = 0;
  std::uint64_t cut_size = 0;
};

std::string witness_kind_name(HamWitness::Kind kind);

// Re-derives the rejection from its witness against the graph; every
// rejection must survive this check.
bool verify_witness(const QueryGraph& g, const HamWitness& w);

struct OneSidedResult {
  bool accepted = true;
  std::optional<HamWitness> witness;
  std::uint64_t samples = 0;
  QueryCounter queries;
};

// One-sided tester for bounded-degree graphs: sample
// y = ceil(c * x / epsilon) vertices (x = the oracle's cover-size bound);
// per sample, query the covering oracle and reject when the cover S has no
// outgoing edge while S != V (if S = V, decide by the exact path cover of
// the whole graph), or when some connected T inside S violates the cut
// bound.  Never rejects a graph containing a Hamiltonian path.  The subset
// sweep enumerates connected subsets of S and throws BudgetError beyond
// `subset_budget` of them (or when |S| exceeds the subset-table budget).
//
// The covering oracle is expected to be configured at parameter epsilon/6.
OneSidedResult test_ham_one_sided(const QueryGraph& g, double epsilon,
                                  const CoveringOracle& oracle,
                                  std::uint64_t seed,
                                  std::uint64_t sample_constant = 4,
                                  std::uint64_t subset_budget = 2'000'000);

}  // namespace minorfree

#endif  // MINORFREE_HAMILTONICITY_HPP
