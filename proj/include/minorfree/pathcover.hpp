#ifndef MINORFREE_PATHCOVER_HPP
#define MINORFREE_PATHCOVER_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "minorfree/graph.hpp"

// Exact path-cover computations by bitmask dynamic programming.  These are
// the brute-force oracles the sublinear estimators and testers lean on; they
// are exact and certificate-producing, and they refuse inputs beyond their
// stated budgets instead of degrading silently.

namespace minorfree {

// Per-connected-piece ceiling for the subset DP.
inline constexpr std::uint32_t kPathCoverBudget = 22;
// Ceiling for the Hamiltonian-path endpoint DP.
inline constexpr std::uint32_t kHamPathBudget = 24;

class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::size_t offending_size)
      : std::runtime_error(what), offending_size_(offending_size) {}
  std::size_t offending_size() const { return offending_size_; }

 private:
  std::size_t offending_size_;
};

// A minimum path cover: vertex-disjoint paths (possibly singletons) covering
// every vertex, with consecutive vertices adjacent, of minimum count.
struct PathCoverCert {
  std::vector<std::vector<VertexId>> paths;
  std::size_t size() const { return paths.size(); }
};

// Exact minimum path cover via a (subset, open endpoint) DP maximizing the
// number of path edges, per connected component; throws BudgetError when a
// component exceeds kPathCoverBudget vertices.
PathCoverCert min_path_cover(const QueryGraph& g);

// Checks disjointness, coverage, and adjacency of consecutive vertices.
bool verify_path_cover(const QueryGraph& g, const PathCoverCert& cert);

// Distance to containing a Hamiltonian path: minimum path cover size - 1
// (connect the cover's paths end to end with that many new edges).
std::size_t ham_distance(const QueryGraph& g);

// Exact Hamiltonian-path existence via the endpoint-set DP; throws
// BudgetError above kHamPathBudget vertices.
bool has_hamiltonian_path(const QueryGraph& g);

// Per-subset exact tables for one small graph (n <= kPathCoverBudget): for
// every vertex subset T (as a bitmask), the minimum path cover of the
// induced subgraph G[T], whether G[T] is connected, and the number of edges
// inside T.  One pass costs O(2^n * n * d) and serves every subset at once,
// which is what the subset-sweeping Hamiltonicity witness check needs.
struct SubsetTables {
  std::uint32_t n = 0;
  std::vector<std::uint8_t> path_cover;    // [mask] -> pc(G[mask]); 0 for mask 0
  std::vector<char> connected;             // [mask] -> G[mask] connected (mask != 0)
  std::vector<std::uint16_t> edges_within; // [mask] -> |E(G[mask])|
};

SubsetTables subset_tables(const QueryGraph& g);

}  // namespace minorfree

#endif  // MINORFREE_PATHCOVER_HPP
