#ifndef MINORFREE_PROPERTY_HPP
#define MINORFREE_PROPERTY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minorfree/graph.hpp"
#include "minorfree/oracles.hpp"

// Generic one-sided tester for monotone and additive graph properties over a
// covering oracle, with bipartiteness as the bundled decider.  Monotone
// (closed under edge removal) plus additive (closed under disjoint union)
// makes every induced-subgraph violation a certificate for the whole graph,
// which is what keeps the tester one-sided.

namespace minorfree {

struct PropertyDecider {
  std::string name;
  // Deterministic decision on a materialized (small) graph.
  std::function<bool(const QueryGraph&)> holds;
  bool monotone = false;
  bool additive = false;
};

// Two-colorability by BFS per component; monotone and additive.
PropertyDecider bipartite_decider();

struct PropertyTestResult {
  bool accepted = true;
  // On rejection: the sampled vertex and its cover, whose induced subgraph
  // violates the property (re-checkable by the decider).
  std::optional<VertexId> witness_vertex;
  std::vector<VertexId> witness_cover;
  std::uint64_t samples = 0;
  QueryCounter queries;
};

// Sample ceil(c * d / epsilon) vertices; per sample, take the covering
// oracle's answer and reject iff the induced subgraph of some cover violates
// the property.  Requires a declared degree bound and a monotone, additive
// decider.  The covering oracle is expected to be configured at parameter
// epsilon/2.
PropertyTestResult test_property(const QueryGraph& g,
                                 const PropertyDecider& decider,
                                 double epsilon,
                                 const CoveringOracle& oracle,
                                 std::uint64_t seed,
                                 std::uint64_t sample_constant = 4);

}  // namespace minorfree

#endif  // MINORFREE_PROPERTY_HPP
