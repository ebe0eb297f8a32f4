#ifndef MINORFREE_SPANNING_HPP
#define MINORFREE_SPANNING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "minorfree/graph.hpp"
#include "minorfree/oracles.hpp"

// Approximate minimum-spanning-graph machinery: the exact Kruskal oracle,
// controlled Boruvka sub-partitioning of a part, cluster sampling, the
// global construction, and the two local per-edge algorithms (bounded and
// unbounded degree).  The local algorithms answer per-edge membership
// queries consistently with one fixed spanning subgraph determined by
// (graph, config, seed) alone.

namespace minorfree {

struct MsfResult {
  std::vector<EdgeRef> edges;  // rank-sorted
  Weight total_weight = 0;     // micro units
};

// The unique minimum spanning forest under weight-then-rank comparison.
MsfResult kruskal_msf(const QueryGraph& g);

// Parameters of the spanning machinery.  Derived quantities follow the
// formulas Delta = 6 r^2 W / eps (heavy-degree threshold), eps/(6W) (the
// partition budget for the light subgraph), and
// q = ceil(8 W^2 r^3 x Delta ln(n) / eps^2) (cluster sample size, always
// capped at the center's degree).  Overrides exist for desk-scale runs where
// the formula values degenerate (e.g. a threshold larger than any degree);
// any override marks the config as scaled.
struct SpanConfig {
  double epsilon = 0.5;
  std::uint32_t W = 1;  // weight upper bound in whole units
  int r = 10;           // excluded-minor edge count
  std::uint64_t seed = 0;

  // 0 = use the formula value.
  std::uint64_t heavy_threshold_override = 0;
  std::uint64_t part_bound_override = 0;
  std::uint64_t sample_size_override = 0;

  bool scaled() const {
    return heavy_threshold_override != 0 || part_bound_override != 0 ||
           sample_size_override != 0;
  }

  // Degree threshold separating heavy from light vertices.
  std::uint64_t heavy_threshold() const;
  // Partition budget for the light subgraph.
  double oracle_param() const;
  // Part-size bound x handed to the partition baseline.
  std::uint64_t part_bound() const;
  // Cluster sample size for a center of the given degree (never above it).
  std::uint64_t sample_size(std::uint64_t n, std::uint64_t center_degree) const;
};

// Result of the controlled Boruvka loop on one part S: a spanning forest
// (S, A) whose trees are the sub-parts, plus each sub-part's chosen link to
// the heavy set (the lightest edge in E(sub-part, H), when one exists) and
// its center (that edge's heavy endpoint).
struct SubpartForest {
  std::vector<VertexId> part;       // S, sorted
  std::vector<EdgeRef> tree_edges;  // A, rank-sorted
  std::vector<int> subpart_of;      // parallel to part
  int subpart_count = 0;
  std::vector<std::optional<VertexId>> center;     // per sub-part
  std::vector<std::optional<EdgeRef>> center_link; // per sub-part
  int rounds = 0;

  // Sub-part id of a part member; -1 for vertices outside the part.
  int subpart_index(VertexId v) const;
  bool has_tree_edge(EdgeRef e) const;
};

// Controlled Boruvka on the part S against heavy-indicator `heavy` (size n).
// Per round, every active sub-part B contributes the lightest edge of
// E(B, S\B) and components are recomputed; B is active while that edge is
// lighter than B's lightest edge into H (or B has no edge into H at all) —
// and only while E(B, S\B) is nonempty.  Deterministic; throws
// std::invalid_argument when G[S] is disconnected or S touches H.
SubpartForest subparts(const QueryGraph& g, const std::vector<VertexId>& S,
                       const std::vector<char>& heavy, const SpanConfig& cfg);

// Shared, lazily populated state for one (graph, config) pair: the
// heavy/light split, the materialized partition of the light subgraph, per-
// part sub-part forests, and memoized cluster samples.  Both the global
// construction and the unbounded local algorithm read through this, which is
// what makes their answers agree edge by edge.
class SpannerContext {
 public:
  SpannerContext(const QueryGraph& g, const SpanConfig& cfg);

  const QueryGraph& graph() const { return *g_; }
  const SpanConfig& config() const { return cfg_; }

  bool is_heavy(VertexId v) const { return heavy_[v] != 0; }
  const std::vector<char>& heavy_mask() const { return heavy_; }
  std::size_t heavy_count() const { return heavy_count_; }

  // Part id of a light vertex; -1 for heavy vertices.
  int part_id(VertexId v) const { return part_of_[v]; }
  const std::vector<VertexId>& part(int part_id) const {
    return parts_[static_cast<std::size_t>(part_id)];
  }
  std::size_t part_count() const { return parts_.size(); }
  std::uint64_t partition_cut_count() const { return partition_cut_count_; }

  const SubpartForest& forest(int part_id);

  // Cluster key of a vertex: itself when heavy, its sub-part's center when
  // light (empty for light vertices in parts with no edge into H).
  std::optional<VertexId> cluster_key(VertexId v);
  // The designated link edge of a light vertex's sub-part.
  std::optional<EdgeRef> center_link_of(VertexId v);

  // Memoized cluster sampling between two distinct heavy centers.
  std::optional<EdgeRef> sampled_lightest(VertexId a, VertexId b,
                                          QueryCounter* counter);

 private:
  const QueryGraph* g_;
  SpanConfig cfg_;
  std::vector<char> heavy_;
  std::size_t heavy_count_ = 0;
  std::vector<int> part_of_;                // -1 for heavy vertices
  std::vector<std::vector<VertexId>> parts_;
  std::uint64_t partition_cut_count_ = 0;
  std::vector<std::unique_ptr<SubpartForest>> forests_;
  std::map<std::uint64_t, std::optional<EdgeRef>> sample_memo_;
};

// Sampled lightest edge between the clusters of heavy centers a and b, or
// empty when the sample finds none.  Per direction, q = sample_size(...)
// incident edges of the center are drawn (the full incidence list when q
// reaches its degree); a sampled heavy neighbor contributes {center, other}
// only when it is the opposite center, and a sampled light neighbor u
// contributes, depending on the center of u's sub-part: every edge between
// u's sub-part and the opposite cluster (own center), or the sampled edge
// itself (opposite center), or nothing.  Draw streams are keyed by
// (seed, center, draw index), so answers never depend on query order.
std::optional<EdgeRef> sample_lightest(const QueryGraph& g, VertexId a,
                                       VertexId b, const SpanConfig& cfg,
                                       SpannerContext& ctx,
                                       QueryCounter* counter = nullptr);

// Output of the global construction, with the per-step breakdown the
// structural checks need.
struct GlobalBuild {
  std::vector<EdgeRef> edges;  // E', rank-sorted
  Weight total_weight = 0;
  std::uint64_t heavy_edge_count = 0;     // edges inside the heavy set
  std::uint64_t partition_cut_count = 0;  // edges between different parts
  std::vector<EdgeRef> forest_edges;      // sub-part trees plus center links
  std::vector<EdgeRef> sampled_edges;     // inter-cluster additions
};

// The full construction: heavy-set edges, partition cut edges, per-part
// sub-part forests with their center links, and one sampled lightest edge
// per adjacent cluster pair (an inter-cluster edge joins E' when the sample
// returns nothing or nothing lighter).
GlobalBuild build_global(const QueryGraph& g, const SpanConfig& cfg);

// Per-edge answer of a local algorithm plus which rule decided it.
struct SpannerDecision {
  EdgeRef edge;
  bool yes = false;
  const char* rule = "";
};

// Bounded-degree local algorithm: cover u and v, and answer NO exactly when
// e is the heaviest edge of some cycle inside the induced union — i.e. when
// its endpoints are connected by strictly lighter edges there.
SpannerDecision local_edge_bounded(const QueryGraph& g, EdgeRef e,
                                   const SpanConfig& cfg,
                                   const CoveringOracle& oracle,
                                   QueryCounter* counter = nullptr);

// Unbounded-degree local algorithm; reproduces membership in build_global's
// edge set under the same config and seed.
SpannerDecision local_edge_unbounded(const QueryGraph& g, EdgeRef e,
                                     const SpanConfig& cfg,
                                     SpannerContext& ctx,
                                     QueryCounter* counter = nullptr);

}  // namespace minorfree

#endif  // MINORFREE_SPANNING_HPP
