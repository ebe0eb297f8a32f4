#ifndef MINORFREE_GRAPH_HPP
#define MINORFREE_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "minorfree/rng.hpp"

// Query-access graph model: an immutable simple undirected graph behind a
// counted query interface (incidence lists, degrees, random neighbors), with
// deterministic edge ranking and exact weight tie-breaking.  Every other
// module touches graphs only through this interface.

namespace minorfree {

using VertexId = std::uint32_t;

// Weights are exact fixed-point numbers in units of 10^-6 ("micro units");
// every stored weight is >= 1, i.e. >= kWeightScale micro units.  Exact
// integers keep weight-then-rank comparison a strict total order with no
// rounding hazards.
using Weight = std::int64_t;
inline constexpr Weight kWeightScale = 1'000'000;

// Undirected edge in canonical orientation u < v.  The ranking over edges is
// the lexicographic order on the (u, v) pair; together with weights it makes
// every "lightest edge" unique.
struct EdgeRef {
  VertexId u = 0;
  VertexId v = 0;

  static EdgeRef canonical(VertexId a, VertexId b) {
    return a < b ? EdgeRef{a, b} : EdgeRef{b, a};
  }

  std::uint64_t rank() const {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend std::strong_ordering operator<=>(const EdgeRef& a, const EdgeRef& b) {
    return a.rank() <=> b.rank();
  }
};

struct QueryCounter {
  std::uint64_t neighbor_queries = 0;
  std::uint64_t degree_queries = 0;
  std::uint64_t random_neighbor_queries = 0;

  std::uint64_t total() const {
    return neighbor_queries + degree_queries + random_neighbor_queries;
  }
  void reset() { *this = QueryCounter{}; }
  QueryCounter& operator+=(const QueryCounter& o) {
    neighbor_queries += o.neighbor_queries;
    degree_queries += o.degree_queries;
    random_neighbor_queries += o.random_neighbor_queries;
    return *this;
  }
};

// Answer of a neighbor query; weight is kWeightScale (1.0) on unweighted
// graphs so weight-dependent code can treat every graph as weighted.
struct NeighborAnswer {
  VertexId vertex;
  Weight weight;
};

class QueryGraph {
 public:
  QueryGraph() = default;

  // Constructors validate simplicity (no self-loops, no parallel edges) and
  // the degree bound when one is declared; adjacency is stored sorted by
  // neighbor id, which fixes the incidence-list order for reproducibility.
  static QueryGraph from_edges(
      VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges,
      std::optional<std::uint32_t> degree_bound = std::nullopt);
  static QueryGraph from_weighted_edges(
      VertexId n,
      const std::vector<std::tuple<VertexId, VertexId, Weight>>& edges,
      std::optional<std::uint32_t> degree_bound = std::nullopt);

  VertexId n() const { return n_; }
  std::size_t m() const { return adj_.size() / 2; }
  bool weighted() const { return weighted_; }
  std::optional<std::uint32_t> degree_bound() const { return degree_bound_; }

  // --- Counted query interface -------------------------------------------

  std::uint32_t degree(VertexId v, QueryCounter* counter = nullptr) const;

  // i-th neighbor in stored (sorted-by-id) order, 1-based; empty answer when
  // deg(v) < i (the absent sentinel, not an error).
  std::optional<NeighborAnswer> neighbor(VertexId v, std::size_t i,
                                         QueryCounter* counter = nullptr) const;

  // Uniform neighbor under the supplied stream; throws on isolated vertices
  // (callers must check the degree first).
  VertexId random_neighbor(VertexId v, RngStream& stream,
                           QueryCounter* counter = nullptr) const;

  // --- Free (uncounted) accessors for exact oracles and tests ------------

  std::span<const VertexId> neighbors(VertexId v) const;
  std::span<const Weight> neighbor_weights(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  // Weight of an existing edge (kWeightScale on unweighted graphs); throws
  // if the edge is absent.
  Weight weight_of(VertexId u, VertexId v) const;
  Weight weight_of(EdgeRef e) const { return weight_of(e.u, e.v); }
  std::uint32_t max_degree() const;

  // All edges in rank order.
  std::vector<EdgeRef> edges() const;

 private:
  void check_vertex(VertexId v) const;
  void build(VertexId n,
             const std::vector<std::tuple<VertexId, VertexId, Weight>>& edges,
             bool weighted, std::optional<std::uint32_t> degree_bound);

  VertexId n_ = 0;
  bool weighted_ = false;
  std::optional<std::uint32_t> degree_bound_;
  std::vector<std::uint32_t> offset_;  // CSR offsets, size n_ + 1
  std::vector<VertexId> adj_;          // sorted within each vertex
  std::vector<Weight> weight_;         // parallel to adj_; empty if unweighted
};

// Strict total order on edges: by weight, ties broken by rank.  Never Equal
// for distinct edges, which is what makes the minimum spanning forest and
// every "lightest edge" choice unique.
std::strong_ordering compare_weight(const QueryGraph& g, EdgeRef e1,
                                    EdgeRef e2);

// Induced subgraph on a vertex set, with the local-to-parent relabeling map.
struct InducedSubgraph {
  QueryGraph graph;
  std::vector<VertexId> vertex_of;  // local id -> parent id, ascending

  std::optional<VertexId> local_of(VertexId parent_id) const;
};

// S may be unsorted; duplicates are rejected.  When a counter is supplied the
// materialization is charged as one degree query plus deg(v) neighbor queries
// per member (the cost of reading each incidence list).
InducedSubgraph induced_subgraph(const QueryGraph& g,
                                 const std::vector<VertexId>& S,
                                 QueryCounter* counter = nullptr);

// Exactly the edges with one endpoint in S, rank-sorted; same counting
// convention as induced_subgraph.
std::vector<EdgeRef> cut_edges(const QueryGraph& g,
                               const std::vector<VertexId>& S,
                               QueryCounter* counter = nullptr);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const QueryGraph& g);

// --- Text file format ----------------------------------------------------
//
// Header line: `n m [d] [weighted]`, then m lines `u v [weight]` with
// 0-based ids; weights are decimals with at most 6 fractional digits.  The
// loader validates vertex ranges, simplicity, the declared degree bound, and
// the edge count; the writer emits edges sorted by rank.

QueryGraph load_graph(const std::string& path);
void save_graph(const std::string& path, const QueryGraph& g);

std::string format_weight(Weight w);
Weight parse_weight(const std::string& text);

}  // namespace minorfree

#endif  // MINORFREE_GRAPH_HPP
