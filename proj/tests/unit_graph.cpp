// Query-graph model: neighbor/degree/random-neighbor queries with counting,
// the total order over edges, induced subgraphs, cut edges, and the text
// file format.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"

#include "minorfree/generators.hpp"
#include "minorfree/graph.hpp"
#include "minorfree/rng.hpp"

using namespace minorfree;

namespace {

QueryGraph four_cycle() {
  return QueryGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
                                std::nullopt);
}

}  // namespace

TEST_CASE("neighbor queries return the i-th neighbor or nothing") {
  const QueryGraph g = four_cycle();
  QueryCounter c;
  const auto first = g.neighbor(0, 1, &c);
  REQUIRE(first.has_value());
  CHECK(first->vertex == 1);
  CHECK(!g.neighbor(0, 3, &c).has_value());
  CHECK(c.neighbor_queries == 2);
  CHECK_THROWS_AS(g.neighbor(9, 1, &c), std::invalid_argument);
  CHECK_THROWS_AS(g.neighbor(0, 0, &c), std::invalid_argument);
}

TEST_CASE("weighted neighbor queries carry the weight") {
  const QueryGraph g = QueryGraph::from_weighted_edges(
      3, {{0, 1, kWeightScale}, {1, 2, 2 * kWeightScale},
          {0, 2, 3 * kWeightScale}},
      std::nullopt);
  const auto a = g.neighbor(0, 1, nullptr);
  REQUIRE(a.has_value());
  CHECK(a->vertex == 1);
  CHECK(a->weight == kWeightScale);
  CHECK(g.weight_of(1, 2) == 2 * kWeightScale);
  CHECK(g.weight_of(EdgeRef::canonical(2, 0)) == 3 * kWeightScale);
}

TEST_CASE("unweighted graphs report unit weights") {
  const QueryGraph g = four_cycle();
  CHECK(!g.weighted());
  CHECK(g.weight_of(0, 1) == kWeightScale);
  CHECK(g.neighbor(0, 1, nullptr)->weight == kWeightScale);
}

TEST_CASE("random neighbor draws are uniform over a star") {
  const QueryGraph g =
      QueryGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}, std::nullopt);
  RngStream stream = make_stream(5, "star-draws");
  std::map<VertexId, int> freq;
  QueryCounter c;
  for (int i = 0; i < 3000; ++i) ++freq[g.random_neighbor(0, stream, &c)];
  CHECK(c.random_neighbor_queries == 3000);
  for (const VertexId leaf : {1u, 2u, 3u}) {
    CHECK(freq[leaf] >= 900);
    CHECK(freq[leaf] <= 1100);
  }
}

TEST_CASE("random neighbor of a degree-1 vertex is its unique neighbor") {
  const QueryGraph g = QueryGraph::from_edges(3, {{0, 1}}, std::nullopt);
  RngStream stream = make_stream(1, "deg1");
  for (int i = 0; i < 10; ++i) CHECK(g.random_neighbor(1, stream) == 0);
  CHECK_THROWS_AS(g.random_neighbor(2, stream), std::invalid_argument);
}

TEST_CASE("compare_weight orders by weight then rank") {
  const QueryGraph g = QueryGraph::from_weighted_edges(
      4,
      {{0, 1, 2 * kWeightScale},
       {1, 2, 3 * kWeightScale},
       {2, 3, 2 * kWeightScale}},
      std::nullopt);
  const EdgeRef e01 = EdgeRef::canonical(0, 1);
  const EdgeRef e12 = EdgeRef::canonical(1, 2);
  const EdgeRef e23 = EdgeRef::canonical(2, 3);
  CHECK(compare_weight(g, e01, e12) == std::strong_ordering::less);
  CHECK(compare_weight(g, e12, e01) == std::strong_ordering::greater);
  // Equal weights fall back to the id-pair order.
  CHECK(compare_weight(g, e01, e23) == std::strong_ordering::less);
  CHECK(compare_weight(g, e01, e01) == std::strong_ordering::equal);
}

TEST_CASE("compare_weight is a strict total order on a full instance") {
  GenSpec spec;
  spec.family = Family::grid;
  spec.n = 16;
  spec.seed = 9;
  spec.weighted = true;
  spec.wmax = 3;
  const QueryGraph g = generate(spec).graph;
  const std::vector<EdgeRef> edges = g.edges();
  REQUIRE(edges.size() <= 24);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const auto ij = compare_weight(g, edges[i], edges[j]);
      const auto ji = compare_weight(g, edges[j], edges[i]);
      if (i == j) {
        CHECK(ij == std::strong_ordering::equal);
      } else {
        CHECK(ij != std::strong_ordering::equal);
        CHECK((ij == std::strong_ordering::less) ==
              (ji == std::strong_ordering::greater));
      }
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (ij == std::strong_ordering::less &&
            compare_weight(g, edges[j], edges[k]) ==
                std::strong_ordering::less) {
          CHECK(compare_weight(g, edges[i], edges[k]) ==
                std::strong_ordering::less);
        }
      }
    }
  }
}

TEST_CASE("neighbor lists are symmetric") {
  GenSpec spec;
  spec.family = Family::apollonian;
  spec.n = 50;
  spec.seed = 4;
  const QueryGraph g = generate(spec).graph;
  for (VertexId v = 0; v < g.n(); ++v) {
    for (const VertexId u : g.neighbors(v)) {
      const auto row = g.neighbors(u);
      CHECK(std::find(row.begin(), row.end(), v) != row.end());
    }
  }
}

TEST_CASE("induced subgraphs keep internal edges and relabel") {
  const QueryGraph path = QueryGraph::from_edges(3, {{0, 1}, {1, 2}},
                                                 std::nullopt);
  const InducedSubgraph isolated = induced_subgraph(path, {0, 2});
  CHECK(isolated.graph.n() == 2);
  CHECK(isolated.graph.m() == 0);

  const QueryGraph tri =
      QueryGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}, std::nullopt);
  const InducedSubgraph whole = induced_subgraph(tri, {0, 1, 2});
  CHECK(whole.graph.m() == 3);

  const InducedSubgraph sub = induced_subgraph(four_cycle(), {0, 1, 2});
  CHECK(sub.graph.n() == 3);
  CHECK(sub.graph.m() == 2);
  CHECK(sub.vertex_of == std::vector<VertexId>{0, 1, 2});
  CHECK(sub.local_of(1) == 1);
  CHECK(!sub.local_of(3).has_value());
}

TEST_CASE("cut_edges finds exactly the crossing edges") {
  const QueryGraph g = four_cycle();
  CHECK(cut_edges(g, {0, 1}).size() == 2);
  CHECK(cut_edges(g, {0, 1, 2, 3}).empty());
  CHECK(cut_edges(g, {}).empty());
}

TEST_CASE("query counters replay identically under a fixed seed") {
  GenSpec spec;
  spec.family = Family::grid;
  spec.n = 36;
  spec.seed = 2;
  const QueryGraph g = generate(spec).graph;
  const auto probe = [&g]() {
    QueryCounter c;
    RngStream stream = make_stream(17, "counter-replay");
    for (int i = 0; i < 50; ++i) {
      const VertexId v = static_cast<VertexId>(stream.below(g.n()));
      const std::uint32_t deg = g.degree(v, &c);
      for (std::uint32_t j = 1; j <= deg; ++j) g.neighbor(v, j, &c);
      if (deg > 0) g.random_neighbor(v, stream, &c);
    }
    return c;
  };
  const QueryCounter a = probe();
  const QueryCounter b = probe();
  CHECK(a.neighbor_queries == b.neighbor_queries);
  CHECK(a.degree_queries == b.degree_queries);
  CHECK(a.random_neighbor_queries == b.random_neighbor_queries);
  CHECK(a.total() == a.neighbor_queries + a.degree_queries +
                         a.random_neighbor_queries);
}

TEST_CASE("graph files round-trip including weights and degree bound") {
  GenSpec spec;
  spec.family = Family::cycle_chords_planar;
  spec.n = 30;
  spec.seed = 8;
  spec.weighted = true;
  spec.wmax = 5;
  const QueryGraph g = generate(spec).graph;
  const std::string path = "/tmp/minorfree_roundtrip.graph";
  save_graph(path, g);
  const QueryGraph back = load_graph(path);
  CHECK(back.n() == g.n());
  CHECK(back.m() == g.m());
  CHECK(back.weighted() == g.weighted());
  CHECK(back.degree_bound() == g.degree_bound());
  for (const EdgeRef& e : g.edges()) {
    CHECK(back.has_edge(e.u, e.v));
    CHECK(back.weight_of(e) == g.weight_of(e));
  }
  // Deterministic writer: saving the loaded graph reproduces the file.
  const std::string path2 = "/tmp/minorfree_roundtrip2.graph";
  save_graph(path2, back);
  std::ifstream f1(path);
  std::ifstream f2(path2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  std::remove(path.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("loader rejects malformed input") {
  const std::string path = "/tmp/minorfree_badgraph.graph";
  {
    std::ofstream out(path);
    out << "3 1\n0 0\n";  // self-loop
  }
  CHECK_THROWS_AS(load_graph(path), std::runtime_error);
  {
    std::ofstream out(path);
    out << "2 1 weighted\n0 1\n";  // missing weight
  }
  CHECK_THROWS_AS(load_graph(path), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("connected_components lists sorted components by smallest member") {
  const QueryGraph g = QueryGraph::from_edges(
      5, {{0, 1}, {3, 4}}, std::nullopt);
  const auto comp = connected_components(g);
  REQUIRE(comp.size() == 3);
  CHECK(comp[0] == std::vector<VertexId>{0, 1});
  CHECK(comp[1] == std::vector<VertexId>{2});
  CHECK(comp[2] == std::vector<VertexId>{3, 4});

  const QueryGraph conn = QueryGraph::from_edges(3, {{0, 1}, {1, 2}}, std::nullopt);
  const auto one = connected_components(conn);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::vector<VertexId>{0, 1, 2});
}
