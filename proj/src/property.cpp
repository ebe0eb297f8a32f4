#include "minorfree/property.hpp"

#include <cmath>
#include <stdexcept>

namespace minorfree {

PropertyDecider bipartite_decider() {
  PropertyDecider d;
  d.name = "bipartite";
  d.monotone = true;
  d.additive = true;
  d.holds = [](const QueryGraph& g) {
    std::vector<int> color(g.n(), -1);
    std::vector<VertexId> queue;
    for (VertexId s = 0; s < g.n(); ++s) {
      if (color[s] != -1) continue;
      color[s] = 0;
      queue.assign(1, s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        for (const VertexId w : g.neighbors(u)) {
          if (color[w] == -1) {
            color[w] = 1 - color[u];
            queue.push_back(w);
          } else if (color[w] == color[u]) {
            return false;
          }
        }
      }
    }
    return true;
  };
  return d;
}

PropertyTestResult test_property(const QueryGraph& g,
                                 const PropertyDecider& decider,
                                 double epsilon,
                                 const CoveringOracle& oracle,
                                 std::uint64_t seed,
                                 std::uint64_t sample_constant) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1]");
  }
  if (!g.degree_bound().has_value()) {
    throw std::invalid_argument(
        "property testing runs in the bounded-degree model");
  }
  if (!decider.monotone || !decider.additive) {
    throw std::invalid_argument(
        "the tester is one-sided only for monotone, additive properties");
  }
  PropertyTestResult out;
  if (g.n() == 0) return out;
  const double d = static_cast<double>(*g.degree_bound());
  out.samples = static_cast<std::uint64_t>(
      std::ceil(static_cast<double>(sample_constant) * std::max(d, 1.0) /
                epsilon));

  RngStream samples = make_stream(seed, "property-sample");
  for (std::uint64_t i = 0; i < out.samples; ++i) {
    const VertexId v = static_cast<VertexId>(samples.below(g.n()));
    const CoverResult cover = oracle.cover(v, &out.queries);
    const InducedSubgraph ind =
        induced_subgraph(g, cover.vertices, &out.queries);
    if (!decider.holds(ind.graph)) {
      out.accepted = false;
      out.witness_vertex = v;
      out.witness_cover = cover.vertices;
      return out;
    }
  }
  return out;
}

}  // namespace minorfree
