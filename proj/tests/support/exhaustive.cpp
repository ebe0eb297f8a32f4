#include "support/exhaustive.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace minorfree::testsupport {

namespace {

std::vector<std::uint32_t> adjacency_masks(const QueryGraph& g) {
  std::vector<std::uint32_t> adj(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) {
    for (const VertexId u : g.neighbors(v)) adj[v] |= 1u << u;
  }
  return adj;
}

struct PathCoverSearch {
  std::vector<std::uint32_t> adj;
  std::map<std::uint32_t, std::size_t> memo;

  // Calls f(arm) for every simple path arm out of `end` inside `avail`,
  // including prefixes (the empty arm is handled by the caller).
  template <typename F>
  void extend(VertexId end, std::uint32_t avail, std::uint32_t built, F&& f) {
    std::uint32_t options = adj[end] & avail;
    while (options != 0) {
      const VertexId u = static_cast<VertexId>(__builtin_ctz(options));
      options &= options - 1;
      const std::uint32_t grown = built | (1u << u);
      f(grown);
      extend(u, avail & ~(1u << u), grown, f);
    }
  }

  std::size_t solve(std::uint32_t mask) {
    if (mask == 0) return 0;
    const auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const VertexId v = static_cast<VertexId>(__builtin_ctz(mask));
    const std::uint32_t rest = mask & ~(1u << v);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    // Every path through v splits into two arms leaving v.
    const auto try_arms = [&](std::uint32_t arm1) {
      const auto finish = [&](std::uint32_t arm2) {
        best = std::min(best, 1 + solve(rest & ~arm1 & ~arm2));
      };
      finish(0u);
      extend(v, rest & ~arm1, 0u, finish);
    };
    try_arms(0u);
    extend(v, rest, 0u, try_arms);
    memo.emplace(mask, best);
    return best;
  }
};

}  // namespace

std::size_t min_path_cover_enumerate(const QueryGraph& g) {
  if (g.n() > 8) {
    throw std::invalid_argument("path-set enumeration is limited to n <= 8");
  }
  if (g.n() == 0) return 0;
  PathCoverSearch search{adjacency_masks(g), {}};
  return search.solve((1u << g.n()) - 1u);
}

std::size_t exhaustive_min_insertions(const QueryGraph& g) {
  if (g.n() > 12) {
    throw std::invalid_argument("ordering DP is limited to n <= 12");
  }
  const std::uint32_t n = g.n();
  if (n <= 1) return 0;
  const std::vector<std::uint32_t> adj = adjacency_masks(g);
  const std::uint32_t full = (1u << n) - 1u;
  constexpr std::uint8_t kUnset = 255;
  std::vector<std::vector<std::uint8_t>> dp(
      full + 1u, std::vector<std::uint8_t>(n, kUnset));
  for (VertexId v = 0; v < n; ++v) dp[1u << v][v] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (VertexId last = 0; last < n; ++last) {
      const std::uint8_t cost = dp[mask][last];
      if (cost == kUnset || ((mask >> last) & 1u) == 0) continue;
      for (VertexId w = 0; w < n; ++w) {
        if ((mask >> w) & 1u) continue;
        const std::uint8_t jump = ((adj[last] >> w) & 1u) ? 0 : 1;
        std::uint8_t& slot = dp[mask | (1u << w)][w];
        if (cost + jump < slot) slot = static_cast<std::uint8_t>(cost + jump);
      }
    }
  }
  std::uint8_t best = kUnset;
  for (VertexId v = 0; v < n; ++v) best = std::min(best, dp[full][v]);
  return best;
}

std::size_t min_insertions_bruteforce(const QueryGraph& g) {
  if (g.n() > 7) {
    throw std::invalid_argument("permutation scan is limited to n <= 7");
  }
  const std::uint32_t n = g.n();
  if (n <= 1) return 0;
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = n;
  do {
    std::size_t jumps = 0;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      if (!g.has_edge(order[i], order[i + 1])) ++jumps;
    }
    best = std::min(best, jumps);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<double> lazy_walk_distribution(const QueryGraph& g,
                                           VertexId start,
                                           std::uint64_t steps) {
  if (!g.degree_bound().has_value()) {
    throw std::invalid_argument("lazy walk distribution needs a degree bound");
  }
  const double two_d = 2.0 * static_cast<double>(*g.degree_bound());
  std::vector<double> dist(g.n(), 0.0);
  dist[start] = 1.0;
  for (std::uint64_t step = 0; step < steps; ++step) {
    std::vector<double> next(g.n(), 0.0);
    for (VertexId v = 0; v < g.n(); ++v) {
      if (dist[v] == 0.0) continue;
      const auto nbrs = g.neighbors(v);
      next[v] += dist[v] * (1.0 - static_cast<double>(nbrs.size()) / two_d);
      for (const VertexId u : nbrs) next[u] += dist[v] / two_d;
    }
    dist = std::move(next);
  }
  return dist;
}

QueryGraph random_connected_graph(VertexId n, std::size_t extra_edges,
                                  RngStream& stream) {
  std::set<std::pair<VertexId, VertexId>> present;
  for (VertexId v = 1; v < n; ++v) {
    const VertexId parent = static_cast<VertexId>(stream.below(v));
    present.emplace(parent, v);
  }
  for (std::size_t i = 0; i < extra_edges; ++i) {
    const VertexId a = static_cast<VertexId>(stream.below(n));
    const VertexId b = static_cast<VertexId>(stream.below(n));
    if (a == b) continue;
    present.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<std::pair<VertexId, VertexId>> edges(present.begin(),
                                                   present.end());
  return QueryGraph::from_edges(n, edges, std::nullopt);
}

}  // namespace minorfree::testsupport
