#include "minorfree/pathcover.hpp"

#include <algorithm>
#include <bit>

namespace minorfree {

namespace {

std::vector<std::uint32_t> neighbor_masks(const QueryGraph& g) {
  std::vector<std::uint32_t> nbr(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) {
    for (const VertexId u : g.neighbors(v)) nbr[v] |= 1u << u;
  }
  return nbr;
}

// Max number of edges usable by a vertex-disjoint path system covering
// exactly `mask`, for every mask, as dp tables:
//   open[mask * n + v] = best with one open path ending at v,
//   closed[mask]       = best with all paths closed.
// A path of L vertices contributes L-1 edges, so
//   pc(mask) = |mask| - closed[mask].
struct PathDp {
  std::uint32_t n;
  std::vector<std::uint8_t> open;
  std::vector<std::uint8_t> closed;
};

PathDp run_path_dp(const std::vector<std::uint32_t>& nbr, std::uint32_t n) {
  PathDp dp;
  dp.n = n;
  const std::size_t masks = std::size_t{1} << n;
  dp.open.assign(masks * n, 0);
  dp.closed.assign(masks, 0);
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    std::uint8_t best_closed = 0;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      const std::uint32_t v = std::countr_zero(bits);
      const std::uint32_t rest = mask & ~(1u << v);
      // Either v starts a fresh open path on top of a fully closed system...
      std::uint8_t best = dp.closed[rest];
      // ...or v extends the open path that currently ends at a neighbor.
      for (std::uint32_t nb = nbr[v] & rest; nb != 0; nb &= nb - 1) {
        const std::uint32_t u = std::countr_zero(nb);
        best = std::max<std::uint8_t>(
            best, static_cast<std::uint8_t>(dp.open[rest * n + u] + 1));
      }
      dp.open[std::size_t{mask} * n + v] = best;
      best_closed = std::max(best_closed, best);
    }
    dp.closed[mask] = best_closed;
  }
  return dp;
}

// Reconstructs one optimal path system for `full` from the DP tables.
std::vector<std::vector<std::uint32_t>> reconstruct_paths(
    const PathDp& dp, const std::vector<std::uint32_t>& nbr,
    std::uint32_t full) {
  std::vector<std::vector<std::uint32_t>> paths;
  std::uint32_t mask = full;
  while (mask != 0) {
    // Pick the endpoint achieving closed[mask].
    std::uint32_t v = 0;
    for (std::uint32_t bits = mask;; bits &= bits - 1) {
      v = std::countr_zero(bits);
      if (dp.open[std::size_t{mask} * dp.n + v] == dp.closed[mask]) break;
    }
    // Unwind one path, endpoint first.
    std::vector<std::uint32_t> path;
    for (;;) {
      path.push_back(v);
      const std::uint32_t rest = mask & ~(1u << v);
      const std::uint8_t value = dp.open[std::size_t{mask} * dp.n + v];
      bool extended = false;
      for (std::uint32_t nb = nbr[v] & rest; nb != 0; nb &= nb - 1) {
        const std::uint32_t u = std::countr_zero(nb);
        if (dp.open[std::size_t{rest} * dp.n + u] + 1 == value) {
          mask = rest;
          v = u;
          extended = true;
          break;
        }
      }
      if (!extended) {
        // value == closed[rest]: v opened this path.
        mask = rest;
        break;
      }
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

PathCoverCert min_path_cover(const QueryGraph& g) {
  PathCoverCert cert;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() > kPathCoverBudget) {
      throw BudgetError("path-cover DP budget exceeded: component of " +
                            std::to_string(comp.size()) + " vertices (limit " +
                            std::to_string(kPathCoverBudget) + ")",
                        comp.size());
    }
    if (comp.size() == 1) {
      cert.paths.push_back({comp[0]});
      continue;
    }
    const InducedSubgraph sub = induced_subgraph(g, comp);
    const auto nbr = neighbor_masks(sub.graph);
    const auto n = static_cast<std::uint32_t>(comp.size());
    const PathDp dp = run_path_dp(nbr, n);
    const std::uint32_t full = (n == 32 ? 0xffffffffu : (1u << n) - 1);
    for (auto& path : reconstruct_paths(dp, nbr, full)) {
      std::vector<VertexId> mapped;
      mapped.reserve(path.size());
      for (const std::uint32_t local : path)
        mapped.push_back(sub.vertex_of[local]);
      cert.paths.push_back(std::move(mapped));
    }
  }
  return cert;
}

bool verify_path_cover(const QueryGraph& g, const PathCoverCert& cert) {
  std::vector<char> seen(g.n(), 0);
  std::size_t covered = 0;
  for (const auto& path : cert.paths) {
    if (path.empty()) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const VertexId v = path[i];
      if (v >= g.n() || seen[v]) return false;
      seen[v] = 1;
      ++covered;
      if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
    }
  }
  return covered == g.n();
}

std::size_t ham_distance(const QueryGraph& g) {
  return min_path_cover(g).size() - 1;
}

bool has_hamiltonian_path(const QueryGraph& g) {
  const std::uint32_t n = g.n();
  if (n == 0) return false;
  if (n == 1) return true;
  if (n > kHamPathBudget) {
    throw BudgetError("Hamiltonian-path DP budget exceeded: " +
                          std::to_string(n) + " vertices (limit " +
                          std::to_string(kHamPathBudget) + ")",
                      n);
  }
  if (connected_components(g).size() != 1) return false;
  const auto nbr = neighbor_masks(g);
  const std::size_t masks = std::size_t{1} << n;
  // ends[mask] = set of vertices at which a Hamiltonian path of G[mask] can end.
  std::vector<std::uint32_t> ends(masks, 0);
  for (std::uint32_t v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1u << v;
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::uint32_t e = 0;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      const std::uint32_t v = std::countr_zero(bits);
      if (ends[mask & ~(1u << v)] & nbr[v]) e |= 1u << v;
    }
    ends[mask] = e;
  }
  return ends[masks - 1] != 0;
}

SubsetTables subset_tables(const QueryGraph& g) {
  const std::uint32_t n = g.n();
  if (n > kPathCoverBudget) {
    throw BudgetError("subset-table budget exceeded: " + std::to_string(n) +
                          " vertices (limit " +
                          std::to_string(kPathCoverBudget) + ")",
                      n);
  }
  SubsetTables t;
  t.n = n;
  const std::size_t masks = std::size_t{1} << n;
  const auto nbr = neighbor_masks(g);

  t.edges_within.assign(masks, 0);
  t.connected.assign(masks, 0);
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    const std::uint32_t low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    t.edges_within[mask] = static_cast<std::uint16_t>(
        t.edges_within[rest] + std::popcount(nbr[low] & rest));
    // Flood fill from the lowest member using neighbor masks.
    std::uint32_t reach = 1u << low;
    for (;;) {
      std::uint32_t grown = reach;
      for (std::uint32_t bits = reach; bits != 0; bits &= bits - 1) {
        grown |= nbr[std::countr_zero(bits)];
      }
      grown &= mask;
      if (grown == reach) break;
      reach = grown;
    }
    t.connected[mask] = (reach == mask);
  }

  const PathDp dp = run_path_dp(nbr, n);
  t.path_cover.assign(masks, 0);
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    t.path_cover[mask] = static_cast<std::uint8_t>(
        std::popcount(mask) - dp.closed[mask]);
  }
  return t;
}

}  // namespace minorfree
