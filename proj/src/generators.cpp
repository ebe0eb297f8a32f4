#include "minorfree/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minorfree/pathcover.hpp"
#include "minorfree/spanning.hpp"

namespace minorfree {

std::string family_name(Family f) {
  switch (f) {
    case Family::grid: return "grid";
    case Family::random_tree: return "random_tree";
    case Family::cycle_chords_planar: return "cycle_chords_planar";
    case Family::apollonian: return "apollonian";
    case Family::star_forest: return "star_forest";
    case Family::disjoint_paths: return "disjoint_paths";
  }
  return "unknown";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (const Family f :
       {Family::grid, Family::random_tree, Family::cycle_chords_planar,
        Family::apollonian, Family::star_forest, Family::disjoint_paths}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;
using Rotation = std::vector<std::vector<VertexId>>;

struct Skeleton {
  std::uint32_t n = 0;
  EdgeList edges;
  std::optional<std::uint32_t> degree_bound;
  Rotation rotation;  // empty entries mean "sorted neighbor order is planar"
  GroundTruth truth;
};

// Grid on exactly n cells: full rows of `cols`, a possibly partial last row.
// The planted Hamiltonian order is the row serpentine, with directions chosen
// so the step into the partial last row lands on an existing cell.
Skeleton make_grid(const GenSpec& spec) {
  const std::uint32_t n = spec.n;
  const auto cols = static_cast<std::uint32_t>(
      std::max<double>(1.0, std::ceil(std::sqrt(static_cast<double>(n)))));
  const std::uint32_t rows = (n + cols - 1) / cols;
  const auto cell = [&](std::uint32_t i, std::uint32_t j) {
    return i * cols + j;
  };
  const auto exists = [&](std::uint32_t i, std::uint32_t j) {
    return i < rows && j < cols && cell(i, j) < n;
  };

  Skeleton sk;
  sk.n = n;
  sk.degree_bound = 4;
  for (std::uint32_t i = 0; i < rows; ++i) {
    for (std::uint32_t j = 0; j < cols; ++j) {
      if (!exists(i, j)) continue;
      if (exists(i, j + 1)) sk.edges.emplace_back(cell(i, j), cell(i, j + 1));
      if (exists(i + 1, j)) sk.edges.emplace_back(cell(i, j), cell(i + 1, j));
    }
  }

  // Row i runs left-to-right iff (rows - i) is odd; this makes the row above
  // a partial last row end at column 0.
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::uint32_t i = 0; i < rows; ++i) {
    const bool left_to_right = ((rows - i) % 2) == 1;
    if (left_to_right) {
      for (std::uint32_t j = 0; j < cols && exists(i, j); ++j)
        order.push_back(cell(i, j));
    } else {
      for (std::uint32_t j = cols; j-- > 0;)
        if (exists(i, j)) order.push_back(cell(i, j));
    }
  }
  sk.truth.planted_ham_order = order;
  sk.truth.is_hamiltonian = true;
  sk.truth.certified_ham_distance = 0;

  // Planar rotation: up, right, down, left around each cell.
  sk.rotation.assign(n, {});
  for (std::uint32_t i = 0; i < rows; ++i) {
    for (std::uint32_t j = 0; j < cols; ++j) {
      if (!exists(i, j)) continue;
      auto& rot = sk.rotation[cell(i, j)];
      if (i > 0 && exists(i - 1, j)) rot.push_back(cell(i - 1, j));
      if (exists(i, j + 1)) rot.push_back(cell(i, j + 1));
      if (exists(i + 1, j)) rot.push_back(cell(i + 1, j));
      if (j > 0 && exists(i, j - 1)) rot.push_back(cell(i, j - 1));
    }
  }
  return sk;
}

Skeleton make_random_tree(const GenSpec& spec) {
  Skeleton sk;
  sk.n = spec.n;
  RngStream attach = make_stream(spec.seed, "tree-attach");
  for (VertexId v = 1; v < spec.n; ++v) {
    sk.edges.emplace_back(static_cast<VertexId>(attach.below(v)), v);
  }
  return sk;  // any rotation of a tree is planar; sorted order is used
}

Skeleton make_cycle_chords(const GenSpec& spec) {
  const std::uint32_t n = spec.n;
  if (n < 3) {
    throw std::invalid_argument("cycle_chords_planar needs n >= 3");
  }
  Skeleton sk;
  sk.n = n;
  sk.degree_bound = 3;  // at most one chord per vertex
  for (VertexId v = 0; v < n; ++v) {
    sk.edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
  }

  // Non-crossing chords drawn inside the circle, at most one per vertex.
  const auto target = static_cast<std::uint32_t>(spec.chord_fraction * n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chords;
  std::vector<char> used(n, 0);
  RngStream pick = make_stream(spec.seed, "chords");
  for (std::uint32_t attempt = 0;
       attempt < 20 * target + 20 && chords.size() < target; ++attempt) {
    if (n < 4) break;
    const auto a = static_cast<std::uint32_t>(pick.below(n));
    const auto gap = 2 + static_cast<std::uint32_t>(pick.below(n - 3));
    const auto b = (a + gap) % n;
    const std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
    if (used[lo] || used[hi]) continue;
    if (lo == 0 && hi == n - 1) continue;  // that's a cycle edge
    bool crosses = false;
    for (const auto& [c, d] : chords) {
      if ((c < lo && lo < d && d < hi) || (lo < c && c < hi && hi < d)) {
        crosses = true;
        break;
      }
    }
    if (crosses) continue;
    chords.emplace_back(lo, hi);
    used[lo] = used[hi] = 1;
    sk.edges.emplace_back(lo, hi);
  }

  // Convex-position embedding: neighbors ordered by circular distance.
  sk.rotation.assign(n, {});
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> nbrs;
    nbrs.push_back((v + 1) % n);
    nbrs.push_back((v + n - 1) % n);
    for (const auto& [c, d] : chords) {
      if (c == v) nbrs.push_back(d);
      if (d == v) nbrs.push_back(c);
    }
    std::sort(nbrs.begin(), nbrs.end(), [&](VertexId x, VertexId y) {
      return (x + n - v) % n < (y + n - v) % n;
    });
    sk.rotation[v] = nbrs;
  }

  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  sk.truth.planted_ham_order = order;
  sk.truth.is_hamiltonian = true;
  sk.truth.certified_ham_distance = 0;
  return sk;
}

Skeleton make_apollonian(const GenSpec& spec) {
  const std::uint32_t n = spec.n;
  if (n < 3) throw std::invalid_argument("apollonian needs n >= 3");
  Skeleton sk;
  sk.n = n;
  sk.edges = {{0, 1}, {1, 2}, {0, 2}};
  struct Face {
    VertexId a, b, c;
  };
  // Faces are stored as ORIENTED triples: (a, b, c) stands for the directed
  // boundary a->b->c->a.  Subdividing (a, b, c) with v into (a, b, v),
  // (b, c, v), (c, a, v) keeps every shared edge traversed in opposite
  // directions by its two faces, so the orientation stays globally
  // consistent — which the rotation-system verifier's face tracing needs.
  std::vector<Face> faces = {{0, 1, 2}};  // inner faces only
  RngStream pick = make_stream(spec.seed, "apollonian-face");
  for (VertexId v = 3; v < n; ++v) {
    const auto idx = static_cast<std::size_t>(pick.below(faces.size()));
    const Face f = faces[idx];
    sk.edges.emplace_back(f.a, v);
    sk.edges.emplace_back(f.b, v);
    sk.edges.emplace_back(f.c, v);
    faces[idx] = {f.a, f.b, v};
    faces.push_back({f.b, f.c, v});
    faces.push_back({f.c, f.a, v});
  }

  // Around vertex b, oriented face (a, b, c) dictates that c follows a in
  // the rotation.  Collecting that successor relation over all faces
  // (inner plus the reversed outer face) yields one cycle per vertex: its
  // rotation.
  std::vector<Face> all_faces = faces;
  all_faces.push_back({0, 2, 1});  // outer face, opposite orientation
  std::vector<std::map<VertexId, VertexId>> succ(n);
  for (const Face& f : all_faces) {
    succ[f.b][f.a] = f.c;
    succ[f.c][f.b] = f.a;
    succ[f.a][f.c] = f.b;
  }
  sk.rotation.assign(n, {});
  for (VertexId v = 0; v < n; ++v) {
    if (succ[v].empty()) continue;
    const VertexId start = succ[v].begin()->first;
    VertexId u = start;
    do {
      sk.rotation[v].push_back(u);
      u = succ[v].at(u);
    } while (u != start);
  }
  return sk;
}

Skeleton make_star_forest(const GenSpec& spec) {
  const std::uint32_t n = spec.n;
  const std::uint32_t s = std::max<std::uint32_t>(1, spec.star_size);
  Skeleton sk;
  sk.n = n;
  std::size_t cover = 0;
  std::uint32_t max_deg = 0;
  for (std::uint32_t base = 0; base < n; base += s) {
    const std::uint32_t size = std::min(s, n - base);
    for (std::uint32_t leaf = 1; leaf < size; ++leaf) {
      sk.edges.emplace_back(base, base + leaf);
    }
    max_deg = std::max(max_deg, size - 1);
    // Minimum path cover of a star on `size` vertices: one path through the
    // center picks up two leaves; every further leaf is its own path.
    cover += size <= 2 ? 1 : size - 2;
  }
  sk.degree_bound = std::max<std::uint32_t>(1, max_deg);
  sk.truth.certified_ham_distance = cover - 1;
  sk.truth.is_hamiltonian = (cover == 1);
  return sk;
}

Skeleton make_disjoint_paths(const GenSpec& spec) {
  const std::uint32_t n = spec.n;
  const std::uint32_t len = std::max<std::uint32_t>(1, spec.path_len);
  Skeleton sk;
  sk.n = n;
  sk.degree_bound = 2;
  std::size_t count = 0;
  for (std::uint32_t base = 0; base < n; base += len) {
    const std::uint32_t size = std::min(len, n - base);
    for (std::uint32_t i = 1; i < size; ++i) {
      sk.edges.emplace_back(base + i - 1, base + i);
    }
    ++count;
  }
  sk.truth.certified_ham_distance = count - 1;
  sk.truth.is_hamiltonian = (count == 1);
  return sk;
}

}  // namespace

GeneratedInstance generate(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be at least 1");
  if (spec.weighted && spec.wmax < 1) {
    throw std::invalid_argument("wmax must be at least 1");
  }

  Skeleton sk;
  switch (spec.family) {
    case Family::grid: sk = make_grid(spec); break;
    case Family::random_tree: sk = make_random_tree(spec); break;
    case Family::cycle_chords_planar: sk = make_cycle_chords(spec); break;
    case Family::apollonian: sk = make_apollonian(spec); break;
    case Family::star_forest: sk = make_star_forest(spec); break;
    case Family::disjoint_paths: sk = make_disjoint_paths(spec); break;
  }

  GeneratedInstance out;
  if (spec.weighted) {
    // Per-edge keyed draws: the weight of {u,v} depends only on (seed, u, v),
    // uniform on the micro-unit lattice of [1, wmax].
    std::vector<std::tuple<VertexId, VertexId, Weight>> wedges;
    wedges.reserve(sk.edges.size());
    const auto span = static_cast<std::uint64_t>(spec.wmax) * kWeightScale -
                      kWeightScale + 1;
    for (const auto& [u, v] : sk.edges) {
      RngStream ws = make_stream(spec.seed, "weight", std::min(u, v),
                                 std::max(u, v));
      wedges.emplace_back(u, v,
                          kWeightScale + static_cast<Weight>(ws.below(span)));
    }
    out.graph = QueryGraph::from_weighted_edges(sk.n, wedges, sk.degree_bound);
  } else {
    out.graph = QueryGraph::from_edges(sk.n, sk.edges, sk.degree_bound);
  }

  out.rotation = std::move(sk.rotation);
  if (out.rotation.empty()) {
    // Sorted neighbor order (forests: every rotation is planar).
    out.rotation.assign(sk.n, {});
    for (VertexId v = 0; v < sk.n; ++v) {
      const auto row = out.graph.neighbors(v);
      out.rotation[v].assign(row.begin(), row.end());
    }
  }

  out.truth = sk.truth;
  out.truth.family = spec.family;
  out.truth.n = spec.n;
  out.truth.seed = spec.seed;
  if (!out.truth.is_hamiltonian && out.graph.n() <= 14) {
    out.truth.is_hamiltonian = has_hamiltonian_path(out.graph);
  }
  if (out.graph.n() <= 100000) {
    out.truth.msf_weight = kruskal_msf(out.graph).total_weight;
  }

  if (out.graph.n() <= 10000 &&
      !verify_planar_rotation(out.graph, out.rotation)) {
    throw std::logic_error("generated instance failed the planarity check");
  }
  return out;
}

std::map<std::uint32_t, std::uint32_t> degree_histogram(const QueryGraph& g) {
  std::map<std::uint32_t, std::uint32_t> hist;
  for (VertexId v = 0; v < g.n(); ++v) {
    ++hist[static_cast<std::uint32_t>(g.neighbors(v).size())];
  }
  return hist;
}

bool verify_planar_rotation(
    const QueryGraph& g, const std::vector<std::vector<VertexId>>& rotation) {
  const std::uint32_t n = g.n();
  if (rotation.size() != n) return false;

  // The rotation at v must be a permutation of v's neighbor set.
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> a(rotation[v]);
    std::sort(a.begin(), a.end());
    const auto row = g.neighbors(v);
    if (!std::equal(a.begin(), a.end(), row.begin(), row.end())) return false;
  }

  // Positions of u within rotation[v], for O(1) successor lookups.
  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> pos(n);
  for (VertexId v = 0; v < n; ++v) {
    for (std::uint32_t i = 0; i < rotation[v].size(); ++i) {
      pos[v].emplace_back(rotation[v][i], i);
    }
    std::sort(pos[v].begin(), pos[v].end());
  }
  const auto index_of = [&](VertexId v, VertexId u) {
    const auto it = std::lower_bound(pos[v].begin(), pos[v].end(),
                                     std::pair{u, std::uint32_t{0}});
    return it->second;
  };

  // Face tracing: directed edge (u,v) is followed by (v, w) where w succeeds
  // u in the rotation at v.  Count the orbits.
  std::size_t isolated = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (g.neighbors(v).empty()) ++isolated;
  }
  std::map<std::pair<VertexId, VertexId>, char> visited;
  std::size_t faces = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (const VertexId v : g.neighbors(u)) {
      if (visited.count({u, v})) continue;
      ++faces;
      VertexId cu = u, cv = v;
      while (!visited.count({cu, cv})) {
        visited[{cu, cv}] = 1;
        const std::uint32_t i = index_of(cv, cu);
        const auto& rot = rotation[cv];
        const VertexId w = rot[(i + 1) % rot.size()];
        cu = cv;
        cv = w;
      }
    }
  }

  const std::size_t components = connected_components(g).size();
  const std::size_t euler_lhs = n + faces + isolated;
  const std::size_t euler_rhs = g.m() + 2 * components;
  return euler_lhs == euler_rhs;
}

}  // namespace minorfree
