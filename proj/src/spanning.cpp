#include "minorfree/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace minorfree {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_ceil(double x) {
  if (!(x < 1.8446744073709550e19)) return kU64Max;
  if (x < 1.0) return 1;
  return static_cast<std::uint64_t>(std::ceil(x));
}

// (weight, rank) pair — the strict total order every "lightest" uses.
using WeightKey = std::pair<Weight, std::uint64_t>;

WeightKey weight_key(Weight w, EdgeRef e) { return {w, e.rank()}; }

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller index as root
    parent[b] = a;
    return true;
  }
};

}  // namespace

MsfResult kruskal_msf(const QueryGraph& g) {
  struct Cand {
    WeightKey key;
    EdgeRef edge;
  };
  std::vector<Cand> cands;
  cands.reserve(g.m());
  for (const EdgeRef& e : g.edges()) {
    cands.push_back({weight_key(g.weight_of(e), e), e});
  }
  std::sort(cands.begin(), cands.end(),
            [](const Cand& a, const Cand& b) { return a.key < b.key; });
  Dsu dsu(g.n());
  MsfResult out;
  for (const Cand& c : cands) {
    if (dsu.unite(static_cast<int>(c.edge.u), static_cast<int>(c.edge.v))) {
      out.edges.push_back(c.edge);
      out.total_weight += c.key.first;
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::uint64_t SpanConfig::heavy_threshold() const {
  if (heavy_threshold_override != 0) return heavy_threshold_override;
  return sat_ceil(6.0 * r * r * static_cast<double>(W) / epsilon);
}

double SpanConfig::oracle_param() const {
  return epsilon / (6.0 * static_cast<double>(W));
}

std::uint64_t SpanConfig::part_bound() const {
  if (part_bound_override != 0) return part_bound_override;
  const double side = 2.0 / oracle_param();
  return sat_ceil(side * side);
}

std::uint64_t SpanConfig::sample_size(std::uint64_t n,
                                      std::uint64_t center_degree) const {
  if (center_degree == 0) return 0;
  std::uint64_t base;
  if (sample_size_override != 0) {
    base = sample_size_override;
  } else {
    const double w = static_cast<double>(W);
    const double x = static_cast<double>(part_bound());
    const double delta = static_cast<double>(heavy_threshold());
    const double ln_n = std::log(static_cast<double>(std::max<std::uint64_t>(n, 2)));
    base = sat_ceil(8.0 * w * w * std::pow(static_cast<double>(r), 3.0) * x *
                    delta * ln_n / (epsilon * epsilon));
  }
  return std::min(center_degree, std::max<std::uint64_t>(base, 1));
}

int SubpartForest::subpart_index(VertexId v) const {
  const auto it = std::lower_bound(part.begin(), part.end(), v);
  if (it == part.end() || *it != v) return -1;
  return subpart_of[static_cast<std::size_t>(it - part.begin())];
}

bool SubpartForest::has_tree_edge(EdgeRef e) const {
  return std::binary_search(tree_edges.begin(), tree_edges.end(), e);
}

SubpartForest subparts(const QueryGraph& g, const std::vector<VertexId>& S,
                       const std::vector<char>& heavy, const SpanConfig& cfg) {
  (void)cfg;
  if (S.empty()) throw std::invalid_argument("sub-parts need a nonempty part");
  SubpartForest out;
  out.part = S;
  std::sort(out.part.begin(), out.part.end());
  const std::size_t sz = out.part.size();

  const auto local_of = [&](VertexId v) -> int {
    const auto it = std::lower_bound(out.part.begin(), out.part.end(), v);
    if (it == out.part.end() || *it != v) return -1;
    return static_cast<int>(it - out.part.begin());
  };

  // Snapshot the part's incident edges: internal ones and, per vertex, the
  // lightest link into the heavy set.
  struct Internal {
    int lu, lv;
    WeightKey key;
    EdgeRef edge;
  };
  std::vector<Internal> internal;
  std::vector<std::optional<std::pair<WeightKey, EdgeRef>>> h_best(sz);
  for (std::size_t li = 0; li < sz; ++li) {
    const VertexId v = out.part[li];
    if (heavy[v]) {
      throw std::invalid_argument("part must be disjoint from the heavy set");
    }
    const auto nbrs = g.neighbors(v);
    const auto wts = g.neighbor_weights(v);  // empty on unweighted graphs
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const VertexId u = nbrs[i];
      const EdgeRef e = EdgeRef::canonical(v, u);
      const WeightKey key =
          weight_key(wts.empty() ? kWeightScale : wts[i], e);
      if (heavy[u]) {
        if (!h_best[li] || key < h_best[li]->first) h_best[li] = {key, e};
      } else {
        const int lu = local_of(u);
        if (lu >= 0 && u > v) {
          internal.push_back({static_cast<int>(li), lu, key, e});
        }
      }
    }
  }

  {
    Dsu probe(sz);
    std::size_t merges = 0;
    for (const Internal& ie : internal) {
      if (probe.unite(ie.lu, ie.lv)) ++merges;
    }
    if (merges + 1 != sz) {
      throw std::invalid_argument("sub-parts need a connected part");
    }
  }

  Dsu dsu(sz);
  std::set<EdgeRef> tree;
  std::vector<std::optional<std::pair<WeightKey, EdgeRef>>> best_internal(sz);
  std::vector<std::optional<WeightKey>> best_h(sz);
  for (;;) {
    std::fill(best_internal.begin(), best_internal.end(), std::nullopt);
    std::fill(best_h.begin(), best_h.end(), std::nullopt);
    for (const Internal& ie : internal) {
      const int ru = dsu.find(ie.lu);
      const int rv = dsu.find(ie.lv);
      if (ru == rv) continue;
      if (!best_internal[ru] || ie.key < best_internal[ru]->first) {
        best_internal[ru] = {ie.key, ie.edge};
      }
      if (!best_internal[rv] || ie.key < best_internal[rv]->first) {
        best_internal[rv] = {ie.key, ie.edge};
      }
    }
    for (std::size_t li = 0; li < sz; ++li) {
      if (!h_best[li]) continue;
      const int root = dsu.find(static_cast<int>(li));
      if (!best_h[root] || h_best[li]->first < *best_h[root]) {
        best_h[root] = h_best[li]->first;
      }
    }
    std::vector<EdgeRef> chosen;
    for (std::size_t li = 0; li < sz; ++li) {
      if (dsu.find(static_cast<int>(li)) != static_cast<int>(li)) continue;
      if (!best_internal[li]) continue;  // no escape inside the part
      if (best_h[li] && !(best_internal[li]->first < *best_h[li])) continue;
      chosen.push_back(best_internal[li]->second);
    }
    if (chosen.empty()) break;
    for (const EdgeRef& e : chosen) {
      tree.insert(e);
      dsu.unite(local_of(e.u), local_of(e.v));
    }
    ++out.rounds;
    if (out.rounds > static_cast<int>(sz)) {
      throw std::logic_error("sub-part loop failed to terminate");
    }
  }

  // Freeze sub-part ids in order of first appearance and attach each
  // sub-part's lightest link into the heavy set.
  out.subpart_of.assign(sz, -1);
  std::vector<int> id_of_root(sz, -1);
  for (std::size_t li = 0; li < sz; ++li) {
    const int root = dsu.find(static_cast<int>(li));
    if (id_of_root[root] == -1) {
      id_of_root[root] = out.subpart_count++;
    }
    out.subpart_of[li] = id_of_root[root];
  }
  out.center.assign(out.subpart_count, std::nullopt);
  out.center_link.assign(out.subpart_count, std::nullopt);
  std::vector<std::optional<WeightKey>> link_key(out.subpart_count);
  for (std::size_t li = 0; li < sz; ++li) {
    if (!h_best[li]) continue;
    const int id = out.subpart_of[li];
    if (!link_key[id] || h_best[li]->first < *link_key[id]) {
      link_key[id] = h_best[li]->first;
      const EdgeRef link = h_best[li]->second;
      out.center_link[id] = link;
      out.center[id] = heavy[link.u] ? link.u : link.v;
    }
  }
  out.tree_edges.assign(tree.begin(), tree.end());
  return out;
}

SpannerContext::SpannerContext(const QueryGraph& g, const SpanConfig& cfg)
    : g_(&g), cfg_(cfg) {
  const std::uint64_t delta = cfg_.heavy_threshold();
  heavy_.assign(g.n(), 0);
  std::vector<VertexId> light;
  light.reserve(g.n());
  for (VertexId v = 0; v < g.n(); ++v) {
    if (g.degree(v) > delta) {
      heavy_[v] = 1;
      ++heavy_count_;
    } else {
      light.push_back(v);
    }
  }
  part_of_.assign(g.n(), -1);
  const InducedSubgraph light_graph = induced_subgraph(g, light);
  const PartitionHandle handle = exhaustive_partition(
      light_graph.graph, cfg_.oracle_param(), cfg_.part_bound());
  partition_cut_count_ = handle.cut_edge_count;
  parts_.reserve(handle.parts.size());
  for (const auto& local_part : handle.parts) {
    std::vector<VertexId> part;
    part.reserve(local_part.size());
    for (const VertexId lv : local_part) {
      part.push_back(light_graph.vertex_of[lv]);
    }
    std::sort(part.begin(), part.end());
    const int id = static_cast<int>(parts_.size());
    for (const VertexId v : part) part_of_[v] = id;
    parts_.push_back(std::move(part));
  }
  forests_.resize(parts_.size());
}

const SubpartForest& SpannerContext::forest(int part_id) {
  auto& slot = forests_[static_cast<std::size_t>(part_id)];
  if (!slot) {
    slot = std::make_unique<SubpartForest>(
        subparts(*g_, parts_[static_cast<std::size_t>(part_id)], heavy_,
                 cfg_));
  }
  return *slot;
}

std::optional<VertexId> SpannerContext::cluster_key(VertexId v) {
  if (heavy_[v]) return v;
  const SubpartForest& f = forest(part_of_[v]);
  const int idx = f.subpart_index(v);
  return f.center[static_cast<std::size_t>(idx)];
}

std::optional<EdgeRef> SpannerContext::center_link_of(VertexId v) {
  if (heavy_[v]) return std::nullopt;
  const SubpartForest& f = forest(part_of_[v]);
  const int idx = f.subpart_index(v);
  return f.center_link[static_cast<std::size_t>(idx)];
}

std::optional<EdgeRef> SpannerContext::sampled_lightest(VertexId a, VertexId b,
                                                        QueryCounter* counter) {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
  const auto it = sample_memo_.find(key);
  if (it != sample_memo_.end()) return it->second;
  const std::optional<EdgeRef> result =
      sample_lightest(*g_, a, b, cfg_, *this, counter);
  sample_memo_.emplace(key, result);
  return result;
}

std::optional<EdgeRef> sample_lightest(const QueryGraph& g, VertexId a,
                                       VertexId b, const SpanConfig& cfg,
                                       SpannerContext& ctx,
                                       QueryCounter* counter) {
  if (a == b) throw std::invalid_argument("cluster sampling needs two centers");
  std::optional<std::pair<WeightKey, EdgeRef>> best;
  const auto offer = [&](EdgeRef e, Weight w) {
    const WeightKey key = weight_key(w, e);
    if (!best || key < best->first) best = {key, e};
  };

  const auto collect_from = [&](VertexId center, VertexId other) {
    const std::uint32_t deg = g.degree(center, counter);
    if (deg == 0) return;
    const std::uint64_t q = cfg.sample_size(g.n(), deg);
    std::vector<VertexId> drawn;
    if (q >= deg) {
      drawn.reserve(deg);
      for (std::uint32_t i = 1; i <= deg; ++i) {
        drawn.push_back(g.neighbor(center, i, counter)->vertex);
      }
    } else {
      RngStream stream = make_stream(cfg.seed, "cluster-sample", center);
      drawn.reserve(q);
      for (std::uint64_t i = 0; i < q; ++i) {
        drawn.push_back(g.random_neighbor(center, stream, counter));
      }
    }
    std::set<std::pair<int, int>> expanded_subparts;
    for (const VertexId u : drawn) {
      if (u == other) {
        offer(EdgeRef::canonical(center, other), g.weight_of(center, other));
        continue;
      }
      if (ctx.is_heavy(u)) continue;
      const int pid = ctx.part_id(u);
      const SubpartForest& f = ctx.forest(pid);
      const int si = f.subpart_index(u);
      const std::optional<VertexId> c = f.center[static_cast<std::size_t>(si)];
      if (!c.has_value()) continue;
      if (*c == center) {
        // Every edge between u's sub-part and the opposite cluster.
        if (!expanded_subparts.insert({pid, si}).second) continue;
        for (std::size_t li = 0; li < f.part.size(); ++li) {
          if (f.subpart_of[li] != si) continue;
          const VertexId w = f.part[li];
          const std::uint32_t wdeg = g.degree(w, counter);
          for (std::uint32_t i = 1; i <= wdeg; ++i) {
            const NeighborAnswer nb = *g.neighbor(w, i, counter);
            const VertexId z = nb.vertex;
            bool in_other_cluster = false;
            if (z == other) {
              in_other_cluster = true;
            } else if (!ctx.is_heavy(z)) {
              const std::optional<VertexId> zc = ctx.cluster_key(z);
              in_other_cluster = zc.has_value() && *zc == other;
            }
            if (in_other_cluster) {
              offer(EdgeRef::canonical(w, z), nb.weight);
            }
          }
        }
      } else if (*c == other) {
        offer(EdgeRef::canonical(center, u), g.weight_of(center, u));
      }
    }
  };

  collect_from(a, b);
  collect_from(b, a);
  if (!best) return std::nullopt;
  return best->second;
}

GlobalBuild build_global(const QueryGraph& g, const SpanConfig& cfg) {
  SpannerContext ctx(g, cfg);
  GlobalBuild out;
  std::set<EdgeRef> picked;

  const std::vector<EdgeRef> all_edges = g.edges();
  for (const EdgeRef& e : all_edges) {
    if (ctx.is_heavy(e.u) && ctx.is_heavy(e.v)) {
      picked.insert(e);
      ++out.heavy_edge_count;
    } else if (!ctx.is_heavy(e.u) && !ctx.is_heavy(e.v) &&
               ctx.part_id(e.u) != ctx.part_id(e.v)) {
      picked.insert(e);
    }
  }
  out.partition_cut_count = ctx.partition_cut_count();

  for (std::size_t pid = 0; pid < ctx.part_count(); ++pid) {
    const SubpartForest& f = ctx.forest(static_cast<int>(pid));
    for (const EdgeRef& e : f.tree_edges) {
      picked.insert(e);
      out.forest_edges.push_back(e);
    }
    for (const auto& link : f.center_link) {
      if (link.has_value()) {
        picked.insert(*link);
        out.forest_edges.push_back(*link);
      }
    }
  }
  std::sort(out.forest_edges.begin(), out.forest_edges.end());

  for (const EdgeRef& e : all_edges) {
    const std::optional<VertexId> ku = ctx.cluster_key(e.u);
    const std::optional<VertexId> kv = ctx.cluster_key(e.v);
    if (!ku || !kv || *ku == *kv) continue;
    const std::optional<EdgeRef> s = ctx.sampled_lightest(*ku, *kv, nullptr);
    const bool add = !s || compare_weight(g, e, *s) != std::strong_ordering::greater;
    if (add && picked.insert(e).second) {
      out.sampled_edges.push_back(e);
    }
  }

  out.edges.assign(picked.begin(), picked.end());
  for (const EdgeRef& e : out.edges) out.total_weight += g.weight_of(e);
  return out;
}

SpannerDecision local_edge_bounded(const QueryGraph& g, EdgeRef e,
                                   const SpanConfig& cfg,
                                   const CoveringOracle& oracle,
                                   QueryCounter* counter) {
  (void)cfg;
  if (!g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("queried edge is not in the graph");
  }
  const CoverResult su = oracle.cover(e.u, counter);
  const CoverResult sv = oracle.cover(e.v, counter);
  std::vector<VertexId> joint;
  joint.reserve(su.vertices.size() + sv.vertices.size());
  std::set_union(su.vertices.begin(), su.vertices.end(), sv.vertices.begin(),
                 sv.vertices.end(), std::back_inserter(joint));

  const InducedSubgraph ind = induced_subgraph(g, joint, counter);
  Dsu dsu(joint.size());
  for (const EdgeRef& le : ind.graph.edges()) {
    const EdgeRef pe =
        EdgeRef::canonical(ind.vertex_of[le.u], ind.vertex_of[le.v]);
    if (pe == e) continue;
    if (compare_weight(g, pe, e) == std::strong_ordering::less) {
      dsu.unite(static_cast<int>(le.u), static_cast<int>(le.v));
    }
  }
  const int lu = static_cast<int>(*ind.local_of(e.u));
  const int lv = static_cast<int>(*ind.local_of(e.v));
  if (dsu.find(lu) == dsu.find(lv)) {
    return {e, false, "cycle-rule-no"};
  }
  return {e, true, "cycle-rule-yes"};
}

SpannerDecision local_edge_unbounded(const QueryGraph& g, EdgeRef e,
                                     const SpanConfig& cfg,
                                     SpannerContext& ctx,
                                     QueryCounter* counter) {
  (void)cfg;
  if (!g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("queried edge is not in the graph");
  }
  const bool hu = ctx.is_heavy(e.u);
  const bool hv = ctx.is_heavy(e.v);
  if (hu && hv) return {e, true, "heavy-heavy"};

  const auto sampled_verdict = [&](VertexId ca, VertexId cb) -> SpannerDecision {
    const std::optional<EdgeRef> s = ctx.sampled_lightest(ca, cb, counter);
    if (!s.has_value()) return {e, true, "cluster-null"};
    if (compare_weight(g, e, *s) != std::strong_ordering::greater) {
      return {e, true, "cluster-sample-win"};
    }
    return {e, false, "cluster-sample-lose"};
  };

  if (!hu && !hv) {
    if (ctx.part_id(e.u) != ctx.part_id(e.v)) return {e, true, "cut-edge"};
    const SubpartForest& f = ctx.forest(ctx.part_id(e.u));
    const int su = f.subpart_index(e.u);
    const int sv = f.subpart_index(e.v);
    if (su == sv) {
      if (f.has_tree_edge(e)) return {e, true, "subpart-tree"};
      return {e, false, "subpart-reject"};
    }
    const std::optional<VertexId> cu = f.center[static_cast<std::size_t>(su)];
    const std::optional<VertexId> cv = f.center[static_cast<std::size_t>(sv)];
    if (!cu.has_value() || !cv.has_value()) {
      throw std::logic_error("sub-part without a center reached sampling");
    }
    if (*cu == *cv) return {e, false, "subpart-reject"};
    return sampled_verdict(*cu, *cv);
  }

  const VertexId light = hu ? e.v : e.u;
  const VertexId heavy = hu ? e.u : e.v;
  const SubpartForest& f = ctx.forest(ctx.part_id(light));
  const int si = f.subpart_index(light);
  const std::optional<VertexId> c = f.center[static_cast<std::size_t>(si)];
  if (!c.has_value()) {
    throw std::logic_error("sub-part adjacent to the heavy set has no center");
  }
  if (*c == heavy) {
    const std::optional<EdgeRef> link =
        f.center_link[static_cast<std::size_t>(si)];
    if (link.has_value() && *link == e) return {e, true, "center-link"};
    return {e, false, "subpart-reject"};
  }
  return sampled_verdict(*c, heavy);
}

}  // namespace minorfree
