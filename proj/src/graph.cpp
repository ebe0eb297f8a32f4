#include "minorfree/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minorfree {

void QueryGraph::check_vertex(VertexId v) const {
  if (v >= n_) {
    throw std::invalid_argument("vertex id " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n_) +
                                ")");
  }
}

void QueryGraph::build(
    VertexId n, const std::vector<std::tuple<VertexId, VertexId, Weight>>& edges,
    bool weighted, std::optional<std::uint32_t> degree_bound) {
  n_ = n;
  weighted_ = weighted;
  degree_bound_ = degree_bound;

  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& [u, v, w] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (weighted && w < kWeightScale) {
      throw std::invalid_argument("edge weight below 1 on edge " +
                                  std::to_string(u) + " " + std::to_string(v));
    }
    ++deg[u];
    ++deg[v];
  }

  offset_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + deg[v];
  adj_.resize(offset_[n]);
  weight_.resize(weighted ? offset_[n] : 0);

  std::vector<std::uint32_t> fill(offset_.begin(), offset_.end() - 1);
  for (const auto& [u, v, w] : edges) {
    adj_[fill[u]] = v;
    adj_[fill[v]] = u;
    if (weighted) {
      weight_[fill[u]] = w;
      weight_[fill[v]] = w;
    }
    ++fill[u];
    ++fill[v];
  }

  // Sort each incidence list by neighbor id (the canonical stored order),
  // keeping weights parallel, then reject parallel edges.
  for (VertexId v = 0; v < n; ++v) {
    const std::uint32_t lo = offset_[v], hi = offset_[v + 1];
    if (weighted) {
      std::vector<std::pair<VertexId, Weight>> row;
      row.reserve(hi - lo);
      for (std::uint32_t i = lo; i < hi; ++i)
        row.emplace_back(adj_[i], weight_[i]);
      std::sort(row.begin(), row.end());
      for (std::uint32_t i = lo; i < hi; ++i) {
        adj_[i] = row[i - lo].first;
        weight_[i] = row[i - lo].second;
      }
    } else {
      std::sort(adj_.begin() + lo, adj_.begin() + hi);
    }
    for (std::uint32_t i = lo + 1; i < hi; ++i) {
      if (adj_[i] == adj_[i - 1]) {
        throw std::invalid_argument("parallel edge " + std::to_string(v) + " " +
                                    std::to_string(adj_[i]));
      }
    }
    if (degree_bound_ && hi - lo > *degree_bound_) {
      throw std::invalid_argument(
          "degree of vertex " + std::to_string(v) + " is " +
          std::to_string(hi - lo) + ", above the declared bound " +
          std::to_string(*degree_bound_));
    }
  }
}

QueryGraph QueryGraph::from_edges(
    VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges,
    std::optional<std::uint32_t> degree_bound) {
  std::vector<std::tuple<VertexId, VertexId, Weight>> triples;
  triples.reserve(edges.size());
  for (const auto& [u, v] : edges) triples.emplace_back(u, v, kWeightScale);
  QueryGraph g;
  g.build(n, triples, /*weighted=*/false, degree_bound);
  return g;
}

QueryGraph QueryGraph::from_weighted_edges(
    VertexId n, const std::vector<std::tuple<VertexId, VertexId, Weight>>& edges,
    std::optional<std::uint32_t> degree_bound) {
  QueryGraph g;
  g.build(n, edges, /*weighted=*/true, degree_bound);
  return g;
}

std::uint32_t QueryGraph::degree(VertexId v, QueryCounter* counter) const {
  check_vertex(v);
  if (counter) ++counter->degree_queries;
  return offset_[v + 1] - offset_[v];
}

std::optional<NeighborAnswer> QueryGraph::neighbor(
    VertexId v, std::size_t i, QueryCounter* counter) const {
  check_vertex(v);
  if (i < 1) throw std::invalid_argument("neighbor index is 1-based");
  if (counter) ++counter->neighbor_queries;
  const std::uint32_t deg = offset_[v + 1] - offset_[v];
  if (i > deg) return std::nullopt;
  const std::uint32_t slot = offset_[v] + static_cast<std::uint32_t>(i - 1);
  return NeighborAnswer{adj_[slot],
                        weighted_ ? weight_[slot] : kWeightScale};
}

VertexId QueryGraph::random_neighbor(VertexId v, RngStream& stream,
                                     QueryCounter* counter) const {
  check_vertex(v);
  const std::uint32_t deg = offset_[v + 1] - offset_[v];
  if (deg == 0) {
    throw std::invalid_argument("random neighbor of isolated vertex " +
                                std::to_string(v));
  }
  if (counter) ++counter->random_neighbor_queries;
  return adj_[offset_[v] + stream.below(deg)];
}

std::span<const VertexId> QueryGraph::neighbors(VertexId v) const {
  check_vertex(v);
  return {adj_.data() + offset_[v], offset_[v + 1] - offset_[v]};
}

std::span<const Weight> QueryGraph::neighbor_weights(VertexId v) const {
  check_vertex(v);
  if (!weighted_) return {};
  return {weight_.data() + offset_[v], offset_[v + 1] - offset_[v]};
}

bool QueryGraph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

Weight QueryGraph::weight_of(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto row = neighbors(u);
  const auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) {
    throw std::invalid_argument("no edge " + std::to_string(u) + " " +
                                std::to_string(v));
  }
  if (!weighted_) return kWeightScale;
  return weight_[offset_[u] + static_cast<std::uint32_t>(it - row.begin())];
}

std::uint32_t QueryGraph::max_degree() const {
  std::uint32_t best = 0;
  for (VertexId v = 0; v < n_; ++v)
    best = std::max(best, offset_[v + 1] - offset_[v]);
  return best;
}

std::vector<EdgeRef> QueryGraph::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(m());
  for (VertexId u = 0; u < n_; ++u) {
    for (const VertexId v : neighbors(u)) {
      if (u < v) out.push_back(EdgeRef{u, v});
    }
  }
  // Rank order falls out of the scan order (u ascending, then v ascending).
  return out;
}

std::strong_ordering compare_weight(const QueryGraph& g, EdgeRef e1,
                                    EdgeRef e2) {
  if (e1 == e2) return std::strong_ordering::equal;
  const Weight w1 = g.weight_of(e1);
  const Weight w2 = g.weight_of(e2);
  if (w1 != w2) return w1 <=> w2;
  return e1.rank() <=> e2.rank();
}

std::optional<VertexId> InducedSubgraph::local_of(VertexId parent_id) const {
  const auto it =
      std::lower_bound(vertex_of.begin(), vertex_of.end(), parent_id);
  if (it == vertex_of.end() || *it != parent_id) return std::nullopt;
  return static_cast<VertexId>(it - vertex_of.begin());
}

namespace {

std::vector<VertexId> sorted_unique_members(const QueryGraph& g,
                                            const std::vector<VertexId>& S) {
  std::vector<VertexId> sorted(S);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("vertex set contains duplicates");
  }
  if (!sorted.empty() && sorted.back() >= g.n()) {
    throw std::invalid_argument("vertex set member out of range");
  }
  return sorted;
}

void charge_list_scans(const QueryGraph& g, const std::vector<VertexId>& S,
                       QueryCounter* counter) {
  if (!counter) return;
  for (const VertexId v : S) {
    ++counter->degree_queries;
    counter->neighbor_queries += g.neighbors(v).size();
  }
}

}  // namespace

InducedSubgraph induced_subgraph(const QueryGraph& g,
                                 const std::vector<VertexId>& S,
                                 QueryCounter* counter) {
  InducedSubgraph out;
  out.vertex_of = sorted_unique_members(g, S);
  charge_list_scans(g, out.vertex_of, counter);

  std::vector<std::tuple<VertexId, VertexId, Weight>> edges;
  for (VertexId local = 0; local < out.vertex_of.size(); ++local) {
    const VertexId u = out.vertex_of[local];
    for (const VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      const auto vlocal = out.local_of(v);
      if (!vlocal) continue;
      edges.emplace_back(local, *vlocal,
                         g.weighted() ? g.weight_of(u, v) : kWeightScale);
    }
  }
  const auto nn = static_cast<VertexId>(out.vertex_of.size());
  out.graph = g.weighted()
                  ? QueryGraph::from_weighted_edges(nn, edges, g.degree_bound())
                  : [&] {
                      std::vector<std::pair<VertexId, VertexId>> plain;
                      plain.reserve(edges.size());
                      for (const auto& [u, v, w] : edges) plain.emplace_back(u, v);
                      return QueryGraph::from_edges(nn, plain, g.degree_bound());
                    }();
  return out;
}

std::vector<EdgeRef> cut_edges(const QueryGraph& g,
                               const std::vector<VertexId>& S,
                               QueryCounter* counter) {
  const auto members = sorted_unique_members(g, S);
  charge_list_scans(g, members, counter);

  std::vector<char> in_s(g.n(), 0);
  for (const VertexId v : members) in_s[v] = 1;
  std::vector<EdgeRef> out;
  for (const VertexId u : members) {
    for (const VertexId v : g.neighbors(u)) {
      if (!in_s[v]) out.push_back(EdgeRef::canonical(u, v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const QueryGraph& g) {
  std::vector<std::vector<VertexId>> comps;
  std::vector<char> seen(g.n(), 0);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const VertexId u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::string format_weight(Weight w) {
  std::string out = std::to_string(w / kWeightScale);
  Weight frac = w % kWeightScale;
  if (frac != 0) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%06lld", static_cast<long long>(frac));
    std::string digits(buf);
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

Weight parse_weight(const std::string& text) {
  const auto dot = text.find('.');
  const std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) {
    throw std::runtime_error("empty weight");
  }
  if (frac.size() > 6) {
    throw std::runtime_error("weight '" + text +
                             "' has more than 6 fractional digits");
  }
  for (const char ch : whole) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::runtime_error("bad weight '" + text + "'");
    }
  }
  for (const char ch : frac) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::runtime_error("bad weight '" + text + "'");
    }
  }
  frac.resize(6, '0');
  const Weight value = std::stoll(whole.empty() ? "0" : whole) * kWeightScale +
                       std::stoll(frac);
  return value;
}

QueryGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);

  std::string header;
  if (!std::getline(in, header)) {
    throw std::runtime_error(path + ": missing header line");
  }
  std::istringstream hs(header);
  std::uint64_t n = 0, m = 0;
  if (!(hs >> n >> m)) {
    throw std::runtime_error(path + ": header must start with `n m`");
  }
  std::optional<std::uint32_t> degree_bound;
  bool weighted = false;
  std::string token;
  while (hs >> token) {
    if (token == "weighted") {
      weighted = true;
    } else {
      try {
        degree_bound = static_cast<std::uint32_t>(std::stoul(token));
      } catch (const std::exception&) {
        throw std::runtime_error(path + ": unrecognized header token '" +
                                 token + "'");
      }
    }
  }

  std::vector<std::tuple<VertexId, VertexId, Weight>> edges;
  edges.reserve(m);
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::uint64_t u = 0, v = 0;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected `u v [weight]`");
    }
    Weight w = kWeightScale;
    if (weighted) {
      std::string wtext;
      if (!(ls >> wtext)) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": missing weight on weighted graph");
      }
      w = parse_weight(wtext);
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v), w);
  }
  if (edges.size() != m) {
    throw std::runtime_error(path + ": header declares " + std::to_string(m) +
                             " edges, file has " + std::to_string(edges.size()));
  }

  QueryGraph g;
  try {
    if (weighted) {
      g = QueryGraph::from_weighted_edges(static_cast<VertexId>(n), edges,
                                          degree_bound);
    } else {
      std::vector<std::pair<VertexId, VertexId>> plain;
      plain.reserve(edges.size());
      for (const auto& [u, v, w] : edges) plain.emplace_back(u, v);
      g = QueryGraph::from_edges(static_cast<VertexId>(n), plain, degree_bound);
    }
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error(path + ": " + err.what());
  }
  return g;
}

void save_graph(const std::string& path, const QueryGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << g.n() << ' ' << g.m();
  if (g.degree_bound()) out << ' ' << *g.degree_bound();
  if (g.weighted()) out << " weighted";
  out << '\n';
  for (const EdgeRef e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << format_weight(g.weight_of(e));
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failure on " + path);
}

}  // namespace minorfree
