#include "minorfree/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace minorfree {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kU64Max / b) return kU64Max;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kU64Max - b ? kU64Max : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

// ceil(x) as a saturating uint64; x must be >= 0.
std::uint64_t sat_ceil(double x) {
  if (!(x < 1.8446744073709550e19)) return kU64Max;
  return static_cast<std::uint64_t>(std::ceil(x));
}

void sort_unique(std::vector<VertexId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_contains(const std::vector<VertexId>& v, VertexId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// One lazy walk that appends every visited vertex (start included) to sink
// and returns the endpoint.
VertexId walk_collect(const QueryGraph& g, VertexId start, std::uint64_t t,
                      RngStream& stream, QueryCounter* counter,
                      std::vector<VertexId>* sink) {
  const std::uint32_t d = *g.degree_bound();
  VertexId cur = start;
  if (sink != nullptr) sink->push_back(cur);
  for (std::uint64_t step = 0; step < t; ++step) {
    const std::uint32_t deg = g.degree(cur, counter);
    const std::uint64_t draw = stream.below(2 * static_cast<std::uint64_t>(d));
    if (draw < deg) {
      cur = g.neighbor(cur, static_cast<std::size_t>(draw) + 1, counter)
                ->vertex;
      if (sink != nullptr) sink->push_back(cur);
    }
  }
  return cur;
}

void require_degree_bound(const QueryGraph& g) {
  if (!g.degree_bound().has_value()) {
    throw std::invalid_argument(
        "lazy walks need a declared degree bound (bounded-degree model)");
  }
}

}  // namespace

std::uint64_t OracleParams::total_length_bound() const {
  return sat_mul(10, sat_pow(ell, max_walk_length_exp));
}

OracleParams OracleParams::theory_scale(double epsilon, int r,
                                        std::uint64_t seed) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1]");
  }
  OracleParams p;
  p.epsilon = epsilon;
  p.r = r;
  p.seed = seed;
  const std::uint64_t r3 =
      sat_pow(static_cast<std::uint64_t>(r > 0 ? r : 1), 3);
  p.ell = sat_add(r3, sat_ceil(std::pow(epsilon, -20.0)));
  std::uint64_t log_term = 1;
  for (std::uint64_t v = p.ell; v > 1; v >>= 1) ++log_term;
  p.walks_per_length = sat_mul(sat_pow(p.ell, 8), log_term);
  p.max_walk_length_exp = 8;
  p.part_size_cap = sat_ceil(std::pow(epsilon, -640.0));
  p.scaled = false;
  return p;
}

bool CoverResult::contains(VertexId v) const {
  return sorted_contains(vertices, v);
}

VertexId lazy_walk(const QueryGraph& g, VertexId start, std::uint64_t t,
                   RngStream& stream, QueryCounter* counter) {
  require_degree_bound(g);
  return walk_collect(g, start, t, stream, counter, nullptr);
}

CoverResult covering_query(const QueryGraph& g, VertexId v,
                           const OracleParams& params, QueryCounter* counter) {
  require_degree_bound(g);
  const std::uint64_t T = params.total_length_bound();
  const std::uint64_t x = params.walks_per_length;

  // Step 1: the full walk schedule from v; endpoints form R.
  std::vector<VertexId> encountered;
  std::vector<VertexId> endpoints;
  for (std::uint64_t t = 0; t < T; ++t) {
    for (std::uint64_t i = 0; i < x; ++i) {
      RngStream stream = make_stream(params.seed, "cover-walk", v, t, i);
      endpoints.push_back(
          walk_collect(g, v, t, stream, counter, &encountered));
    }
  }
  sort_unique(endpoints);

  // Step 2: the same schedule from every endpoint.  Walks are keyed by their
  // source, so the r == v schedule would replay identically; skip it.
  for (const VertexId r : endpoints) {
    if (r == v) continue;
    for (std::uint64_t t = 0; t < T; ++t) {
      for (std::uint64_t i = 0; i < x; ++i) {
        RngStream stream = make_stream(params.seed, "cover-walk", r, t, i);
        walk_collect(g, r, t, stream, counter, &encountered);
      }
    }
  }
  sort_unique(encountered);

  // Step 3: restrict to the connected component of v inside the encountered
  // set (the returned subgraph must be connected).
  std::vector<VertexId> component{v};
  std::vector<char> seen(encountered.size(), 0);
  const auto index_of = [&](VertexId u) {
    return static_cast<std::size_t>(
        std::lower_bound(encountered.begin(), encountered.end(), u) -
        encountered.begin());
  };
  seen[index_of(v)] = 1;
  for (std::size_t head = 0; head < component.size(); ++head) {
    const VertexId u = component[head];
    const std::uint32_t deg = g.degree(u, counter);
    for (std::uint32_t i = 1; i <= deg; ++i) {
      const VertexId w = g.neighbor(u, i, counter)->vertex;
      if (!sorted_contains(encountered, w)) continue;
      const std::size_t wi = index_of(w);
      if (!seen[wi]) {
        seen[wi] = 1;
        component.push_back(w);
      }
    }
  }
  std::sort(component.begin(), component.end());

  CoverResult out;
  out.anchor = v;
  out.cap_violation = component.size() > params.part_size_cap;
  out.vertices = std::move(component);
  return out;
}

PartitionHandle exhaustive_partition(const QueryGraph& g, double epsilon,
                                     std::uint64_t k, QueryCounter* counter) {
  if (k == 0) throw std::invalid_argument("part-size bound k must be >= 1");
  PartitionHandle handle;
  handle.epsilon = epsilon;
  handle.k = k;
  handle.part_of.assign(g.n(), -1);
  for (VertexId seed = 0; seed < g.n(); ++seed) {
    if (handle.part_of[seed] != -1) continue;
    const int id = static_cast<int>(handle.parts.size());
    std::vector<VertexId> part{seed};
    handle.part_of[seed] = id;
    for (std::size_t head = 0; head < part.size() && part.size() < k; ++head) {
      const VertexId u = part[head];
      const std::uint32_t deg = g.degree(u, counter);
      for (std::uint32_t i = 1; i <= deg && part.size() < k; ++i) {
        const VertexId w = g.neighbor(u, i, counter)->vertex;
        if (handle.part_of[w] == -1) {
          handle.part_of[w] = id;
          part.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    handle.parts.push_back(std::move(part));
  }
  for (const EdgeRef& e : g.edges()) {
    if (handle.part_of[e.u] != handle.part_of[e.v]) ++handle.cut_edge_count;
  }
  return handle;
}

const std::vector<VertexId>& partition_query(const PartitionHandle& handle,
                                             VertexId v) {
  if (v >= handle.part_of.size() || handle.part_of[v] < 0) {
    throw std::invalid_argument("vertex outside the partitioned graph");
  }
  return handle.parts[static_cast<std::size_t>(handle.part_of[v])];
}

CoverResult ball_cover_query(const QueryGraph& g, VertexId v,
                             std::uint32_t radius, std::uint64_t cap,
                             QueryCounter* counter) {
  if (cap == 0) throw std::invalid_argument("cap must be >= 1");
  g.degree(v);  // validates the vertex id before any counted work

  std::vector<VertexId> order{v};
  std::vector<std::uint32_t> depth{0};
  std::vector<char> seen(g.n(), 0);
  seen[v] = 1;
  bool truncated = false;
  for (std::size_t head = 0; head < order.size() && !truncated; ++head) {
    if (depth[head] == radius) continue;
    const VertexId u = order[head];
    const std::uint32_t deg = g.degree(u, counter);
    for (std::uint32_t i = 1; i <= deg; ++i) {
      const VertexId w = g.neighbor(u, i, counter)->vertex;
      if (seen[w]) continue;
      if (order.size() >= cap) {
        truncated = true;
        break;
      }
      seen[w] = 1;
      order.push_back(w);
      depth.push_back(depth[head] + 1);
    }
  }

  CoverResult out;
  out.anchor = v;
  out.cap_violation = truncated;
  std::sort(order.begin(), order.end());
  out.vertices = std::move(order);
  return out;
}

WalkCoverOracle::WalkCoverOracle(const QueryGraph& g, OracleParams params)
    : g_(&g), params_(params) {}

CoverResult WalkCoverOracle::cover(VertexId v, QueryCounter* counter) const {
  return covering_query(*g_, v, params_, counter);
}

std::uint64_t WalkCoverOracle::size_bound() const {
  return params_.part_size_cap;
}

std::string WalkCoverOracle::name() const { return "walk"; }

BallCoverOracle::BallCoverOracle(const QueryGraph& g, std::uint32_t radius,
                                 std::uint64_t cap)
    : g_(&g), radius_(radius), cap_(cap) {}

CoverResult BallCoverOracle::cover(VertexId v, QueryCounter* counter) const {
  return ball_cover_query(*g_, v, radius_, cap_, counter);
}

std::uint64_t BallCoverOracle::size_bound() const { return cap_; }

std::string BallCoverOracle::name() const { return "ball"; }

ExhaustiveCoverOracle::ExhaustiveCoverOracle(const QueryGraph& g,
                                             double epsilon, std::uint64_t k)
    : handle_(exhaustive_partition(g, epsilon, k)) {}

CoverResult ExhaustiveCoverOracle::cover(VertexId v,
                                         QueryCounter* counter) const {
  (void)counter;
  CoverResult out;
  out.anchor = v;
  out.vertices = partition_query(handle_, v);
  out.cap_violation = false;
  return out;
}

std::uint64_t ExhaustiveCoverOracle::size_bound() const { return handle_.k; }

std::string ExhaustiveCoverOracle::name() const { return "exhaustive"; }

}  // namespace minorfree
