#include "minorfree/hamiltonicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace minorfree {

namespace {

std::uint64_t checked_ceil(double x, const char* what) {
  if (!(x >= 0) || x > 9.0e18) {
    throw std::invalid_argument(std::string("implausible size for ") + what);
  }
  const std::uint64_t v = static_cast<std::uint64_t>(std::ceil(x));
  return v == 0 ? 1 : v;
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1]");
  }
}

}  // namespace

std::uint64_t EstimatorConfig::heavy_threshold() const {
  if (heavy_threshold_override != 0) return heavy_threshold_override;
  return checked_ceil(8.0 * r_arb / epsilon, "heavy threshold");
}

HamEstimate estimate_ham_distance(const QueryGraph& g,
                                  const EstimatorConfig& cfg) {
  require_epsilon(cfg.epsilon);
  if (cfg.part_size > kPathCoverBudget) {
    throw std::invalid_argument(
        "part size exceeds the exact path-cover budget");
  }
  HamEstimate out;
  out.epsilon = cfg.epsilon;
  out.heavy_threshold = cfg.heavy_threshold();
  out.sample_size =
      checked_ceil(cfg.sample_constant / (cfg.epsilon * cfg.epsilon),
                   "sample size");
  if (g.n() == 0) return out;

  // Heavy/light split, then the baseline partition of the light subgraph at
  // parameter epsilon/4.
  std::vector<VertexId> light;
  std::vector<char> is_heavy(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (g.degree(v, &out.queries) > out.heavy_threshold) {
      is_heavy[v] = 1;
    } else {
      light.push_back(v);
    }
  }
  const InducedSubgraph light_graph =
      induced_subgraph(g, light, &out.queries);
  const PartitionHandle handle = exhaustive_partition(
      light_graph.graph, cfg.epsilon / 4.0, cfg.part_size, &out.queries);
  out.partition_cut_count = handle.cut_edge_count;

  // Exact path cover per part, cached: the partition is fixed, so x_v is a
  // pure function of the part.
  std::map<int, double> part_value;
  const auto light_value = [&](VertexId local) {
    const int pid = handle.part_of[local];
    const auto it = part_value.find(pid);
    if (it != part_value.end()) return it->second;
    std::vector<VertexId> part = handle.parts[static_cast<std::size_t>(pid)];
    const InducedSubgraph part_graph =
        induced_subgraph(light_graph.graph, part);
    const double value =
        static_cast<double>(min_path_cover(part_graph.graph).size()) /
        static_cast<double>(part.size());
    part_value.emplace(pid, value);
    return value;
  };

  RngStream samples = make_stream(cfg.seed, "estimate-sample");
  double sum = 0;
  out.x_values.reserve(out.sample_size);
  for (std::uint64_t i = 0; i < out.sample_size; ++i) {
    const VertexId v = static_cast<VertexId>(samples.below(g.n()));
    double x;
    if (is_heavy[v]) {
      x = 1.0;
    } else {
      x = light_value(*light_graph.local_of(v));
    }
    out.x_values.push_back(x);
    sum += x;
  }
  out.value = sum / static_cast<double>(out.sample_size) *
              static_cast<double>(g.n());
  return out;
}

TolerantResult tolerant_test_ham(const QueryGraph& g, double epsilon,
                                 EstimatorConfig cfg) {
  require_epsilon(epsilon);
  cfg.epsilon = epsilon / 8.0;
  TolerantResult out;
  out.estimate = estimate_ham_distance(g, cfg);
  out.threshold = 0.75 * epsilon * static_cast<double>(g.n());
  out.accepted = out.estimate.value < out.threshold;
  return out;
}

CutBoundCheck cut_bound_witness(const QueryGraph& g,
                                const std::vector<VertexId>& T) {
  CutBoundCheck out;
  if (T.empty()) return out;
  const InducedSubgraph ind = induced_subgraph(g, T);
  out.path_cover = min_path_cover(ind.graph).size();
  out.cut_size = cut_edges(g, T).size();
  // pc - 1 > cut/2, in exact integer arithmetic.
  out.violation = 2 * (out.path_cover - 1) > out.cut_size;
  return out;
}

std::string witness_kind_name(HamWitness::Kind kind) {
  switch (kind) {
    case HamWitness::Kind::empty_cut:
      return "empty-cut";
    case HamWitness::Kind::cut_bound:
      return "cut-bound";
    case HamWitness::Kind::whole_graph_cover:
      return "whole-graph-cover";
  }
  return "unknown";
}

bool verify_witness(const QueryGraph& g, const HamWitness& w) {
  switch (w.kind) {
    case HamWitness::Kind::empty_cut:
      return w.cover.size() < g.n() && cut_edges(g, w.cover).empty();
    case HamWitness::Kind::cut_bound:
      return cut_bound_witness(g, w.subset).violation;
    case HamWitness::Kind::whole_graph_cover:
      return w.cover.size() == g.n() && min_path_cover(g).size() > 1;
  }
  return false;
}

OneSidedResult test_ham_one_sided(const QueryGraph& g, double epsilon,
                                  const CoveringOracle& oracle,
                                  std::uint64_t seed,
                                  std::uint64_t sample_constant,
                                  std::uint64_t subset_budget) {
  require_epsilon(epsilon);
  OneSidedResult out;
  if (g.n() == 0) return out;
  out.samples = checked_ceil(
      static_cast<double>(sample_constant) *
          static_cast<double>(oracle.size_bound()) / epsilon,
      "sample size");

  RngStream samples = make_stream(seed, "ham-sample");
  for (std::uint64_t i = 0; i < out.samples; ++i) {
    const VertexId v = static_cast<VertexId>(samples.below(g.n()));
    const CoverResult cover = oracle.cover(v, &out.queries);
    const std::vector<VertexId>& S = cover.vertices;

    if (S.size() == g.n()) {
      // The cover is the whole graph; its cut is trivially empty, so decide
      // by the exact path cover instead.
      const std::size_t whole_pc = min_path_cover(g).size();
      if (whole_pc > 1) {
        HamWitness w;
        w.kind = HamWitness::Kind::whole_graph_cover;
        w.sample_vertex = v;
        w.cover = S;
        w.path_cover = whole_pc;
        out.accepted = false;
        out.witness = std::move(w);
        return out;
      }
      continue;
    }

    if (cut_edges(g, S, &out.queries).empty()) {
      HamWitness w;
      w.kind = HamWitness::Kind::empty_cut;
      w.sample_vertex = v;
      w.cover = S;
      w.cut_size = 0;
      out.accepted = false;
      out.witness = std::move(w);
      return out;
    }

    // Sweep every connected subset T of the cover for a cut-bound
    // violation.
    if (S.size() > kPathCoverBudget) {
      throw BudgetError("cover too large for the subset sweep", S.size());
    }
    const InducedSubgraph ind = induced_subgraph(g, S, &out.queries);
    const SubsetTables tables = subset_tables(ind.graph);
    std::vector<std::uint64_t> global_degree(S.size());
    for (std::size_t j = 0; j < S.size(); ++j) {
      global_degree[j] = g.degree(S[j], &out.queries);
    }
    const std::uint32_t masks = 1u << S.size();
    std::uint64_t connected_seen = 0;
    for (std::uint32_t mask = 1; mask < masks; ++mask) {
      if (!tables.connected[mask]) continue;
      if (++connected_seen > subset_budget) {
        throw BudgetError("connected-subset sweep over budget",
                          connected_seen);
      }
      std::uint64_t degree_sum = 0;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        const unsigned bit =
            static_cast<unsigned>(__builtin_ctz(rest));
        degree_sum += global_degree[bit];
      }
      const std::uint64_t cut =
          degree_sum - 2ull * tables.edges_within[mask];
      const std::uint64_t pc = tables.path_cover[mask];
      if (2 * (pc - 1) > cut) {
        HamWitness w;
        w.kind = HamWitness::Kind::cut_bound;
        w.sample_vertex = v;
        w.cover = S;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
          const unsigned bit =
              static_cast<unsigned>(__builtin_ctz(rest));
          w.subset.push_back(ind.vertex_of[bit]);
        }
        w.path_cover = pc;
        w.cut_size = cut;
        out.accepted = false;
        out.witness = std::move(w);
        return out;
      }
    }
  }
  return out;
}

}  // namespace minorfree
