#ifndef MINORFREE_GENERATORS_HPP
#define MINORFREE_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minorfree/graph.hpp"

// Seeded constructors of planar (hence minor-free) test instances with known
// ground truth: Hamiltonian by construction, certifiably far from
// Hamiltonian, or with exact spanning-forest weight.  Every instance carries
// a combinatorial embedding (rotation system) and is verified planar by face
// tracing against the Euler formula.

namespace minorfree {

enum class Family {
  grid,                // d=4 workhorse for the bounded-degree algorithms
  random_tree,         // uniform random attachment
  cycle_chords_planar, // planted spanning cycle plus non-crossing chords
  apollonian,          // iterated face subdivision; high degree skew
  star_forest,         // certifiably far from Hamiltonian
  disjoint_paths,      // certifiably far; empty-cut witnesses
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct GenSpec {
  Family family = Family::grid;
  std::uint32_t n = 1;
  std::uint64_t seed = 0;
  bool weighted = false;
  std::uint32_t wmax = 1;  // weights drawn uniformly from [1, wmax] in micro steps

  // Family-specific knobs.
  std::uint32_t star_size = 4;    // vertices per star (star_forest)
  std::uint32_t path_len = 4;     // vertices per path (disjoint_paths)
  double chord_fraction = 0.25;   // target chords per vertex (cycle_chords_planar)
};

struct GroundTruth {
  Family family = Family::grid;
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
  // Set when constructively known or computed within the exact-DP budget.
  std::optional<bool> is_hamiltonian;
  // Planted Hamiltonian vertex order (grid, cycle_chords_planar).
  std::vector<VertexId> planted_ham_order;
  // Exact distance to containing a Hamiltonian path, when certified.
  std::optional<std::size_t> certified_ham_distance;
  // Exact minimum-spanning-forest weight in micro units (n <= 10^5).
  std::optional<Weight> msf_weight;
};

struct GeneratedInstance {
  QueryGraph graph;
  GroundTruth truth;
  // rotation[v] = cyclic order of v's neighbors in the planar embedding.
  std::vector<std::vector<VertexId>> rotation;
};

// Deterministic in spec (byte-identical across runs); throws
// std::invalid_argument when n is too small for the family.
GeneratedInstance generate(const GenSpec& spec);

std::map<std::uint32_t, std::uint32_t> degree_histogram(const QueryGraph& g);

// Face-traces the rotation system and checks the Euler formula
// V - E + F = 2C (isolated vertices counted as one face each).  True iff the
// rotation is a planar embedding of g.
bool verify_planar_rotation(const QueryGraph& g,
                            const std::vector<std::vector<VertexId>>& rotation);

}  // namespace minorfree

#endif  // MINORFREE_GENERATORS_HPP
