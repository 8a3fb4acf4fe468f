#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "multiflower/hypergraph.hpp"
#include "multiflower/inequality.hpp"

namespace multiflower {

/// Global partition choices: each vertex set L (|L| >= 2) is split exactly
/// once into {J, K}. Stored canonically with min(L) in J.
struct PartitionMap {
  std::map<VertexSet, std::pair<VertexSet, VertexSet>> entries;

  /// Validates J, K nonempty, disjoint, J u K = L; canonicalizes the pair.
  /// Throws input_error on a conflicting duplicate entry.
  void add(VertexSet l, VertexSet j, VertexSet k);

  bool has(const VertexSet& l) const { return entries.count(l) != 0; }
  const std::pair<VertexSet, VertexSet>& at(const VertexSet& l) const;

  std::string to_string() const;
};

enum class RmcStrategy { leftmost, balanced };

/// A recursive McCormick relaxation of the multilinear set of a hypergraph:
/// per-edge recursive sequences, the partition map restricted to reachable
/// sets, and the artificial edges introduced by the decomposition.
struct RecursiveMcCormick {
  Hypergraph base;
  PartitionMap partition;                               // reachable sets only
  std::map<VertexSet, std::vector<VertexSet>> sequences;  // e -> R_e, lexicographic
  std::vector<VertexSet> artificial;                    // sorted lexicographically

  std::size_t size() const { return artificial.size(); }
  const std::vector<VertexSet>& sequence(const VertexSet& e) const;
  bool is_artificial(const VertexSet& s) const;
  bool in_sequence(const VertexSet& e, const VertexSet& s) const;
};

/// Run the recursive decomposition with a built-in strategy: leftmost splits
/// off the lowest-index vertex, balanced halves the sorted vertex list.
RecursiveMcCormick build_rmc(const Hypergraph& h, RmcStrategy strategy);

/// Run the decomposition with explicit partition choices. The map must cover
/// every set reachable from the edges; extra entries are ignored.
RecursiveMcCormick build_rmc(const Hypergraph& h, const PartitionMap& map);

/// The bilinear-envelope system: for every partitioned L = J u K the four
/// inequalities z_L >= 0, z_L >= z_J + z_K - 1, z_L <= z_J, z_L <= z_K, in
/// lexicographic L order, followed (by default) by the vertex box rows
/// z_v <= 1, z_v >= 0.
std::vector<LinearInequality> rmc_constraints(const RecursiveMcCormick& r,
                                              bool include_vertex_bounds = true);

/// True iff all pairwise recursive-sequence intersections are empty.
bool is_non_overlapping(const RecursiveMcCormick& r);

/// Level of an artificial edge: max over edges e with ebar in R_e of the
/// number of artificial members of R_e contained in ebar. Always in
/// [1, rank-2].
int edge_level(const RecursiveMcCormick& r, const VertexSet& ebar);

/// Max edge level, or 0 when there are no artificial edges.
int rmc_level(const RecursiveMcCormick& r);

/// A partition of an edge into singletons, original sub-edges from R_e, and
/// witnessed artificial edges from R_e.
struct FlowerPartition {
  VertexSet edge;
  std::vector<VertexSet> parts;                              // disjoint, union = edge
  std::vector<VertexSet> artificial_parts;                   // subset of parts
  std::vector<std::pair<VertexSet, VertexSet>> witnesses;    // (part, witness edge)
};

/// All flower partitions of e, one entry per witness assignment, in
/// deterministic order. Guarded against edges larger than 8 vertices.
std::vector<FlowerPartition> enumerate_flower_partitions(const RecursiveMcCormick& r,
                                                         const VertexSet& e);

/// The projection of the RMC onto the original variables: z_v <= 1, z_e >= 0,
/// z_e <= z_p for p in e and for original edges p in R_e, and one inequality
/// per flower partition. No artificial variable appears.
std::vector<LinearInequality> rmc_projection_system(const RecursiveMcCormick& r);

/// Visit every complete partition map of the hypergraph in deterministic
/// order. The visitor returns false to stop early. Returns the number of maps
/// visited; throws limit_error past max_maps.
long enumerate_partition_maps(const Hypergraph& h,
                              const std::function<bool(const PartitionMap&)>& visit,
                              long max_maps = 1000000);

struct MinSizeResult {
  RecursiveMcCormick rmc;
  bool optimal = false;  // false when the node budget was exhausted
  long nodes = 0;
};

/// Exhaustive search for an RMC minimizing the number of artificial edges;
/// ties broken lexicographically on the sorted artificial set, then on the
/// partition map. Returns the best found with optimal=false when the node
/// budget runs out.
MinSizeResult min_size_rmc(const Hypergraph& h, long node_budget = 1000000);

}  // namespace multiflower
