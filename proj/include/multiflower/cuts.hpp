#pragma once

#include <vector>

#include "multiflower/hypergraph.hpp"
#include "multiflower/inequality.hpp"

namespace multiflower {

/// Why a neighbor set was rejected.
enum class FlowerReject {
  intersection_too_small,     // |e0 ∩ e_k| < 2 for some neighbor (flower condition)
  overlapping_intersections,  // e0 ∩ e_i ∩ e_j nonempty for i != j (flower condition)
  gamma_too_small,            // private intersection below 2 (extended condition)
};

struct flower_error : input_error {
  FlowerReject reason;
  VertexSet offender;
  int gamma = -1;
  flower_error(FlowerReject r, VertexSet off, int g, const std::string& msg)
      : input_error(msg), reason(r), offender(std::move(off)), gamma(g) {}
};

/// The per-vertex box rows plus the convex hull of each product term:
/// z_v <= 1; z_e >= 0, z_e >= sum_{v in e} z_v - |e| + 1, z_e <= z_v.
std::vector<LinearInequality> standard_linearization(const Hypergraph& h);

/// The inequality template shared by flower and extended flower cuts:
///   sum_{v in e0 \ U e_k} z_v + sum_k z_{e_k} - z_{e0} <= |e0 \ U e_k| + |T| - 1.
/// Validates only that T is a nonempty set of distinct edges adjacent to e0.
LinearInequality flower_template(const Hypergraph& h, const VertexSet& e0,
                                 std::vector<VertexSet> neighbors, CutTag tag);

/// Flower inequality centered at e0: requires |e0 ∩ e_k| >= 2 for every
/// neighbor and pairwise disjoint intersections with e0.
LinearInequality flower_inequality(const Hypergraph& h, const VertexSet& e0,
                                   std::vector<VertexSet> neighbors);

/// Private intersection sizes gamma_i = |(e0∩e_i) \ U_{j != i} (e0∩e_j)|.
std::vector<int> flower_gammas(const VertexSet& e0, const std::vector<VertexSet>& neighbors);

/// Extended flower inequality centered at e0: requires gamma_i >= 2 for all i.
LinearInequality extended_flower_inequality(const Hypergraph& h, const VertexSet& e0,
                                            std::vector<VertexSet> neighbors);

struct ReduceResult {
  std::vector<VertexSet> neighbors;        // survivors, all with gamma >= 2 (or empty)
  std::vector<LinearInequality> side;      // dominating rows recorded per drop
};

/// Drop neighbors with gamma 0 (recording z_e <= 1) or gamma 1 (recording
/// z_e <= z_vbar) until the survivors satisfy the extended condition.
/// Deterministic: always drops the lexicographically smallest offender.
ReduceResult reduce_neighbors(const Hypergraph& h, const VertexSet& e0,
                              std::vector<VertexSet> neighbors);

struct EnumerateOptions {
  long per_center_cap = 100000;  // nodes explored / cuts emitted per center
};

/// All flower inequalities over all centers, deduplicated, deterministic.
std::vector<LinearInequality> enumerate_flower(const Hypergraph& h,
                                               const EnumerateOptions& opt = {});

/// All extended flower inequalities over all centers, deduplicated.
std::vector<LinearInequality> enumerate_extended_flower(const Hypergraph& h,
                                                        const EnumerateOptions& opt = {});

struct SeparatedCut {
  LinearInequality ineq;
  double violation = 0.0;
};

/// Polynomial separation over extended flower inequalities. For each center
/// keeps, per intersection pattern f, only one value-maximizing neighbor
/// (ties lexicographic), then scans neighbor subsets of cardinality at most
/// floor(rank/2). Returns every inequality violated by more than tol, sorted
/// by decreasing violation then by (center, neighbors).
std::vector<SeparatedCut> separate_extended_flower(const Hypergraph& h,
                                                   const FractionalPoint& point, double tol);

/// Definition-level oracle: all centers, all neighbor subsets of all adjacent
/// edges. Guarded for small hypergraphs only.
std::vector<SeparatedCut> brute_force_separation(const Hypergraph& h,
                                                 const FractionalPoint& point, double tol);

/// True iff the inequality holds at every binary point of the multilinear
/// set, with product variables expanded exactly. Guarded at n <= 20.
bool validity_check(const Hypergraph& h, const LinearInequality& ineq);

}  // namespace multiflower
