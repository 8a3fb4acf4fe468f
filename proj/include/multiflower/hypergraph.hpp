#pragma once

#include <string>
#include <vector>

#include "multiflower/common.hpp"

namespace multiflower {

/// A hypergraph G = (V, E) with vertices 1..n and edges of cardinality >= 2.
/// Edges are stored canonically: each edge sorted ascending, the edge list
/// sorted lexicographically, no duplicates. This ordering is the determinism
/// anchor for everything built on top.
struct Hypergraph {
  int n = 0;
  std::vector<VertexSet> edges;

  Hypergraph() = default;
  Hypergraph(int n_, std::vector<VertexSet> edges_);

  /// Maximum edge cardinality; 0 for an edge-free hypergraph.
  int rank() const;

  bool has_edge(const VertexSet& e) const;

  /// All edges e != e0 with e ∩ e0 nonempty, in lexicographic order.
  /// Throws input_error if e0 is not an edge.
  std::vector<VertexSet> adjacent_edges(const VertexSet& e0) const;
};

enum class VarKind { vertex, edge, artificial };

/// Reference to an LP variable: a vertex variable or a product variable over
/// a vertex set. Identity (equality, ordering) is by the canonical sorted
/// key only, so an artificial edge and an original edge with the same vertex
/// set are the same variable.
struct VarRef {
  VarKind kind = VarKind::vertex;
  VertexSet key;

  static VarRef vertex(int v) { return {VarKind::vertex, {v}}; }
  static VarRef edge(VertexSet e) {
    VarRef r{VarKind::edge, canonical_set(std::move(e))};
    if (r.key.size() < 2) throw input_error("edge variable needs at least two vertices");
    return r;
  }
  static VarRef artificial(VertexSet e) {
    VarRef r{VarKind::artificial, canonical_set(std::move(e))};
    if (r.key.size() < 2) throw input_error("artificial variable needs at least two vertices");
    return r;
  }

  friend bool operator==(const VarRef& a, const VarRef& b) { return a.key == b.key; }
  friend bool operator!=(const VarRef& a, const VarRef& b) { return a.key != b.key; }
  friend bool operator<(const VarRef& a, const VarRef& b) { return a.key < b.key; }

  std::string label() const {
    if (key.size() == 1) return "x" + std::to_string(key[0]);
    return "y" + set_to_string(key);
  }
};

/// Classify a vertex set as a variable of the hypergraph: singleton -> vertex,
/// original edge -> edge, anything else -> artificial product variable.
VarRef var_for(const Hypergraph& h, const VertexSet& s);

}  // namespace multiflower
