#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multiflower/hypergraph.hpp"

namespace multiflower {

enum class CutTag { std_lin, flower, eflower, rmc, projection, instance };

std::string to_string(CutTag tag);

/// Provenance attached to generated cuts: the center edge and neighbor list
/// for flower-type cuts, the flower partition and witness choices for
/// projection cuts.
struct CutMeta {
  VertexSet center;
  std::vector<VertexSet> neighbors;
  std::vector<std::pair<VertexSet, VertexSet>> witnesses;  // (artificial part, witness edge)
  int proj_class = -1;  // 0/1/2 for projection-system rows, -1 otherwise

  friend bool operator<(const CutMeta& a, const CutMeta& b) {
    if (a.center != b.center) return a.center < b.center;
    return a.neighbors < b.neighbors;
  }
};

/// Sparse inequality  sum coeffs[v] * z_v  <=  rhs.  The sense is always <=;
/// >= rows are stored negated. Zero coefficients are never stored.
struct LinearInequality {
  std::map<VarRef, double> coeffs;
  double rhs = 0.0;
  CutTag tag = CutTag::std_lin;
  std::optional<CutMeta> meta;

  LinearInequality() = default;
  explicit LinearInequality(CutTag t) : tag(t) {}

  LinearInequality& add(const VarRef& v, double c);
  LinearInequality& set_rhs(double r) {
    rhs = r;
    return *this;
  }

  double lhs_at(const std::map<VarRef, double>& point) const;
  double violation_at(const std::map<VarRef, double>& point) const {
    return lhs_at(point) - rhs;
  }
  bool satisfied_by(const std::map<VarRef, double>& point, double tol) const {
    return violation_at(point) <= tol;
  }

  /// Exact serialization of (coeffs, rhs); used to deduplicate identical cuts
  /// arriving from different (center, neighbors) derivations.
  std::string canonical_key() const;

  /// Scale-invariant serialization: coefficients divided by the largest
  /// absolute entry. Used for syntactic redundancy removal in projections.
  std::string normalized_key() const;

  std::string to_string() const;
};

/// A fractional point over the vertex and edge variables of a hypergraph.
struct FractionalPoint {
  std::map<VarRef, double> values;

  /// True iff every vertex 1..n and every edge has a value.
  bool covers(const Hypergraph& h) const;
};

}  // namespace multiflower
