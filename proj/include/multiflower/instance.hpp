#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "multiflower/hypergraph.hpp"
#include "multiflower/inequality.hpp"

namespace multiflower {

/// One multilinear term: coef * prod_{v in vars} x_v. vars is canonical.
struct Term {
  VertexSet vars;
  double coef = 0.0;

  friend bool operator==(const Term& a, const Term& b) {
    return a.vars == b.vars && a.coef == b.coef;
  }
};

/// sum of terms <= rhs over binary x.
struct PolyConstraint {
  std::vector<Term> terms;
  double rhs = 0.0;

  friend bool operator==(const PolyConstraint& a, const PolyConstraint& b) {
    return a.terms == b.terms && a.rhs == b.rhs;
  }
};

/// A binary polynomial optimization instance: maximize the objective subject
/// to the polynomial <= constraints, x in {0,1}^n.
struct PolynomialInstance {
  int n = 0;
  std::vector<Term> objective;
  std::vector<PolyConstraint> constraints;

  friend bool operator==(const PolynomialInstance& a, const PolynomialInstance& b) {
    return a.n == b.n && a.objective == b.objective && a.constraints == b.constraints;
  }
};

struct ParseOptions {
  // When set, a vertex appearing in no term is an error instead of a
  // warning plus renumbering.
  bool require_cover = false;
};

/// Parse the JSON instance format. Canonicalizes: term vars sorted, duplicate
/// terms within one expression merged, zero-coefficient terms dropped, terms
/// sorted; vertices not appearing in any term trigger a warning and a dense
/// renumbering (unless options.require_cover).
PolynomialInstance parse_instance(std::string_view text,
                                  std::vector<std::string>* warnings = nullptr,
                                  const ParseOptions& options = {});

/// Canonical JSON serialization; parse(render(i)) == i for canonical i, and
/// render is byte-deterministic.
std::string render_instance(const PolynomialInstance& inst);

/// The instance lifted to vertex/edge variables: the hypergraph whose edges
/// are all terms of cardinality >= 2 anywhere in the instance, the linear
/// objective over VarRefs, and the linearized constraint rows.
struct LiftedInstance {
  Hypergraph graph;
  std::map<VarRef, double> objective;
  std::vector<LinearInequality> constraints;
};

LiftedInstance to_hypergraph(const PolynomialInstance& inst);

/// Deterministic random instance: edge_count distinct terms of cardinality in
/// [2, rank], coefficients uniform on {-10,...,10}\{0}, every vertex covered.
/// Throws input_error when the parameters are infeasible.
PolynomialInstance generate_random(int n, int edge_count, int rank, std::uint64_t seed);

}  // namespace multiflower
