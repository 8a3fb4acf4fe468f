#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multiflower/cuts.hpp"
#include "multiflower/instance.hpp"
#include "multiflower/lp.hpp"
#include "multiflower/rmc.hpp"

namespace multiflower {

/// Which relaxation to build and solve.
struct MethodSpec {
  enum class Kind { std_lin, flower, eflower, rmc };
  Kind kind = Kind::std_lin;
  // rmc only: either a built-in strategy, min-size search, or an explicit map.
  RmcStrategy strategy = RmcStrategy::leftmost;
  bool minsize = false;
  std::optional<PartitionMap> explicit_map;
  std::string name = "std";

  static MethodSpec std_lin() { return {Kind::std_lin, RmcStrategy::leftmost, false, {}, "std"}; }
  static MethodSpec flower() { return {Kind::flower, RmcStrategy::leftmost, false, {}, "flower"}; }
  static MethodSpec eflower() {
    return {Kind::eflower, RmcStrategy::leftmost, false, {}, "eflower"};
  }
  static MethodSpec rmc(RmcStrategy s) {
    return {Kind::rmc, s, false, {},
            s == RmcStrategy::leftmost ? "rmc:leftmost" : "rmc:balanced"};
  }
  static MethodSpec rmc_minsize() { return {Kind::rmc, RmcStrategy::leftmost, true, {}, "rmc:minsize"}; }
  static MethodSpec rmc_explicit(PartitionMap map, std::string name) {
    return {Kind::rmc, RmcStrategy::leftmost, false, std::move(map), std::move(name)};
  }
};

struct RelaxOptions {
  double tol = 1e-7;            // separation violation tolerance
  int max_rounds = 100;         // cutting-plane rounds
  long enum_threshold = 10000;  // one-shot extended-flower enumeration below this estimate
  EnumerateOptions enumerate;
  SimplexOptions simplex;
  long minsize_budget = 1000000;
};

struct RelaxResult {
  std::string method;
  double bound = 0.0;
  int n_vars = 0;
  int n_ineqs = 0;
  int rounds = 0;
  int cuts_added = 0;
  double ms = 0.0;
  bool hit_round_limit = false;
  LpSolution solution;
};

/// Base LP of a relaxation in the original variable space: standard
/// linearization rows plus the lifted instance constraints.
LpModel build_std_model(const LiftedInstance& lifted);

/// Lifted RMC LP: bilinear-envelope rows over vertex, edge and artificial
/// variables, plus the lifted instance constraints.
LpModel build_rmc_model(const LiftedInstance& lifted, const RecursiveMcCormick& rmc);

using Separator = std::function<std::vector<SeparatedCut>(const FractionalPoint&)>;

struct CuttingPlaneResult {
  double bound = 0.0;
  int cuts_added = 0;
  int rounds = 0;
  bool hit_round_limit = false;
  LpSolution solution;
  int n_ineqs = 0;
};

/// Solve, separate at the optimum, add every returned cut not already in the
/// model, repeat. The bound sequence is checked to be nonincreasing.
CuttingPlaneResult cutting_plane_loop(LpModel model, const Separator& separator, double tol,
                                      int max_rounds, const SimplexOptions& simplex = {});

RelaxResult relaxation_bound(const LiftedInstance& lifted, const MethodSpec& method,
                             const RelaxOptions& options = {});
RelaxResult relaxation_bound(const PolynomialInstance& inst, const MethodSpec& method,
                             const RelaxOptions& options = {});

/// Bound-comparison report: one row per method, sorted by method name.
struct CompareReport {
  std::string instance_id;
  std::vector<RelaxResult> rows;
  std::optional<double> exact;
};

/// Checks the dominance relations among the methods present: eflower <=
/// flower <= std, eflower <= every rmc, and every bound >= exact, all within
/// tol. Throws solver_error on violation.
void assert_dominance(const CompareReport& report, double tol = 1e-6);

}  // namespace multiflower
