#pragma once

#include <functional>
#include <map>
#include <vector>

#include "multiflower/inequality.hpp"
#include "multiflower/instance.hpp"

namespace multiflower {

/// A boxed-variable maximization LP. Every variable referenced by a row or
/// the objective must be declared; bounds default to [0, 1] and must be
/// finite.
struct LpModel {
  std::vector<VarRef> vars;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LinearInequality> rows;
  std::map<VarRef, double> objective;

  int add_var(const VarRef& v, double lb = 0.0, double ub = 1.0);
  bool has_var(const VarRef& v) const { return index_.count(v) != 0; }
  int index_of(const VarRef& v) const;
  void add_row(LinearInequality row);
  void set_objective(std::map<VarRef, double> obj);

 private:
  std::map<VarRef, int> index_;
};

enum class LpStatus { optimal, infeasible, iteration_limit };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  std::map<VarRef, double> point;
};

struct SimplexOptions {
  int max_pivots = 100000;
  // Switch from Dantzig pricing to Bland's rule after this many degenerate
  // pivots; guarantees termination.
  int bland_after_degenerate = 1000;
  double feas_tol = 1e-9;
  double pivot_tol = 1e-11;
};

/// Two-phase dense primal simplex. Deterministic for a fixed variable order.
LpSolution solve(const LpModel& model, const SimplexOptions& options = {});

/// Exact projection of a <=-system by Fourier-Motzkin elimination of one
/// variable. Removes syntactic duplicates (scale-normalized); throws
/// limit_error when the output would exceed max_output rows.
std::vector<LinearInequality> fourier_motzkin_eliminate(
    const std::vector<LinearInequality>& system, const VarRef& v,
    std::size_t max_output = 10000);

struct BruteForceResult {
  bool feasible = false;
  double value = 0.0;
  std::vector<int> assignment;  // binary, size n; first maximizer in mask order
};

/// Exact optimum of the instance by enumerating all 2^n binary points.
/// Guarded at n <= 24.
BruteForceResult brute_force_optimum(const PolynomialInstance& inst);

}  // namespace multiflower
