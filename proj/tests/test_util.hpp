#pragma once

// Shared fixtures and test-only oracles.

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "multiflower/io.hpp"
#include "multiflower/lp.hpp"
#include "multiflower/relax.hpp"

namespace mftest {

namespace mf = multiflower;

inline std::string data_path(const std::string& name) {
  return std::string(MULTIFLOWER_TEST_DATA) + "/" + name;
}

inline mf::PolynomialInstance load_instance_fixture(const std::string& name) {
  return mf::parse_instance(mf::read_file(data_path(name)));
}

inline mf::PartitionMap load_map_fixture(const std::string& name) {
  return mf::load_partition_map(mf::read_file(data_path(name)));
}

// Independent LP oracle: enumerate all basic points (intersections of n
// constraint hyperplanes, bounds included), keep the feasible ones, and take
// the best objective value. Only for tiny models.
inline double lp_vertex_enumeration_optimum(const mf::LpModel& model) {
  const int n = static_cast<int>(model.vars.size());
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (const auto& ineq : model.rows) {
    std::vector<double> a(n, 0.0);
    for (const auto& [v, c] : ineq.coeffs) a[model.index_of(v)] += c;
    rows.push_back(std::move(a));
    rhs.push_back(ineq.rhs);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> up(n, 0.0), down(n, 0.0);
    up[j] = 1.0;
    down[j] = -1.0;
    rows.push_back(up);
    rhs.push_back(model.upper[j]);
    rows.push_back(down);
    rhs.push_back(-model.lower[j]);
  }
  const int m = static_cast<int>(rows.size());

  std::vector<double> cost(n, 0.0);
  for (const auto& [v, c] : model.objective) cost[model.index_of(v)] += c;

  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> pick(n);
  auto choose = [&](auto&& self, int start, int depth) -> void {
    if (depth == n) {
      // Solve the n x n system rows[pick] * x = rhs[pick].
      std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = rows[pick[i]][j];
        a[i][n] = rhs[pick[i]];
      }
      for (int col = 0; col < n; ++col) {
        int piv = -1;
        double bestp = 1e-9;
        for (int i = col; i < n; ++i)
          if (std::fabs(a[i][col]) > bestp) {
            bestp = std::fabs(a[i][col]);
            piv = i;
          }
        if (piv < 0) return;  // singular
        std::swap(a[col], a[piv]);
        for (int i = 0; i < n; ++i) {
          if (i == col) continue;
          const double f = a[i][col] / a[col][col];
          if (f == 0.0) continue;
          for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
      }
      std::vector<double> x(n);
      for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
      for (int i = 0; i < m; ++i) {
        double lhs = 0.0;
        for (int j = 0; j < n; ++j) lhs += rows[i][j] * x[j];
        if (lhs > rhs[i] + 1e-7) return;  // infeasible vertex
      }
      double val = 0.0;
      for (int j = 0; j < n; ++j) val += cost[j] * x[j];
      best = std::max(best, val);
      return;
    }
    for (int i = start; i <= m - (n - depth); ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  choose(choose, 0, 0);
  return best;
}

// Uniform random point over the vertex and edge variables of a hypergraph.
inline mf::FractionalPoint random_point(const mf::Hypergraph& h, mf::Rng& rng) {
  mf::FractionalPoint p;
  for (int v = 1; v <= h.n; ++v) p.values[mf::VarRef::vertex(v)] = rng.uniform01();
  for (const auto& e : h.edges) p.values[mf::VarRef::edge(e)] = rng.uniform01();
  return p;
}

// Random point with each edge value drawn below its vertex minima; lands
// inside envelope-style systems often enough for membership tests to see
// both verdicts.
inline mf::FractionalPoint scaled_point(const mf::Hypergraph& h, mf::Rng& rng) {
  mf::FractionalPoint p;
  for (int v = 1; v <= h.n; ++v) p.values[mf::VarRef::vertex(v)] = rng.uniform01();
  for (const auto& e : h.edges) {
    double lo = 1.0;
    for (int v : e) lo = std::min(lo, p.values[mf::VarRef::vertex(v)]);
    p.values[mf::VarRef::edge(e)] = lo * rng.uniform01();
  }
  return p;
}

// Random objective over the original variables, coefficients in [-1, 1).
inline std::map<mf::VarRef, double> random_objective(const mf::Hypergraph& h, mf::Rng& rng) {
  std::map<mf::VarRef, double> obj;
  for (int v = 1; v <= h.n; ++v) obj[mf::VarRef::vertex(v)] = rng.uniform_real(-1, 1);
  for (const auto& e : h.edges) obj[mf::VarRef::edge(e)] = rng.uniform_real(-1, 1);
  return obj;
}

// Maximum of an objective over a <=-system with [0,1] boxes on exactly the
// variables of a hypergraph.
inline double system_optimum(const mf::Hypergraph& h,
                             const std::vector<mf::LinearInequality>& rows,
                             const std::map<mf::VarRef, double>& objective) {
  mf::LpModel model;
  for (int v = 1; v <= h.n; ++v) model.add_var(mf::VarRef::vertex(v));
  for (const auto& e : h.edges) model.add_var(mf::VarRef::edge(e));
  for (const auto& row : rows)
    for (const auto& [var, c] : row.coeffs) model.add_var(var);  // artificials
  for (const auto& row : rows) model.add_row(row);
  model.set_objective(objective);
  auto sol = mf::solve(model);
  if (sol.status != mf::LpStatus::optimal) throw mf::solver_error("oracle LP not optimal");
  return sol.value;
}

// Membership of a point in a <=-system.
inline bool satisfies_all(const std::vector<mf::LinearInequality>& rows,
                          const std::map<mf::VarRef, double>& point, double tol = 1e-9) {
  for (const auto& row : rows)
    if (row.violation_at(point) > tol) return false;
  return true;
}

}  // namespace mftest
