#include "multiflower/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace multiflower {

int LpModel::add_var(const VarRef& v, double lb, double ub) {
  if (!std::isfinite(lb) || !std::isfinite(ub) || lb > ub)
    throw input_error("variable " + v.label() + " has invalid bounds");
  auto [it, inserted] = index_.emplace(v, static_cast<int>(vars.size()));
  if (!inserted) return it->second;
  vars.push_back(v);
  lower.push_back(lb);
  upper.push_back(ub);
  return it->second;
}

int LpModel::index_of(const VarRef& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw input_error("undeclared variable " + v.label());
  return it->second;
}

void LpModel::add_row(LinearInequality row) {
  for (const auto& [v, c] : row.coeffs) index_of(v);  // must be declared
  rows.push_back(std::move(row));
}

void LpModel::set_objective(std::map<VarRef, double> obj) {
  for (const auto& [v, c] : obj) index_of(v);
  objective = std::move(obj);
}

namespace {

// Dense tableau over columns [structural | slack | artificial | rhs].
struct Tableau {
  int nrows = 0;
  int ncols = 0;  // including rhs column
  std::vector<double> a;
  std::vector<double> obj;  // reduced-cost row, obj[ncols-1] tracks -value
  std::vector<int> basis;
  std::vector<char> active;

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * ncols + j]; }
  double get(int i, int j) const { return a[static_cast<std::size_t>(i) * ncols + j]; }

  void pivot(int r, int c) {
    const double p = at(r, c);
    for (int j = 0; j < ncols; ++j) at(r, j) /= p;
    at(r, c) = 1.0;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || !active[i]) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j < ncols; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    const double f = obj[c];
    if (f != 0.0) {
      for (int j = 0; j < ncols; ++j) obj[j] -= f * at(r, j);
      obj[c] = 0.0;
    }
    basis[r] = c;
  }
};

// Runs the pivoting loop for the current objective row. Columns in
// [0, usable_cols) may enter. Returns false on iteration limit.
bool run_simplex(Tableau& t, int usable_cols, const SimplexOptions& opt, int& pivots,
                 int& degenerate) {
  const int rhs = t.ncols - 1;
  while (true) {
    const bool bland = degenerate >= opt.bland_after_degenerate;
    int enter = -1;
    double best = opt.feas_tol;
    for (int j = 0; j < usable_cols; ++j) {
      const double rc = t.obj[j];
      if (rc > best) {
        enter = j;
        if (bland) break;
        best = rc;
      }
    }
    if (enter < 0) return true;  // optimal

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < t.nrows; ++i) {
      if (!t.active[i]) continue;
      const double aij = t.get(i, enter);
      if (aij <= opt.pivot_tol) continue;
      const double ratio = t.get(i, rhs) / aij;
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 && (leave < 0 || t.basis[i] < t.basis[leave]))) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave < 0)
      throw solver_error("LP unbounded; variable bounds should prevent this");
    if (best_ratio < opt.feas_tol) ++degenerate;
    t.pivot(leave, enter);
    if (++pivots >= opt.max_pivots) return false;
  }
}

}  // namespace

LpSolution solve(const LpModel& model, const SimplexOptions& opt) {
  const int n = static_cast<int>(model.vars.size());

  // Shift variables to x' = x - lb so all structural variables are >= 0,
  // and add explicit rows x' <= ub - lb.
  const int m = static_cast<int>(model.rows.size()) + n;
  std::vector<std::vector<double>> A(m, std::vector<double>(n, 0.0));
  std::vector<double> b(m, 0.0);
  for (std::size_t r = 0; r < model.rows.size(); ++r) {
    double shift = 0.0;
    for (const auto& [v, c] : model.rows[r].coeffs) {
      const int j = model.index_of(v);
      A[r][j] += c;
      shift += c * model.lower[j];
    }
    b[r] = model.rows[r].rhs - shift;
  }
  for (int j = 0; j < n; ++j) {
    const int r = static_cast<int>(model.rows.size()) + j;
    A[r][j] = 1.0;
    b[r] = model.upper[j] - model.lower[j];
  }

  std::vector<int> art_rows;
  for (int i = 0; i < m; ++i)
    if (b[i] < -opt.feas_tol) art_rows.push_back(i);
  const int n_art = static_cast<int>(art_rows.size());

  Tableau t;
  t.nrows = m;
  t.ncols = n + m + n_art + 1;
  t.a.assign(static_cast<std::size_t>(m) * t.ncols, 0.0);
  t.obj.assign(t.ncols, 0.0);
  t.basis.assign(m, -1);
  t.active.assign(m, 1);
  const int rhs = t.ncols - 1;
  const int art0 = n + m;

  int next_art = 0;
  for (int i = 0; i < m; ++i) {
    const double sign = b[i] < -opt.feas_tol ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t.at(i, j) = sign * A[i][j];
    t.at(i, n + i) = sign;  // slack
    t.at(i, rhs) = sign * b[i];
    if (sign < 0) {
      const int ac = art0 + next_art++;
      t.at(i, ac) = 1.0;
      t.basis[i] = ac;
    } else {
      t.basis[i] = n + i;
    }
  }

  int pivots = 0;
  int degenerate = 0;

  if (n_art > 0) {
    // Phase I: maximize -sum(artificials); price out the artificial basis.
    std::fill(t.obj.begin(), t.obj.end(), 0.0);
    for (int k = 0; k < n_art; ++k) t.obj[art0 + k] = -1.0;
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= art0)
        for (int j = 0; j < t.ncols; ++j) t.obj[j] += t.get(i, j);
    if (!run_simplex(t, art0, opt, pivots, degenerate))
      return {LpStatus::iteration_limit, 0.0, {}};
    const double phase1 = -t.obj[rhs];
    if (phase1 < -opt.feas_tol * 10) return {LpStatus::infeasible, 0.0, {}};
    // Drive remaining artificials out of the basis or deactivate their rows.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < art0) continue;
      int c = -1;
      for (int j = 0; j < art0 && c < 0; ++j)
        if (std::fabs(t.get(i, j)) > opt.pivot_tol) c = j;
      if (c >= 0)
        t.pivot(i, c);
      else
        t.active[i] = 0;  // redundant row
    }
  }

  // Phase II objective over shifted variables.
  std::fill(t.obj.begin(), t.obj.end(), 0.0);
  std::vector<double> cost(n, 0.0);
  for (const auto& [v, c] : model.objective) cost[model.index_of(v)] += c;
  for (int j = 0; j < n; ++j) t.obj[j] = cost[j];
  for (int i = 0; i < m; ++i) {
    if (!t.active[i] || t.basis[i] >= n) continue;
    const double cb = cost[t.basis[i]];
    if (cb == 0.0) continue;
    for (int j = 0; j < t.ncols; ++j) t.obj[j] -= cb * t.get(i, j);
  }
  if (!run_simplex(t, art0, opt, pivots, degenerate))
    return {LpStatus::iteration_limit, 0.0, {}};

  LpSolution sol;
  sol.status = LpStatus::optimal;
  std::vector<double> x(n, 0.0);
  for (int i = 0; i < m; ++i)
    if (t.active[i] && t.basis[i] < n) x[t.basis[i]] = t.get(i, rhs);
  for (int j = 0; j < n; ++j) {
    double xj = x[j] + model.lower[j];
    xj = std::clamp(xj, model.lower[j], model.upper[j]);
    sol.point[model.vars[j]] = xj;
    sol.value += cost[j] * xj;
  }
  // Contract check: the reported point must actually satisfy the model.
  for (const auto& row : model.rows)
    if (row.violation_at(sol.point) > opt.feas_tol)
      throw solver_error("simplex returned an infeasible point");
  return sol;
}

std::vector<LinearInequality> fourier_motzkin_eliminate(
    const std::vector<LinearInequality>& system, const VarRef& v, std::size_t max_output) {
  std::vector<const LinearInequality*> pos, neg;
  std::vector<LinearInequality> out;
  std::set<std::string> seen;
  auto push = [&](LinearInequality ineq) {
    // Drop numerically dead coefficients created by cancellation.
    for (auto it = ineq.coeffs.begin(); it != ineq.coeffs.end();) {
      if (std::fabs(it->second) <= 1e-12)
        it = ineq.coeffs.erase(it);
      else
        ++it;
    }
    if (ineq.coeffs.empty() && ineq.rhs >= -1e-12) return;  // trivially true
    if (!seen.insert(ineq.normalized_key()).second) return;
    if (out.size() >= max_output)
      throw limit_error("Fourier-Motzkin output exceeds " + std::to_string(max_output) +
                        " inequalities");
    out.push_back(std::move(ineq));
  };

  for (const auto& ineq : system) {
    auto it = ineq.coeffs.find(v);
    if (it == ineq.coeffs.end() || it->second == 0.0)
      push(ineq);
    else if (it->second > 0)
      pos.push_back(&ineq);
    else
      neg.push_back(&ineq);
  }
  for (const auto* p : pos) {
    const double cp = p->coeffs.at(v);
    for (const auto* q : neg) {
      const double cq = -q->coeffs.at(v);
      // cq * p + cp * q keeps integral data integral.
      LinearInequality combo(CutTag::projection);
      for (const auto& [w, c] : p->coeffs)
        if (w != v) combo.add(w, cq * c);
      for (const auto& [w, c] : q->coeffs)
        if (w != v) combo.add(w, cp * c);
      combo.set_rhs(cq * p->rhs + cp * q->rhs);
      push(std::move(combo));
    }
  }
  return out;
}

BruteForceResult brute_force_optimum(const PolynomialInstance& inst) {
  if (inst.n > 24) throw limit_error("brute-force optimum guarded at n <= 24");
  const int n = inst.n;

  auto masks_of = [&](const std::vector<Term>& terms) {
    std::vector<std::pair<std::uint32_t, double>> out;
    for (const auto& t : terms) {
      std::uint32_t m = 0;
      for (int v : t.vars) m |= 1u << (v - 1);
      out.push_back({m, t.coef});
    }
    return out;
  };
  auto obj = masks_of(inst.objective);
  std::vector<std::pair<std::vector<std::pair<std::uint32_t, double>>, double>> cons;
  for (const auto& c : inst.constraints) cons.push_back({masks_of(c.terms), c.rhs});

  BruteForceResult best;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    bool ok = true;
    for (const auto& [terms, rhs] : cons) {
      double lhs = 0.0;
      for (const auto& [m, c] : terms)
        if ((x & m) == m) lhs += c;
      if (lhs > rhs + 1e-9) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    double val = 0.0;
    for (const auto& [m, c] : obj)
      if ((x & m) == m) val += c;
    if (!best.feasible || val > best.value) {
      best.feasible = true;
      best.value = val;
      best.assignment.assign(n, 0);
      for (int v = 0; v < n; ++v) best.assignment[v] = (x >> v) & 1;
    }
  }
  return best;
}

}  // namespace multiflower
