#include "multiflower/relax.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <set>

namespace multiflower {

namespace {

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

void add_rows(LpModel& model, const std::vector<LinearInequality>& rows) {
  for (const auto& row : rows) model.add_row(row);
}

}  // namespace

LpModel build_std_model(const LiftedInstance& lifted) {
  LpModel model;
  for (int v = 1; v <= lifted.graph.n; ++v) model.add_var(VarRef::vertex(v));
  for (const auto& e : lifted.graph.edges) model.add_var(VarRef::edge(e));
  add_rows(model, standard_linearization(lifted.graph));
  add_rows(model, lifted.constraints);
  model.set_objective(lifted.objective);
  return model;
}

LpModel build_rmc_model(const LiftedInstance& lifted, const RecursiveMcCormick& rmc) {
  LpModel model;
  for (int v = 1; v <= lifted.graph.n; ++v) model.add_var(VarRef::vertex(v));
  for (const auto& e : lifted.graph.edges) model.add_var(VarRef::edge(e));
  for (const auto& e : rmc.artificial) model.add_var(VarRef::artificial(e));
  add_rows(model, rmc_constraints(rmc));
  add_rows(model, lifted.constraints);
  model.set_objective(lifted.objective);
  return model;
}

CuttingPlaneResult cutting_plane_loop(LpModel model, const Separator& separator, double tol,
                                      int max_rounds, const SimplexOptions& simplex) {
  CuttingPlaneResult result;
  std::set<std::string> present;
  for (const auto& row : model.rows) present.insert(row.canonical_key());

  double previous = std::numeric_limits<double>::infinity();
  while (true) {
    LpSolution sol = solve(model, simplex);
    if (sol.status == LpStatus::iteration_limit)
      throw solver_error("simplex hit the pivot limit inside the cutting-plane loop");
    if (sol.status == LpStatus::infeasible)
      throw solver_error("relaxation LP is infeasible");
    if (sol.value > previous + 1e-9)
      throw solver_error("cutting-plane bound increased between rounds");
    previous = sol.value;
    result.bound = sol.value;
    result.solution = sol;

    FractionalPoint point;
    point.values = sol.point;
    auto cuts = separator(point);
    int added = 0;
    for (auto& cut : cuts) {
      if (cut.violation <= tol) continue;
      if (!present.insert(cut.ineq.canonical_key()).second) continue;
      model.add_row(std::move(cut.ineq));
      ++added;
    }
    if (added == 0) break;
    result.cuts_added += added;
    ++result.rounds;
    if (result.rounds >= max_rounds) {
      // Round limit: solve once more so the reported bound reflects all cuts.
      LpSolution last = solve(model, simplex);
      if (last.status == LpStatus::optimal) {
        result.bound = last.value;
        result.solution = last;
      }
      result.hit_round_limit = true;
      break;
    }
  }
  result.n_ineqs = static_cast<int>(model.rows.size());
  return result;
}

namespace {

// Estimated number of neighbor-subset candidates across all centers; used to
// pick one-shot enumeration over the cutting-plane loop.
double eflower_candidate_estimate(const Hypergraph& h) {
  const int r = h.rank();
  double total = 0;
  for (const auto& e0 : h.edges) {
    const double k = static_cast<double>(h.adjacent_edges(e0).size());
    double binom = 1;
    for (int i = 1; i <= r / 2 && i <= k; ++i) {
      binom = binom * (k - i + 1) / i;
      total += binom;
      if (total > 1e15) return total;
    }
  }
  return total;
}

}  // namespace

RelaxResult relaxation_bound(const LiftedInstance& lifted, const MethodSpec& method,
                             const RelaxOptions& options) {
  const double start = now_ms();
  RelaxResult result;
  result.method = method.name;

  switch (method.kind) {
    case MethodSpec::Kind::std_lin: {
      LpModel model = build_std_model(lifted);
      result.solution = solve(model, options.simplex);
      result.n_vars = static_cast<int>(model.vars.size());
      result.n_ineqs = static_cast<int>(model.rows.size());
      break;
    }
    case MethodSpec::Kind::flower: {
      LpModel model = build_std_model(lifted);
      auto cuts = enumerate_flower(lifted.graph, options.enumerate);
      result.cuts_added = static_cast<int>(cuts.size());
      add_rows(model, cuts);
      result.solution = solve(model, options.simplex);
      result.n_vars = static_cast<int>(model.vars.size());
      result.n_ineqs = static_cast<int>(model.rows.size());
      break;
    }
    case MethodSpec::Kind::eflower: {
      LpModel model = build_std_model(lifted);
      result.n_vars = static_cast<int>(model.vars.size());
      if (eflower_candidate_estimate(lifted.graph) < options.enum_threshold) {
        auto cuts = enumerate_extended_flower(lifted.graph, options.enumerate);
        result.cuts_added = static_cast<int>(cuts.size());
        add_rows(model, cuts);
        result.solution = solve(model, options.simplex);
        result.n_ineqs = static_cast<int>(model.rows.size());
      } else {
        const Hypergraph& h = lifted.graph;
        auto loop = cutting_plane_loop(
            std::move(model),
            [&h, &options](const FractionalPoint& p) {
              return separate_extended_flower(h, p, options.tol);
            },
            options.tol, options.max_rounds, options.simplex);
        result.solution = loop.solution;
        result.rounds = loop.rounds;
        result.cuts_added = loop.cuts_added;
        result.n_ineqs = loop.n_ineqs;
        result.hit_round_limit = loop.hit_round_limit;
      }
      break;
    }
    case MethodSpec::Kind::rmc: {
      RecursiveMcCormick rmc;
      if (method.explicit_map)
        rmc = build_rmc(lifted.graph, *method.explicit_map);
      else if (method.minsize)
        rmc = min_size_rmc(lifted.graph, options.minsize_budget).rmc;
      else
        rmc = build_rmc(lifted.graph, method.strategy);
      LpModel model = build_rmc_model(lifted, rmc);
      result.solution = solve(model, options.simplex);
      result.n_vars = static_cast<int>(model.vars.size());
      result.n_ineqs = static_cast<int>(model.rows.size());
      break;
    }
  }

  if (result.solution.status == LpStatus::iteration_limit)
    throw solver_error("simplex hit the pivot limit");
  if (result.solution.status == LpStatus::infeasible)
    throw solver_error("relaxation LP is infeasible");
  result.bound = result.solution.value;
  result.ms = now_ms() - start;
  return result;
}

RelaxResult relaxation_bound(const PolynomialInstance& inst, const MethodSpec& method,
                             const RelaxOptions& options) {
  return relaxation_bound(to_hypergraph(inst), method, options);
}

void assert_dominance(const CompareReport& report, double tol) {
  auto find = [&](const std::string& name) -> const RelaxResult* {
    for (const auto& row : report.rows)
      if (row.method == name) return &row;
    return nullptr;
  };
  const RelaxResult* std_row = find("std");
  const RelaxResult* flower_row = find("flower");
  const RelaxResult* eflower_row = find("eflower");

  auto check = [&](double lo, double hi, const std::string& what) {
    if (lo > hi + tol)
      throw solver_error("dominance violated: " + what + " (" + std::to_string(lo) + " > " +
                         std::to_string(hi) + ")");
  };
  if (flower_row && std_row) check(flower_row->bound, std_row->bound, "flower <= std");
  if (eflower_row && flower_row) check(eflower_row->bound, flower_row->bound, "eflower <= flower");
  if (eflower_row && std_row) check(eflower_row->bound, std_row->bound, "eflower <= std");
  for (const auto& row : report.rows) {
    if (row.method.rfind("rmc", 0) == 0) {
      if (eflower_row) check(eflower_row->bound, row.bound, "eflower <= " + row.method);
      if (std_row) check(row.bound, std_row->bound, row.method + " <= std");
    }
    if (report.exact) check(*report.exact, row.bound, "exact <= " + row.method);
  }
}

}  // namespace multiflower
