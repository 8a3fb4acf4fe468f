#include "multiflower/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace multiflower {

std::vector<LinearInequality> standard_linearization(const Hypergraph& h) {
  std::vector<LinearInequality> out;
  for (int v = 1; v <= h.n; ++v)
    out.push_back(LinearInequality(CutTag::std_lin).add(VarRef::vertex(v), 1.0).set_rhs(1.0));
  for (const auto& e : h.edges) {
    const VarRef ze = VarRef::edge(e);
    out.push_back(LinearInequality(CutTag::std_lin).add(ze, -1.0).set_rhs(0.0));
    LinearInequality lower(CutTag::std_lin);
    for (int v : e) lower.add(VarRef::vertex(v), 1.0);
    lower.add(ze, -1.0).set_rhs(static_cast<double>(e.size()) - 1.0);
    out.push_back(std::move(lower));
    for (int v : e)
      out.push_back(
          LinearInequality(CutTag::std_lin).add(ze, 1.0).add(VarRef::vertex(v), -1.0).set_rhs(0.0));
  }
  return out;
}

namespace {

std::vector<VertexSet> check_neighbors(const Hypergraph& h, const VertexSet& e0,
                                       std::vector<VertexSet> neighbors) {
  if (!h.has_edge(e0)) throw input_error("center " + set_to_string(e0) + " is not an edge");
  if (neighbors.empty()) throw input_error("neighbor set must be nonempty");
  for (auto& e : neighbors) e = canonical_set(std::move(e));
  std::sort(neighbors.begin(), neighbors.end());
  if (std::adjacent_find(neighbors.begin(), neighbors.end()) != neighbors.end())
    throw input_error("duplicate neighbor");
  for (const auto& e : neighbors) {
    if (!h.has_edge(e)) throw input_error("neighbor " + set_to_string(e) + " is not an edge");
    if (e == e0) throw input_error("center cannot be its own neighbor");
    if (set_intersection(e, e0).empty())
      throw input_error("neighbor " + set_to_string(e) + " is not adjacent to the center");
  }
  return neighbors;
}

}  // namespace

LinearInequality flower_template(const Hypergraph& h, const VertexSet& e0,
                                 std::vector<VertexSet> neighbors, CutTag tag) {
  neighbors = check_neighbors(h, e0, std::move(neighbors));
  VertexSet covered;
  for (const auto& e : neighbors) covered = set_union(covered, e);
  const VertexSet outside = set_difference(e0, covered);

  LinearInequality li(tag);
  for (int v : outside) li.add(VarRef::vertex(v), 1.0);
  for (const auto& e : neighbors) li.add(VarRef::edge(e), 1.0);
  li.add(VarRef::edge(e0), -1.0);
  li.set_rhs(static_cast<double>(outside.size()) + static_cast<double>(neighbors.size()) - 1.0);
  CutMeta meta;
  meta.center = e0;
  meta.neighbors = std::move(neighbors);
  li.meta = std::move(meta);
  return li;
}

LinearInequality flower_inequality(const Hypergraph& h, const VertexSet& e0,
                                   std::vector<VertexSet> neighbors) {
  neighbors = check_neighbors(h, e0, std::move(neighbors));
  for (const auto& e : neighbors) {
    if (set_intersection(e, e0).size() < 2)
      throw flower_error(FlowerReject::intersection_too_small, e, -1,
                         "neighbor " + set_to_string(e) + " meets the center in fewer than 2 vertices");
  }
  for (std::size_t i = 0; i < neighbors.size(); ++i)
    for (std::size_t j = i + 1; j < neighbors.size(); ++j) {
      const auto common =
          set_intersection(set_intersection(neighbors[i], neighbors[j]), e0);
      if (!common.empty())
        throw flower_error(FlowerReject::overlapping_intersections, neighbors[j], -1,
                           "neighbors " + set_to_string(neighbors[i]) + " and " +
                               set_to_string(neighbors[j]) + " overlap inside the center");
    }
  return flower_template(h, e0, std::move(neighbors), CutTag::flower);
}

std::vector<int> flower_gammas(const VertexSet& e0, const std::vector<VertexSet>& neighbors) {
  std::vector<VertexSet> inter;
  inter.reserve(neighbors.size());
  for (const auto& e : neighbors) inter.push_back(set_intersection(e, e0));
  std::vector<int> gammas(neighbors.size());
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    VertexSet priv = inter[i];
    for (std::size_t j = 0; j < neighbors.size(); ++j)
      if (j != i) priv = set_difference(priv, inter[j]);
    gammas[i] = static_cast<int>(priv.size());
  }
  return gammas;
}

LinearInequality extended_flower_inequality(const Hypergraph& h, const VertexSet& e0,
                                            std::vector<VertexSet> neighbors) {
  neighbors = check_neighbors(h, e0, std::move(neighbors));
  const auto gammas = flower_gammas(e0, neighbors);
  for (std::size_t i = 0; i < neighbors.size(); ++i)
    if (gammas[i] < 2)
      throw flower_error(FlowerReject::gamma_too_small, neighbors[i], gammas[i],
                         "neighbor " + set_to_string(neighbors[i]) +
                             " has private intersection of size " + std::to_string(gammas[i]));
  return flower_template(h, e0, std::move(neighbors), CutTag::eflower);
}

ReduceResult reduce_neighbors(const Hypergraph& h, const VertexSet& e0,
                              std::vector<VertexSet> neighbors) {
  ReduceResult result;
  result.neighbors = check_neighbors(h, e0, std::move(neighbors));
  while (!result.neighbors.empty()) {
    const auto gammas = flower_gammas(e0, result.neighbors);
    int drop = -1;
    for (std::size_t i = 0; i < result.neighbors.size(); ++i)
      if (gammas[i] <= 1 && drop < 0) drop = static_cast<int>(i);  // lexicographically smallest
    if (drop < 0) break;
    const VertexSet& e = result.neighbors[drop];
    LinearInequality side(CutTag::std_lin);
    if (gammas[drop] == 0) {
      side.add(VarRef::edge(e), 1.0).set_rhs(1.0);  // z_e <= 1
    } else {
      // gamma 1: the single surviving private vertex dominates z_e.
      VertexSet priv = set_intersection(e, e0);
      for (std::size_t j = 0; j < result.neighbors.size(); ++j)
        if (static_cast<int>(j) != drop)
          priv = set_difference(priv, set_intersection(result.neighbors[j], e0));
      side.add(VarRef::edge(e), 1.0).add(VarRef::vertex(priv.at(0)), -1.0).set_rhs(0.0);
    }
    result.side.push_back(std::move(side));
    result.neighbors.erase(result.neighbors.begin() + drop);
  }
  return result;
}

namespace {

struct CutSink {
  std::vector<LinearInequality> cuts;
  std::set<std::string> seen;
  void push(LinearInequality li) {
    if (seen.insert(li.canonical_key()).second) cuts.push_back(std::move(li));
  }
};

bool gammas_ok(const VertexSet& e0, const std::vector<VertexSet>& neighbors) {
  for (int g : flower_gammas(e0, neighbors))
    if (g < 2) return false;
  return true;
}

}  // namespace

std::vector<LinearInequality> enumerate_flower(const Hypergraph& h,
                                               const EnumerateOptions& opt) {
  CutSink sink;
  for (const auto& e0 : h.edges) {
    std::vector<VertexSet> eligible;
    for (const auto& e : h.adjacent_edges(e0))
      if (set_intersection(e, e0).size() >= 2) eligible.push_back(e);

    long emitted = 0;
    std::vector<VertexSet> chosen;
    auto grow = [&](auto&& self, std::size_t from) -> void {
      if (!chosen.empty()) {
        if (++emitted > opt.per_center_cap)
          throw limit_error("flower enumeration cap exceeded at center " + set_to_string(e0));
        sink.push(flower_template(h, e0, chosen, CutTag::flower));
      }
      for (std::size_t i = from; i < eligible.size(); ++i) {
        bool ok = true;
        for (const auto& c : chosen)
          if (!set_intersection(set_intersection(c, eligible[i]), e0).empty()) {
            ok = false;
            break;
          }
        if (!ok) continue;
        chosen.push_back(eligible[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    grow(grow, 0);
  }
  return std::move(sink.cuts);
}

std::vector<LinearInequality> enumerate_extended_flower(const Hypergraph& h,
                                                        const EnumerateOptions& opt) {
  CutSink sink;
  for (const auto& e0 : h.edges) {
    const auto adjacent = h.adjacent_edges(e0);
    const std::size_t max_t = e0.size() / 2;
    long nodes = 0;
    std::vector<VertexSet> chosen;
    auto grow = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t i = from; i < adjacent.size(); ++i) {
        if (chosen.size() >= max_t) return;
        if (++nodes > opt.per_center_cap)
          throw limit_error("extended-flower enumeration cap exceeded at center " +
                            set_to_string(e0));
        chosen.push_back(adjacent[i]);
        // The condition is preserved under taking subsets, so an invalid set
        // cannot have a valid superset: prune.
        if (gammas_ok(e0, chosen)) {
          sink.push(flower_template(h, e0, chosen, CutTag::eflower));
          self(self, i + 1);
        }
        chosen.pop_back();
      }
    };
    grow(grow, 0);
  }
  return std::move(sink.cuts);
}

namespace {

std::vector<SeparatedCut> sort_and_dedupe(std::vector<SeparatedCut> cuts) {
  std::stable_sort(cuts.begin(), cuts.end(), [](const SeparatedCut& a, const SeparatedCut& b) {
    if (a.violation != b.violation) return a.violation > b.violation;
    return *a.ineq.meta < *b.ineq.meta;
  });
  std::set<std::string> seen;
  std::vector<SeparatedCut> out;
  for (auto& c : cuts)
    if (seen.insert(c.ineq.canonical_key()).second) out.push_back(std::move(c));
  return out;
}

}  // namespace

std::vector<SeparatedCut> separate_extended_flower(const Hypergraph& h,
                                                   const FractionalPoint& point, double tol) {
  if (!point.covers(h)) throw input_error("point does not cover every vertex and edge");
  if (tol <= 0) throw input_error("separation tolerance must be positive");
  const int r = h.rank();
  const std::size_t max_t = static_cast<std::size_t>(r / 2);

  std::vector<SeparatedCut> found;
  for (const auto& e0 : h.edges) {
    // E_{e0}: per intersection pattern f, one edge maximizing the point value.
    std::map<VertexSet, VertexSet> best;
    for (const auto& e : h.edges) {
      if (e == e0) continue;
      VertexSet f = set_intersection(e, e0);
      if (f.size() < 2) continue;
      auto it = best.find(f);
      if (it == best.end()) {
        best.emplace(std::move(f), e);
      } else {
        const double cur = point.values.at(VarRef::edge(it->second));
        const double cand = point.values.at(VarRef::edge(e));
        if (cand > cur) it->second = e;  // ties keep the lexicographically smaller
      }
    }
    std::vector<VertexSet> candidates;
    for (const auto& [f, e] : best) candidates.push_back(e);
    std::sort(candidates.begin(), candidates.end());
    if (r <= 30 && candidates.size() > (1ull << r) - static_cast<std::size_t>(r) - 1)
      throw solver_error("candidate set exceeds the structural bound 2^r - r - 1");

    std::vector<VertexSet> chosen;
    auto grow = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t i = from; i < candidates.size(); ++i) {
        if (chosen.size() >= max_t) return;
        chosen.push_back(candidates[i]);
        if (gammas_ok(e0, chosen)) {
          LinearInequality li = flower_template(h, e0, chosen, CutTag::eflower);
          const double viol = li.violation_at(point.values);
          if (viol > tol) found.push_back({std::move(li), viol});
          self(self, i + 1);
        }
        chosen.pop_back();
      }
    };
    grow(grow, 0);
  }
  return sort_and_dedupe(std::move(found));
}

std::vector<SeparatedCut> brute_force_separation(const Hypergraph& h,
                                                 const FractionalPoint& point, double tol) {
  if (!point.covers(h)) throw input_error("point does not cover every vertex and edge");

  std::vector<SeparatedCut> found;
  for (const auto& e0 : h.edges) {
    const auto adjacent = h.adjacent_edges(e0);
    if (adjacent.size() > 18) throw limit_error("brute-force separation guarded at 18 neighbors");
    for (unsigned mask = 1; mask < (1u << adjacent.size()); ++mask) {
      std::vector<VertexSet> chosen;
      for (std::size_t i = 0; i < adjacent.size(); ++i)
        if (mask >> i & 1) chosen.push_back(adjacent[i]);
      if (!gammas_ok(e0, chosen)) continue;
      LinearInequality li = flower_template(h, e0, chosen, CutTag::eflower);
      const double viol = li.violation_at(point.values);
      if (viol > tol) found.push_back({std::move(li), viol});
    }
  }
  return sort_and_dedupe(std::move(found));
}

bool validity_check(const Hypergraph& h, const LinearInequality& ineq) {
  if (h.n > 20) throw limit_error("validity check guarded at n <= 20");
  for (std::uint32_t x = 0; x < (1u << h.n); ++x) {
    double lhs = 0.0;
    for (const auto& [var, c] : ineq.coeffs) {
      double val = 1.0;
      for (int v : var.key)
        if (!(x >> (v - 1) & 1)) {
          val = 0.0;
          break;
        }
      lhs += c * val;
    }
    if (lhs > ineq.rhs + 1e-9) return false;
  }
  return true;
}

}  // namespace multiflower
