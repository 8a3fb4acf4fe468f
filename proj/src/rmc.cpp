#include "multiflower/rmc.hpp"

#include <algorithm>
#include <set>

namespace multiflower {

void PartitionMap::add(VertexSet l, VertexSet j, VertexSet k) {
  l = canonical_set(std::move(l));
  j = canonical_set(std::move(j));
  k = canonical_set(std::move(k));
  if (l.size() < 2) throw input_error("cannot partition a set of size < 2");
  if (j.empty() || k.empty()) throw input_error("partition parts must be nonempty");
  if (!set_intersection(j, k).empty())
    throw input_error("partition parts of " + set_to_string(l) + " overlap");
  if (set_union(j, k) != l)
    throw input_error("partition parts do not union to " + set_to_string(l));
  if (j[0] != l[0]) std::swap(j, k);  // canonical: min(L) in J
  auto pair = std::make_pair(std::move(j), std::move(k));
  auto [it, inserted] = entries.emplace(std::move(l), pair);
  if (!inserted && it->second != pair)
    throw input_error("conflicting partition for " + set_to_string(it->first));
}

const std::pair<VertexSet, VertexSet>& PartitionMap::at(const VertexSet& l) const {
  auto it = entries.find(l);
  if (it == entries.end())
    throw input_error("partition map has no entry for " + set_to_string(l));
  return it->second;
}

std::string PartitionMap::to_string() const {
  std::string out;
  for (const auto& [l, jk] : entries) {
    out += set_to_string(l) + "->" + set_to_string(jk.first) + "|" +
           set_to_string(jk.second) + " ";
  }
  return out;
}

const std::vector<VertexSet>& RecursiveMcCormick::sequence(const VertexSet& e) const {
  auto it = sequences.find(e);
  if (it == sequences.end()) throw input_error(set_to_string(e) + " is not an edge");
  return it->second;
}

bool RecursiveMcCormick::is_artificial(const VertexSet& s) const {
  return std::binary_search(artificial.begin(), artificial.end(), s);
}

bool RecursiveMcCormick::in_sequence(const VertexSet& e, const VertexSet& s) const {
  const auto& seq = sequence(e);
  return std::binary_search(seq.begin(), seq.end(), s);
}

namespace {

using PartitionSource = std::function<std::pair<VertexSet, VertexSet>(const VertexSet&)>;

std::pair<VertexSet, VertexSet> split_leftmost(const VertexSet& l) {
  return {{l.front()}, VertexSet(l.begin() + 1, l.end())};
}

std::pair<VertexSet, VertexSet> split_balanced(const VertexSet& l) {
  const auto mid = l.begin() + static_cast<long>((l.size() + 1) / 2);
  return {VertexSet(l.begin(), mid), VertexSet(mid, l.end())};
}

// The recursive decomposition: every edge seeds a sequence; a member is
// expanded within a sequence iff it is the edge itself or artificial.
RecursiveMcCormick build_with(const Hypergraph& h, const PartitionSource& source) {
  RecursiveMcCormick r;
  r.base = h;
  std::set<VertexSet> artificial;
  for (const auto& e : h.edges) {
    std::set<VertexSet> seq;
    seq.insert(e);
    std::vector<VertexSet> todo = {e};
    while (!todo.empty()) {
      VertexSet l = std::move(todo.back());
      todo.pop_back();
      if (!r.partition.has(l)) {
        auto [j, k] = source(l);
        r.partition.add(l, std::move(j), std::move(k));
      }
      const auto& [j, k] = r.partition.at(l);
      for (const auto* part : {&j, &k}) {
        if (part->size() < 2) continue;
        if (!seq.insert(*part).second) continue;
        if (!h.has_edge(*part)) {
          artificial.insert(*part);
          todo.push_back(*part);
        }
      }
    }
    r.sequences[e] = std::vector<VertexSet>(seq.begin(), seq.end());
  }
  r.artificial.assign(artificial.begin(), artificial.end());
  return r;
}

}  // namespace

RecursiveMcCormick build_rmc(const Hypergraph& h, RmcStrategy strategy) {
  return build_with(h, strategy == RmcStrategy::leftmost ? split_leftmost : split_balanced);
}

RecursiveMcCormick build_rmc(const Hypergraph& h, const PartitionMap& map) {
  return build_with(h, [&map](const VertexSet& l) { return map.at(l); });
}

std::vector<LinearInequality> rmc_constraints(const RecursiveMcCormick& r,
                                              bool include_vertex_bounds) {
  const Hypergraph& h = r.base;
  std::vector<LinearInequality> out;
  for (const auto& [l, jk] : r.partition.entries) {
    const VarRef zl = var_for(h, l);
    const VarRef zj = var_for(h, jk.first);
    const VarRef zk = var_for(h, jk.second);
    out.push_back(LinearInequality(CutTag::rmc).add(zl, -1.0).set_rhs(0.0));
    out.push_back(LinearInequality(CutTag::rmc).add(zj, 1.0).add(zk, 1.0).add(zl, -1.0).set_rhs(1.0));
    out.push_back(LinearInequality(CutTag::rmc).add(zl, 1.0).add(zj, -1.0).set_rhs(0.0));
    out.push_back(LinearInequality(CutTag::rmc).add(zl, 1.0).add(zk, -1.0).set_rhs(0.0));
  }
  if (include_vertex_bounds) {
    for (int v = 1; v <= h.n; ++v) {
      out.push_back(LinearInequality(CutTag::rmc).add(VarRef::vertex(v), 1.0).set_rhs(1.0));
      out.push_back(LinearInequality(CutTag::rmc).add(VarRef::vertex(v), -1.0).set_rhs(0.0));
    }
  }
  return out;
}

bool is_non_overlapping(const RecursiveMcCormick& r) {
  const auto& edges = r.base.edges;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    const auto& sa = r.sequence(edges[a]);
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const auto& sb = r.sequence(edges[b]);
      std::vector<VertexSet> common;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::back_inserter(common));
      if (!common.empty()) return false;
    }
  }
  return true;
}

int edge_level(const RecursiveMcCormick& r, const VertexSet& ebar) {
  if (!r.is_artificial(ebar))
    throw input_error(set_to_string(ebar) + " is not an artificial edge");
  int level = 0;
  for (const auto& e : r.base.edges) {
    if (!r.in_sequence(e, ebar)) continue;
    int count = 0;
    for (const auto& s : r.sequence(e))
      if (r.is_artificial(s) && is_subset(s, ebar)) ++count;
    level = std::max(level, count);
  }
  return level;
}

int rmc_level(const RecursiveMcCormick& r) {
  int level = 0;
  for (const auto& ebar : r.artificial) level = std::max(level, edge_level(r, ebar));
  return level;
}

namespace {

// Witness pool for an artificial member p of R_e: all other edges whose
// recursive sequence also contains p.
std::vector<VertexSet> witness_pool(const RecursiveMcCormick& r, const VertexSet& e,
                                    const VertexSet& p) {
  std::vector<VertexSet> pool;
  for (const auto& other : r.base.edges)
    if (other != e && r.in_sequence(other, p)) pool.push_back(other);
  return pool;
}

}  // namespace

std::vector<FlowerPartition> enumerate_flower_partitions(const RecursiveMcCormick& r,
                                                         const VertexSet& e) {
  if (e.size() > 8)
    throw limit_error("flower-partition enumeration refused for rank > 8");
  const Hypergraph& h = r.base;

  // Non-singleton parts available to partitions of e.
  std::vector<VertexSet> candidates;
  std::map<VertexSet, std::vector<VertexSet>> pools;
  for (const auto& s : r.sequence(e)) {
    if (s == e || s.size() < 2) continue;
    if (h.has_edge(s)) {
      candidates.push_back(s);
    } else {
      auto pool = witness_pool(r, e, s);
      if (!pool.empty()) {
        candidates.push_back(s);
        pools[s] = std::move(pool);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<FlowerPartition> out;
  std::vector<VertexSet> parts;
  auto grow = [&](auto&& self, const VertexSet& remaining) -> void {
    if (remaining.empty()) {
      FlowerPartition fp;
      fp.edge = e;
      fp.parts = parts;
      for (const auto& p : fp.parts)
        if (p.size() >= 2 && !h.has_edge(p)) fp.artificial_parts.push_back(p);
      // One output per witness assignment, odometer over the sorted pools.
      std::vector<std::size_t> idx(fp.artificial_parts.size(), 0);
      while (true) {
        FlowerPartition variant = fp;
        for (std::size_t i = 0; i < idx.size(); ++i)
          variant.witnesses.push_back(
              {fp.artificial_parts[i], pools.at(fp.artificial_parts[i])[idx[i]]});
        out.push_back(std::move(variant));
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
          if (++idx[i] < pools.at(fp.artificial_parts[i]).size()) break;
          idx[i] = 0;
        }
        if (i == idx.size()) break;
      }
      return;
    }
    const int v = remaining.front();
    parts.push_back({v});
    self(self, set_difference(remaining, {v}));
    parts.pop_back();
    for (const auto& c : candidates) {
      if (!set_contains(c, v)) continue;
      if (!is_subset(c, remaining)) continue;
      parts.push_back(c);
      self(self, set_difference(remaining, c));
      parts.pop_back();
    }
  };
  grow(grow, e);
  return out;
}

std::vector<LinearInequality> rmc_projection_system(const RecursiveMcCormick& r) {
  const Hypergraph& h = r.base;
  std::vector<LinearInequality> out;
  std::set<std::string> seen;
  auto push = [&](LinearInequality li) {
    if (!seen.insert(li.canonical_key()).second) return;
    out.push_back(std::move(li));
  };

  auto with_meta = [](LinearInequality li, VertexSet center, int proj_class) {
    CutMeta meta;
    meta.center = std::move(center);
    meta.proj_class = proj_class;
    li.meta = std::move(meta);
    return li;
  };

  for (int v = 1; v <= h.n; ++v)
    push(with_meta(LinearInequality(CutTag::projection).add(VarRef::vertex(v), 1.0).set_rhs(1.0),
                   {v}, 0));
  for (const auto& e : h.edges)
    push(with_meta(LinearInequality(CutTag::projection).add(VarRef::edge(e), -1.0).set_rhs(0.0),
                   e, 0));

  for (const auto& e : h.edges) {
    const VarRef ze = VarRef::edge(e);
    for (int v : e)
      push(with_meta(
          LinearInequality(CutTag::projection).add(ze, 1.0).add(VarRef::vertex(v), -1.0).set_rhs(0.0),
          e, 1));
    for (const auto& s : r.sequence(e)) {
      if (s == e || s.size() < 2 || !h.has_edge(s)) continue;
      push(with_meta(
          LinearInequality(CutTag::projection).add(ze, 1.0).add(VarRef::edge(s), -1.0).set_rhs(0.0),
          e, 1));
    }
  }

  for (const auto& e : h.edges) {
    const VarRef ze = VarRef::edge(e);
    for (const auto& fp : enumerate_flower_partitions(r, e)) {
      LinearInequality li(CutTag::projection);
      for (const auto& p : fp.parts) {
        if (p.size() >= 2 && !h.has_edge(p)) continue;  // replaced by witness
        li.add(var_for(h, p), 1.0);
      }
      for (const auto& [p, w] : fp.witnesses) li.add(VarRef::edge(w), 1.0);
      li.add(ze, -1.0);
      li.set_rhs(static_cast<double>(fp.parts.size()) - 1.0);
      CutMeta meta;
      meta.center = e;
      meta.neighbors = fp.parts;
      meta.witnesses = fp.witnesses;
      meta.proj_class = 2;
      li.meta = std::move(meta);
      push(std::move(li));
    }
  }
  return out;
}

namespace {

// All unordered partitions {J, K} of l, canonical order: J always contains
// l's minimum, K runs over nonempty subsets of the remainder in ascending
// bitmask order.
std::vector<std::pair<VertexSet, VertexSet>> all_splits(const VertexSet& l) {
  const int k = static_cast<int>(l.size()) - 1;
  std::vector<std::pair<VertexSet, VertexSet>> out;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    VertexSet j = {l[0]}, rest;
    for (int i = 0; i < k; ++i)
      (mask >> i & 1 ? rest : j).push_back(l[i + 1]);
    out.emplace_back(std::move(j), std::move(rest));
  }
  return out;
}

}  // namespace

long enumerate_partition_maps(const Hypergraph& h,
                              const std::function<bool(const PartitionMap&)>& visit,
                              long max_maps) {
  PartitionMap map;
  std::set<VertexSet> pending(h.edges.begin(), h.edges.end());
  long count = 0;
  bool stopped = false;

  auto rec = [&](auto&& self) -> void {
    if (stopped) return;
    if (pending.empty()) {
      if (++count > max_maps)
        throw limit_error("partition-map enumeration exceeds " + std::to_string(max_maps));
      if (!visit(map)) stopped = true;
      return;
    }
    const VertexSet l = *pending.begin();
    pending.erase(pending.begin());
    for (auto& [j, k] : all_splits(l)) {
      std::vector<VertexSet> added;
      for (const auto* part : {&j, &k}) {
        if (part->size() < 2 || map.entries.count(*part) || pending.count(*part)) continue;
        pending.insert(*part);
        added.push_back(*part);
      }
      map.entries[l] = {j, k};
      self(self);
      map.entries.erase(l);
      for (const auto& a : added) pending.erase(a);
      if (stopped) break;
    }
    pending.insert(l);
  };
  rec(rec);
  return count;
}

MinSizeResult min_size_rmc(const Hypergraph& h, long node_budget) {
  PartitionMap map;
  std::set<VertexSet> pending(h.edges.begin(), h.edges.end());
  std::set<VertexSet> artificial;

  bool have_best = false;
  std::size_t best_count = 0;
  std::vector<VertexSet> best_artificial;
  std::string best_serial;
  PartitionMap best_map;
  long nodes = 0;
  bool exhausted = false;

  auto record = [&]() {
    std::vector<VertexSet> art(artificial.begin(), artificial.end());
    std::string serial = map.to_string();
    if (!have_best || art.size() < best_count ||
        (art.size() == best_count &&
         (art < best_artificial || (art == best_artificial && serial < best_serial)))) {
      have_best = true;
      best_count = art.size();
      best_artificial = std::move(art);
      best_serial = std::move(serial);
      best_map = map;
    }
  };

  auto rec = [&](auto&& self) -> void {
    if (++nodes > node_budget) {
      exhausted = true;
      return;
    }
    if (have_best && artificial.size() > best_count) return;  // cannot improve
    if (pending.empty()) {
      record();
      return;
    }
    const VertexSet l = *pending.begin();
    pending.erase(pending.begin());
    for (auto& [j, k] : all_splits(l)) {
      std::vector<VertexSet> added_pending, added_artificial;
      for (const auto* part : {&j, &k}) {
        if (part->size() < 2) continue;
        if (!h.has_edge(*part) && artificial.insert(*part).second)
          added_artificial.push_back(*part);
        if (!map.entries.count(*part) && !pending.count(*part)) {
          pending.insert(*part);
          added_pending.push_back(*part);
        }
      }
      map.entries[l] = {j, k};
      self(self);
      map.entries.erase(l);
      for (const auto& a : added_pending) pending.erase(a);
      for (const auto& a : added_artificial) artificial.erase(a);
      if (exhausted) break;
    }
    pending.insert(l);
  };
  rec(rec);

  if (!have_best) throw limit_error("min-size search budget too small to finish one map");
  MinSizeResult result;
  result.rmc = build_rmc(h, best_map);
  result.optimal = !exhausted;
  result.nodes = nodes;
  return result;
}

}  // namespace multiflower
