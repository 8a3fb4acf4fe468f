#include "multiflower/hypergraph.hpp"

#include <algorithm>

namespace multiflower {

Hypergraph::Hypergraph(int n_, std::vector<VertexSet> edges_) : n(n_) {
  if (n < 1) throw input_error("hypergraph needs at least one vertex");
  for (auto& e : edges_) {
    e = canonical_set(std::move(e));
    if (e.size() < 2) throw input_error("edge " + set_to_string(e) + " has cardinality < 2");
    if (e.front() < 1 || e.back() > n)
      throw input_error("edge " + set_to_string(e) + " has a vertex outside 1.." +
                        std::to_string(n));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw input_error("duplicate edge in hypergraph");
  edges = std::move(edges_);
}

int Hypergraph::rank() const {
  std::size_t r = 0;
  for (const auto& e : edges) r = std::max(r, e.size());
  return static_cast<int>(r);
}

bool Hypergraph::has_edge(const VertexSet& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<VertexSet> Hypergraph::adjacent_edges(const VertexSet& e0) const {
  if (!has_edge(e0)) throw input_error("edge " + set_to_string(e0) + " is not in the hypergraph");
  std::vector<VertexSet> out;
  for (const auto& e : edges) {
    if (e == e0) continue;
    if (!set_intersection(e, e0).empty()) out.push_back(e);
  }
  return out;  // edges already lexicographic
}

VarRef var_for(const Hypergraph& h, const VertexSet& s) {
  if (s.size() == 1) return VarRef::vertex(s[0]);
  if (h.has_edge(s)) return VarRef::edge(s);
  return VarRef::artificial(s);
}

}  // namespace multiflower
