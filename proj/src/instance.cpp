#include "multiflower/instance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace multiflower {

namespace {

using nlohmann::json;

// Sort terms by vertex set, merge duplicates, drop zeros.
std::vector<Term> canonicalize_terms(std::vector<Term> terms, int n) {
  std::map<VertexSet, double> merged;
  for (auto& t : terms) {
    t.vars = canonical_set(std::move(t.vars));
    if (t.vars.empty()) throw input_error("empty term");
    if (t.vars.front() < 1 || t.vars.back() > n) throw input_error("vertex out of range");
    merged[t.vars] += t.coef;
  }
  std::vector<Term> out;
  for (auto& [vars, coef] : merged)
    if (coef != 0.0) out.push_back({vars, coef});
  return out;
}

std::vector<Term> parse_terms(const json& arr) {
  if (!arr.is_array()) throw input_error("expected an array of terms");
  std::vector<Term> terms;
  for (const auto& t : arr) {
    if (!t.is_object() || !t.contains("vars") || !t.contains("coef"))
      throw input_error("term must have \"vars\" and \"coef\"");
    Term term;
    for (const auto& v : t.at("vars")) {
      if (!v.is_number_integer()) throw input_error("vertex ids must be integers");
      term.vars.push_back(v.get<int>());
    }
    term.coef = t.at("coef").get<double>();
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace

PolynomialInstance parse_instance(std::string_view text, std::vector<std::string>* warnings,
                                  const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("objective"))
    throw input_error("instance must be an object with \"n\" and \"objective\"");

  PolynomialInstance inst;
  try {
    inst.n = doc.at("n").get<int>();
    if (inst.n < 1) throw input_error("n must be positive");
    inst.objective = canonicalize_terms(parse_terms(doc.at("objective")), inst.n);
    if (doc.contains("constraints")) {
      if (!doc.at("constraints").is_array())
        throw input_error("\"constraints\" must be an array");
      for (const auto& c : doc.at("constraints")) {
        if (!c.is_object() || !c.contains("terms") || !c.contains("rhs"))
          throw input_error("constraint must have \"terms\" and \"rhs\"");
        PolyConstraint row;
        row.terms = canonicalize_terms(parse_terms(c.at("terms")), inst.n);
        row.rhs = c.at("rhs").get<double>();
        inst.constraints.push_back(std::move(row));
      }
    }
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed instance: ") + e.what());
  }

  // Standing assumption: every vertex appears in at least one term. Repair by
  // renumbering densely; the relabeling is monotone so canonical order holds.
  std::set<int> used;
  for (const auto& t : inst.objective) used.insert(t.vars.begin(), t.vars.end());
  for (const auto& c : inst.constraints)
    for (const auto& t : c.terms) used.insert(t.vars.begin(), t.vars.end());
  if (static_cast<int>(used.size()) < inst.n) {
    if (options.require_cover)
      throw input_error("some vertex appears in no term");
    if (warnings)
      warnings->push_back("instance uses " + std::to_string(used.size()) + " of " +
                          std::to_string(inst.n) + " vertices; renumbering");
    std::map<int, int> remap;
    int next = 1;
    for (int v : used) remap[v] = next++;
    auto relabel = [&](std::vector<Term>& terms) {
      for (auto& t : terms)
        for (auto& v : t.vars) v = remap.at(v);
    };
    relabel(inst.objective);
    for (auto& c : inst.constraints) relabel(c.terms);
    inst.n = next - 1;
  }
  if (inst.n < 1) throw input_error("instance has no variables");
  return inst;
}

std::string render_instance(const PolynomialInstance& inst) {
  json doc;
  doc["n"] = inst.n;
  auto render_terms = [](const std::vector<Term>& terms) {
    json arr = json::array();
    for (const auto& t : terms) arr.push_back({{"vars", t.vars}, {"coef", t.coef}});
    return arr;
  };
  doc["objective"] = render_terms(inst.objective);
  if (!inst.constraints.empty()) {
    json arr = json::array();
    for (const auto& c : inst.constraints)
      arr.push_back({{"terms", render_terms(c.terms)}, {"rhs", c.rhs}});
    doc["constraints"] = arr;
  }
  return doc.dump(2) + "\n";
}

LiftedInstance to_hypergraph(const PolynomialInstance& inst) {
  std::set<VertexSet> edge_set;
  auto collect = [&](const std::vector<Term>& terms) {
    for (const auto& t : terms)
      if (t.vars.size() >= 2) edge_set.insert(t.vars);
  };
  collect(inst.objective);
  for (const auto& c : inst.constraints) collect(c.terms);

  LiftedInstance lifted;
  lifted.graph =
      Hypergraph(inst.n, std::vector<VertexSet>(edge_set.begin(), edge_set.end()));
  for (const auto& t : inst.objective) lifted.objective[var_for(lifted.graph, t.vars)] += t.coef;
  for (const auto& c : inst.constraints) {
    LinearInequality row(CutTag::instance);
    for (const auto& t : c.terms) row.add(var_for(lifted.graph, t.vars), t.coef);
    row.set_rhs(c.rhs);
    lifted.constraints.push_back(std::move(row));
  }
  return lifted;
}

PolynomialInstance generate_random(int n, int edge_count, int rank, std::uint64_t seed) {
  if (n < 2 || edge_count < 1 || rank < 2) throw input_error("infeasible parameters");
  const int max_card = std::min(rank, n);
  // Count available distinct edges, saturating well above any sane edge_count.
  double available = 0;
  for (int k = 2; k <= max_card && available < 1e9; ++k) {
    double c = 1;
    for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    available += c;
  }
  if (available < edge_count) throw input_error("infeasible parameters");
  if (static_cast<long>(edge_count) * max_card < n)
    throw input_error("infeasible parameters: cannot cover every vertex");

  Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::set<VertexSet> edges;
    int duplicates = 0;
    while (static_cast<int>(edges.size()) < edge_count) {
      const int card = rng.uniform_int(2, max_card);
      VertexSet e = rng.sample_vertices(n, card);
      if (!edges.insert(e).second && ++duplicates > 100000)
        throw input_error("infeasible parameters");
    }
    VertexSet covered;
    for (const auto& e : edges) covered = set_union(covered, e);
    if (static_cast<int>(covered.size()) != n) continue;  // resample until covered

    PolynomialInstance inst;
    inst.n = n;
    for (const auto& e : edges) {
      int c = rng.uniform_int(1, 20);
      if (c > 10) c = 10 - c;  // maps 11..20 to -1..-10
      inst.objective.push_back({e, static_cast<double>(c)});
    }
    return inst;
  }
  throw input_error("could not cover every vertex within the retry budget");
}

}  // namespace multiflower
