#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multiflower/instance.hpp"
#include "test_util.hpp"

using namespace multiflower;
using mftest::load_instance_fixture;

TEST_CASE("hypergraph canonicalization and invariants") {
  Hypergraph h(4, {{3, 1, 2}, {2, 3, 4}});
  CHECK(h.edges[0] == VertexSet{1, 2, 3});
  CHECK(h.edges[1] == VertexSet{2, 3, 4});
  CHECK(h.rank() == 3);
  CHECK_THROWS_AS(Hypergraph(2, {{1, 2}, {2, 1}}), input_error);  // duplicate as sets
  CHECK_THROWS_AS(Hypergraph(2, {{1}}), input_error);
  CHECK_THROWS_AS(Hypergraph(2, {{1, 5}}), input_error);
  CHECK(Hypergraph(3, {}).rank() == 0);
}

TEST_CASE("varref identity is the canonical vertex set") {
  CHECK(VarRef::edge({3, 4}) == VarRef::artificial({4, 3}));
  CHECK(VarRef::vertex(2) < VarRef::edge({2, 3}));
  Hypergraph h(4, {{1, 2, 3}});
  CHECK(var_for(h, {1, 2, 3}).kind == VarKind::edge);
  CHECK(var_for(h, {2, 3}).kind == VarKind::artificial);
  CHECK(var_for(h, {2}).kind == VarKind::vertex);
}

TEST_CASE("adjacent_edges") {
  auto ex5 = to_hypergraph(load_instance_fixture("ex5.json")).graph;
  const VertexSet e0 = {1, 2, 3, 4};
  const auto adj = ex5.adjacent_edges(e0);
  REQUIRE(adj.size() == 4);
  CHECK(adj[0] == VertexSet{1, 2, 5});
  CHECK(adj[1] == VertexSet{1, 4, 8});
  CHECK(adj[2] == VertexSet{2, 3, 6});
  CHECK(adj[3] == VertexSet{3, 4, 7});

  Hypergraph single(3, {{1, 2, 3}});
  CHECK(single.adjacent_edges({1, 2, 3}).empty());
  CHECK_THROWS_AS(single.adjacent_edges({1, 2}), input_error);

  auto ex1 = to_hypergraph(load_instance_fixture("ex1.json")).graph;
  const auto adj1 = ex1.adjacent_edges({1, 2, 3});
  REQUIRE(adj1.size() == 2);
  CHECK(adj1[0] == VertexSet{1, 3, 4});
  CHECK(adj1[1] == VertexSet{2, 3, 4});

  // Symmetry of adjacency on a generated instance.
  auto h = to_hypergraph(generate_random(7, 5, 4, 11)).graph;
  for (const auto& a : h.edges)
    for (const auto& b : h.adjacent_edges(a)) {
      const auto back = h.adjacent_edges(b);
      CHECK(std::find(back.begin(), back.end(), a) != back.end());
    }
}

TEST_CASE("parse canonicalizes and validates") {
  auto inst = load_instance_fixture("ex1.json");
  CHECK(inst.n == 4);
  REQUIRE(inst.objective.size() == 3);
  CHECK(inst.objective[0].vars == VertexSet{1, 2, 3});
  CHECK(inst.objective[0].coef == -1.0);

  auto merged = parse_instance(R"({"n":2,"objective":[
      {"vars":[1,2],"coef":1},{"vars":[2,1],"coef":2}]})");
  REQUIRE(merged.objective.size() == 1);
  CHECK(merged.objective[0].coef == 3.0);

  CHECK_THROWS_WITH_AS(parse_instance(R"({"n":4,"objective":[{"vars":[1,2,9],"coef":1}]})"),
                       "vertex out of range", input_error);
  CHECK_THROWS_AS(parse_instance(R"({"n":2,"objective":[{"vars":[],"coef":1}]})"), input_error);
  CHECK_THROWS_AS(parse_instance("not json"), input_error);

  // Zero coefficients vanish after merging.
  auto cancel = parse_instance(R"({"n":2,"objective":[
      {"vars":[1,2],"coef":1},{"vars":[1,2],"coef":-1},{"vars":[1],"coef":1},{"vars":[2],"coef":1}]})");
  CHECK(cancel.objective.size() == 2);
}

TEST_CASE("uncovered vertices renumber with a warning") {
  std::vector<std::string> warnings;
  auto inst = parse_instance(R"({"n":5,"objective":[{"vars":[2,4],"coef":1}]})", &warnings);
  CHECK(inst.n == 2);
  CHECK(inst.objective[0].vars == VertexSet{1, 2});
  CHECK(warnings.size() == 1);

  ParseOptions strict;
  strict.require_cover = true;
  CHECK_THROWS_AS(parse_instance(R"({"n":5,"objective":[{"vars":[2,4],"coef":1}]})", nullptr, strict),
                  input_error);
}

TEST_CASE("render/parse round trip") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}) {
    auto inst = generate_random(6, 4, 3, seed);
    CHECK(parse_instance(render_instance(inst)) == inst);
    CHECK(render_instance(parse_instance(render_instance(inst))) == render_instance(inst));
  }
  // Constraints survive the round trip too.
  auto inst = parse_instance(R"({"n":3,"objective":[{"vars":[1,2,3],"coef":2}],
      "constraints":[{"terms":[{"vars":[1],"coef":1},{"vars":[2,3],"coef":-1}],"rhs":0.5}]})");
  CHECK(parse_instance(render_instance(inst)) == inst);
}

TEST_CASE("to_hypergraph lifts terms") {
  auto lifted = to_hypergraph(load_instance_fixture("ex1.json"));
  CHECK(lifted.graph.n == 4);
  REQUIRE(lifted.graph.edges.size() == 3);
  CHECK(lifted.objective.at(VarRef::edge({1, 2, 3})) == -1.0);
  CHECK(lifted.objective.at(VarRef::edge({2, 3, 4})) == 1.0);
  CHECK(lifted.objective.at(VarRef::edge({1, 3, 4})) == 1.0);

  // Objective and constraint sharing a term produce a single edge.
  auto shared = parse_instance(R"({"n":3,"objective":[{"vars":[1,2,3],"coef":1}],
      "constraints":[{"terms":[{"vars":[1,2,3],"coef":1}],"rhs":1}]})");
  auto lifted2 = to_hypergraph(shared);
  CHECK(lifted2.graph.edges.size() == 1);
  CHECK(lifted2.constraints.size() == 1);
  CHECK(lifted2.constraints[0].coeffs.at(VarRef::edge({1, 2, 3})) == 1.0);

  // Purely linear instance: no edges.
  auto linear = parse_instance(R"({"n":2,"objective":[{"vars":[1],"coef":1},{"vars":[2],"coef":1}]})");
  CHECK(to_hypergraph(linear).graph.edges.empty());

  // Never more edges than distinct terms.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto inst = generate_random(8, 6, 4, seed);
    CHECK(to_hypergraph(inst).graph.edges.size() <= inst.objective.size());
  }
}

TEST_CASE("generate_random determinism and feasibility checks") {
  auto a = generate_random(4, 3, 3, 7);
  auto b = generate_random(4, 3, 3, 7);
  CHECK(render_instance(a) == render_instance(b));

  CHECK_THROWS_WITH_AS(generate_random(2, 5, 2, 1), "infeasible parameters", input_error);

  auto inst = generate_random(6, 5, 3, 1);
  auto h = to_hypergraph(inst).graph;
  CHECK(h.edges.size() == 5);
  CHECK(h.rank() <= 3);
  for (const auto& t : inst.objective) {
    CHECK(t.coef != 0.0);
    CHECK(std::fabs(t.coef) <= 10.0);
  }
  VertexSet covered;
  for (const auto& e : h.edges) covered = set_union(covered, e);
  CHECK(static_cast<int>(covered.size()) == 6);
}
