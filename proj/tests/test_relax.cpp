#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "multiflower/relax.hpp"
#include "test_util.hpp"

using namespace multiflower;
using mftest::load_instance_fixture;
using mftest::load_map_fixture;

TEST_CASE("relaxation bounds reproduce the published example") {
  auto inst = load_instance_fixture("ex1.json");
  CHECK(relaxation_bound(inst, MethodSpec::std_lin()).bound ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-9));
  CHECK(relaxation_bound(inst, MethodSpec::flower()).bound == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(relaxation_bound(inst, MethodSpec::eflower()).bound == doctest::Approx(1.0).epsilon(1e-9));

  auto r1 = MethodSpec::rmc_explicit(load_map_fixture("ex1_r1.json"), "rmc:r1");
  auto r2 = MethodSpec::rmc_explicit(load_map_fixture("ex1_r2.json"), "rmc:r2");
  CHECK(relaxation_bound(inst, r1).bound == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
  CHECK(relaxation_bound(inst, r2).bound == doctest::Approx(1.0).epsilon(1e-9));

  auto minsize = relaxation_bound(inst, MethodSpec::rmc_minsize());
  CHECK(minsize.bound <= 4.0 / 3.0 + 1e-9);
}

TEST_CASE("cutting plane loop closes the gap on the published example") {
  auto lifted = to_hypergraph(load_instance_fixture("ex1.json"));
  const Hypergraph& h = lifted.graph;
  auto loop = cutting_plane_loop(
      build_std_model(lifted),
      [&](const FractionalPoint& p) { return separate_extended_flower(h, p, 1e-7); }, 1e-7, 100);
  CHECK(loop.bound == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(loop.cuts_added >= 1);
  CHECK(loop.rounds >= 1);
  CHECK_FALSE(loop.hit_round_limit);
}

TEST_CASE("cut-free base stays at zero rounds") {
  Hypergraph h(2, {{1, 2}});
  LiftedInstance lifted;
  lifted.graph = h;
  lifted.objective[VarRef::edge({1, 2})] = 1.0;
  auto loop = cutting_plane_loop(
      build_std_model(lifted),
      [&](const FractionalPoint& p) { return separate_extended_flower(h, p, 1e-7); }, 1e-7, 100);
  CHECK(loop.rounds == 0);
  CHECK(loop.cuts_added == 0);
  CHECK(loop.bound == doctest::Approx(1.0));
}

TEST_CASE("loop bound equals the enumerated extended-flower bound") {
  // Also exercises the per-round monotonicity check inside the loop on a
  // hundred random instances.
  int compared = 0;
  for (std::uint64_t seed = 0; compared < 100; ++seed) {
    PolynomialInstance inst;
    try {
      inst = generate_random(3 + static_cast<int>(seed % 5), 2 + seed % 4, 4, 300 + seed);
    } catch (const input_error&) {
      continue;
    }
    auto lifted = to_hypergraph(inst);
    const Hypergraph& h = lifted.graph;

    LpModel enumerated = build_std_model(lifted);
    for (const auto& c : enumerate_extended_flower(h)) enumerated.add_row(c);
    auto direct = solve(enumerated);
    REQUIRE(direct.status == LpStatus::optimal);

    auto loop = cutting_plane_loop(
        build_std_model(lifted),
        [&](const FractionalPoint& p) { return separate_extended_flower(h, p, 1e-7); }, 1e-7,
        100);
    CHECK(loop.bound == doctest::Approx(direct.value).epsilon(1e-6));
    ++compared;
  }
}

TEST_CASE("round limit returns the current bound with a flag") {
  // Synthetic separator: up to five successively deeper bounds on x1.
  LpModel model;
  model.add_var(VarRef::vertex(1));
  model.set_objective({{VarRef::vertex(1), 1.0}});
  int calls = 0;
  auto separator = [&calls](const FractionalPoint& p) {
    std::vector<SeparatedCut> cuts;
    if (calls >= 5) return cuts;
    ++calls;
    LinearInequality cut(CutTag::instance);
    cut.add(VarRef::vertex(1), 1.0).set_rhs(1.0 - 0.1 * calls);
    const double violation = cut.violation_at(p.values);
    if (violation > 0) cuts.push_back({std::move(cut), violation});
    return cuts;
  };

  calls = 0;
  auto limited = cutting_plane_loop(model, separator, 1e-7, 2);
  CHECK(limited.hit_round_limit);
  CHECK(limited.rounds == 2);
  CHECK(limited.bound == doctest::Approx(0.8));

  calls = 0;
  auto finished = cutting_plane_loop(model, separator, 1e-7, 100);
  CHECK_FALSE(finished.hit_round_limit);
  CHECK(finished.rounds == 5);
  CHECK(finished.cuts_added == 5);
  CHECK(finished.bound == doctest::Approx(0.5));
}

TEST_CASE("forcing the cutting-plane path matches one-shot enumeration") {
  RelaxOptions loop_path;
  loop_path.enum_threshold = 0;  // estimate never below zero: always the loop
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PolynomialInstance inst;
    try {
      inst = generate_random(5, 3, 4, 4200 + seed);
    } catch (const input_error&) {
      continue;
    }
    auto one_shot = relaxation_bound(inst, MethodSpec::eflower());
    auto looped = relaxation_bound(inst, MethodSpec::eflower(), loop_path);
    CHECK(one_shot.bound == doctest::Approx(looped.bound).epsilon(1e-6));
    CHECK(one_shot.rounds == 0);
  }
}

TEST_CASE("non-overlapping RMCs match the standard linearization") {
  auto lifted = to_hypergraph(load_instance_fixture("ex1.json"));
  const auto std_bound = solve(build_std_model(lifted)).value;

  Rng rng(55);
  std::vector<std::map<VarRef, double>> objectives;
  for (int i = 0; i < 20; ++i) objectives.push_back(mftest::random_objective(lifted.graph, rng));

  int overlapping_seen = 0, non_overlapping_seen = 0;
  enumerate_partition_maps(lifted.graph, [&](const PartitionMap& map) {
    auto rmc = build_rmc(lifted.graph, map);
    LpModel model = build_rmc_model(lifted, rmc);
    if (is_non_overlapping(rmc)) {
      ++non_overlapping_seen;
      for (const auto& obj : objectives) {
        model.set_objective(obj);
        LpModel std_model = build_std_model(lifted);
        std_model.set_objective(obj);
        CHECK(solve(model).value == doctest::Approx(solve(std_model).value).epsilon(1e-6));
      }
    } else {
      ++overlapping_seen;
    }
    return true;
  });
  CHECK(non_overlapping_seen == 18);
  CHECK(overlapping_seen == 9);
  CHECK(std_bound == doctest::Approx(4.0 / 3.0));
}

namespace {

// Prop. 2 reverse direction, empirical form: some objective among the sample
// strictly separates each overlapping RMC from the standard linearization.
void check_overlapping_rmcs_separate(const LiftedInstance& lifted, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::map<VarRef, double>> objectives;
  for (int i = 0; i < 50; ++i) objectives.push_back(mftest::random_objective(lifted.graph, rng));

  int overlapping = 0;
  enumerate_partition_maps(lifted.graph, [&](const PartitionMap& map) {
    auto rmc = build_rmc(lifted.graph, map);
    if (is_non_overlapping(rmc)) return true;
    ++overlapping;
    bool separated = false;
    for (const auto& obj : objectives) {
      LpModel rmc_model = build_rmc_model(lifted, rmc);
      rmc_model.set_objective(obj);
      LpModel std_model = build_std_model(lifted);
      std_model.set_objective(obj);
      if (solve(rmc_model).value < solve(std_model).value - 1e-6) {
        separated = true;
        break;
      }
    }
    CHECK(separated);
    return true;
  });
  CHECK(overlapping > 0);
}

}  // namespace

TEST_CASE("every overlapping RMC loses to std on some sampled objective") {
  check_overlapping_rmcs_separate(to_hypergraph(load_instance_fixture("ex1.json")), 4);

  // Generated instance whose edges share a 2-subset.
  auto shared = parse_instance(R"({"n":4,"objective":[
      {"vars":[1,2,3],"coef":1},{"vars":[1,2,4],"coef":-2}]})");
  check_overlapping_rmcs_separate(to_hypergraph(shared), 2);
}

TEST_CASE("lifted RMC bound equals the projection-system bound on small instances") {
  Rng rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    PolynomialInstance inst;
    try {
      inst = generate_random(3 + trial % 3, 2 + trial % 2, 3, 40 + trial);
    } catch (const input_error&) {
      continue;
    }
    auto lifted = to_hypergraph(inst);
    for (auto strategy : {RmcStrategy::leftmost, RmcStrategy::balanced}) {
      auto rmc = build_rmc(lifted.graph, strategy);
      if (lifted.graph.n + lifted.graph.edges.size() + rmc.artificial.size() > 12) continue;
      auto projection = rmc_projection_system(rmc);
      for (int k = 0; k < 5; ++k) {
        auto obj = mftest::random_objective(lifted.graph, rng);
        LpModel model = build_rmc_model(lifted, rmc);
        model.set_objective(obj);
        CHECK(solve(model).value ==
              doctest::Approx(mftest::system_optimum(lifted.graph, projection, obj)).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("dominance chain on random instances") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    PolynomialInstance inst;
    try {
      inst = generate_random(4 + static_cast<int>(seed) % 3, 3, 3, 900 + seed);
    } catch (const input_error&) {
      continue;
    }
    const double std_b = relaxation_bound(inst, MethodSpec::std_lin()).bound;
    const double flower_b = relaxation_bound(inst, MethodSpec::flower()).bound;
    const double eflower_b = relaxation_bound(inst, MethodSpec::eflower()).bound;
    const double exact = brute_force_optimum(inst).value;
    CHECK(eflower_b <= flower_b + 1e-6);
    CHECK(flower_b <= std_b + 1e-6);
    CHECK(exact <= eflower_b + 1e-6);
  }
}

TEST_CASE("dominance assertion rejects inconsistent reports") {
  CompareReport report;
  RelaxResult a;
  a.method = "eflower";
  a.bound = 2.0;
  RelaxResult b;
  b.method = "std";
  b.bound = 1.0;
  report.rows = {a, b};
  CHECK_THROWS_AS(assert_dominance(report), solver_error);
  report.rows[0].bound = 0.5;
  CHECK_NOTHROW(assert_dominance(report));
  report.exact = 0.7;
  CHECK_THROWS_AS(assert_dominance(report), solver_error);
}

TEST_CASE("infeasible instance constraints surface as solver errors") {
  auto inst = parse_instance(R"({"n":2,"objective":[{"vars":[1,2],"coef":1}],
      "constraints":[{"terms":[{"vars":[1],"coef":1}],"rhs":-0.5}]})");
  CHECK_THROWS_AS(relaxation_bound(inst, MethodSpec::std_lin()), solver_error);
}

TEST_CASE("instance constraints participate in every relaxation") {
  // Constraint x1 + x2 <= 1 caps the product bound below its unconstrained value.
  auto inst = parse_instance(R"({"n":2,"objective":[{"vars":[1,2],"coef":1}],
      "constraints":[{"terms":[{"vars":[1],"coef":1},{"vars":[2],"coef":1}],"rhs":1}]})");
  CHECK(relaxation_bound(inst, MethodSpec::std_lin()).bound == doctest::Approx(0.5));
  CHECK(relaxation_bound(inst, MethodSpec::rmc(RmcStrategy::leftmost)).bound ==
        doctest::Approx(0.5));
  CHECK(brute_force_optimum(inst).value == 0.0);
}
