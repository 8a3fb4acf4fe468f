// Command-line front end: generate instances, solve relaxations, compare
// bounds, separate extended flower cuts, and emit RMC projection systems.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multiflower/io.hpp"
#include "multiflower/lp.hpp"
#include "multiflower/relax.hpp"

namespace mf = multiflower;

namespace {

mf::PolynomialInstance load_instance(const std::string& path) {
  std::vector<std::string> warnings;
  auto inst = mf::parse_instance(mf::read_file(path), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return inst;
}

mf::MethodSpec parse_method(const std::string& spec) {
  if (spec == "std") return mf::MethodSpec::std_lin();
  if (spec == "flower") return mf::MethodSpec::flower();
  if (spec == "eflower") return mf::MethodSpec::eflower();
  if (spec == "rmc" || spec == "rmc:leftmost") return mf::MethodSpec::rmc(mf::RmcStrategy::leftmost);
  if (spec == "rmc:balanced") return mf::MethodSpec::rmc(mf::RmcStrategy::balanced);
  if (spec == "rmc:minsize") return mf::MethodSpec::rmc_minsize();
  if (spec.rfind("rmc:file=", 0) == 0) {
    const std::string path = spec.substr(9);
    auto map = mf::load_partition_map(mf::read_file(path));
    return mf::MethodSpec::rmc_explicit(std::move(map),
                                        "rmc:" + std::filesystem::path(path).stem().string());
  }
  throw mf::input_error("unknown method \"" + spec + "\"");
}

int run(int argc, char** argv) {
  CLI::App app{"LP relaxations of binary polynomial optimization problems over "
               "hypergraph multilinear sets"};
  app.require_subcommand(1);

  double tol = 1e-7;
  int max_rounds = 100;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  int gen_n = 0, gen_edges = 0, gen_rank = 3;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--edges", gen_edges, "number of multilinear terms")->required();
  gen->add_option("--rank", gen_rank, "maximum term cardinality");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("-o,--output", gen_out, "instance file to write")->required();

  // relax
  auto* relax = app.add_subcommand("relax", "solve one relaxation and print its bound");
  std::string relax_instance, relax_method, relax_strategy = "leftmost", relax_rmc_file,
              relax_report;
  relax->add_option("instance", relax_instance, "instance file")->required();
  relax->add_option("--method", relax_method, "std | flower | eflower | rmc")->required();
  relax->add_option("--rmc-strategy", relax_strategy, "leftmost | balanced | minsize");
  relax->add_option("--rmc-file", relax_rmc_file, "explicit RMC partition file");
  relax->add_option("--tol", tol, "separation tolerance")->envname("MULTIFLOWER_TOL");
  relax->add_option("--max-rounds", max_rounds, "cutting-plane round limit");
  relax->add_option("--report", relax_report, "write a JSON report here");

  // compare
  auto* compare = app.add_subcommand("compare", "compare relaxation bounds");
  std::string cmp_instance, cmp_json, cmp_csv;
  std::vector<std::string> cmp_methods;
  bool cmp_exact = false;
  compare->add_option("instance", cmp_instance, "instance file")->required();
  compare->add_option("--methods", cmp_methods, "comma-separated method specs")
      ->required()
      ->delimiter(',');
  compare->add_flag("--exact", cmp_exact, "add the brute-force optimum row");
  compare->add_option("--json", cmp_json, "write the report as JSON here");
  compare->add_option("--csv", cmp_csv, "write the report as CSV here");
  compare->add_option("--tol", tol, "separation tolerance")->envname("MULTIFLOWER_TOL");

  // separate
  auto* separate = app.add_subcommand("separate", "separate extended flower cuts at a point");
  std::string sep_instance, sep_point;
  separate->add_option("instance", sep_instance, "instance file")->required();
  separate->add_option("--point", sep_point, "fractional point file")->required();
  separate->add_option("--tol", tol, "violation tolerance")->envname("MULTIFLOWER_TOL");

  // project
  auto* project = app.add_subcommand("project", "emit the projection system of an RMC");
  std::string prj_instance, prj_rmc_file, prj_out;
  project->add_option("instance", prj_instance, "instance file")->required();
  project->add_option("--rmc-file", prj_rmc_file, "explicit RMC partition file")->required();
  project->add_option("-o,--output", prj_out, "write the system here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // bad usage is an input error
  }

  mf::RelaxOptions options;
  options.tol = tol;
  options.max_rounds = max_rounds;

  if (gen->parsed()) {
    auto inst = mf::generate_random(gen_n, gen_edges, gen_rank, gen_seed);
    mf::write_file(gen_out, mf::render_instance(inst));
    return 0;
  }

  if (relax->parsed()) {
    auto inst = load_instance(relax_instance);
    mf::MethodSpec method;
    if (relax_method == "rmc") {
      if (!relax_rmc_file.empty()) {
        auto map = mf::load_partition_map(mf::read_file(relax_rmc_file));
        method = mf::MethodSpec::rmc_explicit(
            std::move(map), "rmc:" + std::filesystem::path(relax_rmc_file).stem().string());
      } else if (relax_strategy == "minsize") {
        method = mf::MethodSpec::rmc_minsize();
      } else if (relax_strategy == "balanced") {
        method = mf::MethodSpec::rmc(mf::RmcStrategy::balanced);
      } else if (relax_strategy == "leftmost") {
        method = mf::MethodSpec::rmc(mf::RmcStrategy::leftmost);
      } else {
        throw mf::input_error("unknown RMC strategy \"" + relax_strategy + "\"");
      }
    } else {
      method = parse_method(relax_method);
    }
    auto result = mf::relaxation_bound(inst, method, options);
    std::printf("bound=%.6f\n", result.bound);
    if (!relax_report.empty()) {
      mf::CompareReport report;
      report.instance_id = relax_instance;
      report.rows.push_back(result);
      mf::write_file(relax_report, mf::report_to_json(report));
    }
    return 0;
  }

  if (compare->parsed()) {
    auto inst = load_instance(cmp_instance);
    auto lifted = mf::to_hypergraph(inst);
    mf::CompareReport report;
    report.instance_id = cmp_instance;
    for (const auto& spec : cmp_methods)
      report.rows.push_back(mf::relaxation_bound(lifted, parse_method(spec), options));
    std::sort(report.rows.begin(), report.rows.end(),
              [](const auto& a, const auto& b) { return a.method < b.method; });
    if (cmp_exact) {
      auto exact = mf::brute_force_optimum(inst);
      if (!exact.feasible) throw mf::input_error("instance has no feasible binary point");
      report.exact = exact.value;
    }
    mf::assert_dominance(report);
    std::printf("%-16s %12s %8s %8s %7s %9s\n", "method", "bound", "vars", "ineqs", "rounds",
                "ms");
    for (const auto& row : report.rows)
      std::printf("%-16s %12.6f %8d %8d %7d %9.2f\n", row.method.c_str(), row.bound, row.n_vars,
                  row.n_ineqs, row.rounds, row.ms);
    if (report.exact) std::printf("%-16s %12.6f\n", "exact", *report.exact);
    if (!cmp_json.empty()) mf::write_file(cmp_json, mf::report_to_json(report));
    if (!cmp_csv.empty()) mf::write_file(cmp_csv, mf::report_to_csv(report));
    return 0;
  }

  if (separate->parsed()) {
    auto inst = load_instance(sep_instance);
    auto lifted = mf::to_hypergraph(inst);
    auto point = mf::load_point(mf::read_file(sep_point));
    auto cuts = mf::separate_extended_flower(lifted.graph, point, tol);
    for (const auto& cut : cuts) std::cout << mf::cut_to_json_line(cut) << "\n";
    return 0;
  }

  if (project->parsed()) {
    auto inst = load_instance(prj_instance);
    auto lifted = mf::to_hypergraph(inst);
    auto map = mf::load_partition_map(mf::read_file(prj_rmc_file));
    auto rmc = mf::build_rmc(lifted.graph, map);
    const std::string doc = mf::system_to_json(mf::rmc_projection_system(rmc));
    if (prj_out.empty())
      std::cout << doc;
    else
      mf::write_file(prj_out, doc);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mf::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const mf::limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mf::solver_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
