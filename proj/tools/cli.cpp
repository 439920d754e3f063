#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "twosided/analysis.hpp"
#include "twosided/dynamics.hpp"
#include "twosided/error.hpp"
#include "twosided/fl.hpp"
#include "twosided/instances.hpp"
#include "twosided/reduction.hpp"
#include "twosided/serialization.hpp"

namespace twosided::cli {

namespace {

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

struct ExampleArgs {
  std::string name;
  std::size_t m = 3, n_hint = 4, n = 5, a_bar = 8;
  double d = 0.3;
  std::size_t u = 12, c = 6, k = 2, dim = 3;
  double e_bar = 0.5;
  std::uint64_t seed = 0;
};

Instance build_example(const ExampleArgs& a) {
  if (a.name == "simple") return example_simple();
  if (a.name == "megacrown") return example_megacrown(a.m, a.n_hint);
  if (a.name == "cascade") return example_cascade(a.n);
  if (a.name == "flower") return example_flower(a.a_bar, a.d);
  if (a.name == "uniform") return sample_uniform_instance(a.u, a.c, a.k, a.a_bar, a.dim, a.e_bar, a.seed);
  throw ValidationError("unknown example '" + a.name + "'");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate recommendation under two-sided participation constraints"};
  app.require_subcommand(1);

  ExampleArgs ex;
  auto* example = app.add_subcommand("example", "Emit a built-in instance as JSON");
  example->add_option("name", ex.name, "simple | megacrown | cascade | flower | uniform")->required();
  example->add_option("--m", ex.m, "megacrown: creator count");
  example->add_option("--n-hint", ex.n_hint, "megacrown: size hint setting a_bar");
  example->add_option("--n", ex.n, "cascade: half the player count per side");
  example->add_option("--a-bar", ex.a_bar, "flower, uniform: creator audience threshold");
  example->add_option("--d", ex.d, "flower: happy distance");
  example->add_option("--u", ex.u, "uniform: users");
  example->add_option("--c", ex.c, "uniform: creators");
  example->add_option("--k", ex.k, "uniform: recommendations per user");
  example->add_option("--dim", ex.dim, "uniform: dimension");
  example->add_option("--e-bar", ex.e_bar, "uniform: user engagement threshold");
  example->add_option("--seed", ex.seed, "uniform: seed");

  std::string instance_path = "-";
  std::string alg_name;
  std::size_t max_creators = FlOptions{}.max_creators;
  auto* simulate = app.add_subcommand("simulate", "Run the dynamics and emit the trajectory");
  simulate->add_option("--instance", instance_path, "instance JSON file, - for stdin");
  simulate->add_option("--alg", alg_name, "uc | fl | lc | cr1 | cr2")->required();
  simulate->add_option("--max-creators", max_creators, "creator cap for the exact solver");

  auto* solve = app.add_subcommand("solve", "Emit a maximum stable set");
  solve->add_option("--instance", instance_path, "instance JSON file, - for stdin");
  solve->add_option("--max-creators", max_creators, "creator cap for the exact solver");

  std::string graph_path, mode;
  std::size_t reduce_k = 3;
  auto* reduce = app.add_subcommand("reduce", "Build the instance encoding a graph");
  reduce->add_option("--graph", graph_path, "edge list, one 1-indexed \"u v\" pair per line")->required();
  reduce->add_option("--mode", mode, "regular | general | fixed-k")->required();
  reduce->add_option("--k", reduce_k, "fixed-k: recommendations per user");

  std::size_t bound_c = 0, bound_k = 0, threads = 1;
  std::uint64_t trials = 1'000'000, seed = 0;
  auto* bound = app.add_subcommand("bound", "Monte-Carlo estimate of the greedy ratio bound");
  bound->add_option("--c", bound_c, "creators")->required();
  bound->add_option("--k", bound_k, "recommendations per user")->required();
  bound->add_option("--trials", trials, "Monte-Carlo trials");
  bound->add_option("--seed", seed, "seed");
  bound->add_option("--threads", threads, "worker threads");

  std::string grid_path, out_path;
  auto* experiment = app.add_subcommand("experiment", "Run a parameter grid and write a CSV summary");
  experiment->add_option("--grid", grid_path, "grid JSON file")->required();
  experiment->add_option("--out", out_path, "CSV output file, - for stdout")->required();
  experiment->add_option("--seed", seed, "seed");
  experiment->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (example->parsed()) {
      out << instance_to_json(build_example(ex));
    } else if (simulate->parsed()) {
      Instance inst = instance_from_json(read_source(instance_path, in));
      Algorithm alg = parse_algorithm(alg_name);
      out << trajectory_to_json(run_dynamics(inst, alg, FlOptions{max_creators}), alg);
    } else if (solve->parsed()) {
      Instance inst = instance_from_json(read_source(instance_path, in));
      out << report_to_json(fl_solve(inst, FlOptions{max_creators}));
    } else if (reduce->parsed()) {
      Graph g = Graph::parse_edge_list(read_source(graph_path, in));
      if (mode == "regular") {
        out << instance_to_json(reduce_regular(g));
      } else if (mode == "general") {
        out << instance_to_json(reduce_general(g));
      } else if (mode == "fixed-k") {
        out << instance_to_json(reduce_fixed_k(g, reduce_k));
      } else {
        throw ValidationError("unknown reduction mode '" + mode + "'");
      }
    } else if (bound->parsed()) {
      out << bound_to_json(evaluate_bound_mc(bound_c, bound_k, trials, seed, threads), bound_c, bound_k, trials, seed);
    } else if (experiment->parsed()) {
      auto points = grid_from_json(read_source(grid_path, in));
      std::string csv = to_csv(summarize(run_experiment_grid(points, seed, threads)));
      if (out_path == "-") {
        out << csv;
      } else {
        std::ofstream file(out_path);
        if (!file) throw ValidationError("cannot write '" + out_path + "'");
        file << csv;
      }
    }
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace twosided::cli
