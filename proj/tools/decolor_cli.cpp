// Command-line front end: graph generation, single solves, and benchmark
// sweeps.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "decolor/bench.hpp"
#include "decolor/errors.hpp"
#include "decolor/graph.hpp"
#include "decolor/solver.hpp"

namespace {

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph 3-coloring by self-adaptive differential evolution"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a random 3-colorable graph");
  std::string gen_type;
  int gen_n = 0;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--type", gen_type, "equipartite | uniform | flat")->required();
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--p", gen_p, "Edge probability")->required();
  gen->add_option("--seed", gen_seed, "Generator seed")->required();
  gen->add_option("--out", gen_out, "Output DIMACS file")->required();

  // solve
  auto* slv = app.add_subcommand("solve", "Run the solver once on a DIMACS graph");
  decolor::SolverConfig cfg;
  std::string graph_path;
  std::string trace_path;
  bool no_ls = false;
  slv->add_option("--graph", graph_path, "Input DIMACS file")->required();
  slv->add_option("--seed", cfg.seed, "Solver seed")->required();
  slv->add_option("--np", cfg.population_size, "Population size")->capture_default_str();
  slv->add_option("--fes-max", cfg.max_evaluations, "Evaluation budget")->capture_default_str();
  slv->add_option("--pls", cfg.ls_probability, "Local search probability")->capture_default_str();
  slv->add_option("--sigma-init", cfg.sigma_init, "Initial mutation strength")->capture_default_str();
  slv->add_option("--eps0", cfg.sigma_floor, "Mutation strength floor")->capture_default_str();
  slv->add_flag("--no-ls", no_ls, "Disable local search");
  slv->add_option("--trace", trace_path, "Write convergence trace CSV");

  // bench
  auto* bch = app.add_subcommand("bench", "Density sweep with SR/AES report");
  std::string bench_type;
  int bench_n = 0;
  double p_min = 0.0, p_max = 0.0, p_step = 0.0;
  int runs = 25;
  std::uint64_t bench_gen_seed = 5;
  std::uint64_t base_seed = 0;
  std::string bench_out;
  bool do_ablation = false;
  int jobs = 1;
  decolor::SolverConfig bench_cfg;
  bch->add_option("--type", bench_type, "equipartite | uniform | flat")->required();
  bch->add_option("--n", bench_n, "Vertex count")->required();
  bch->add_option("--p-min", p_min, "Lowest density")->required();
  bch->add_option("--p-max", p_max, "Highest density")->required();
  bch->add_option("--p-step", p_step, "Density step")->required();
  bch->add_option("--runs", runs, "Runs per density")->capture_default_str();
  bch->add_option("--gen-seed", bench_gen_seed, "Graph generator seed")->capture_default_str();
  bch->add_option("--base-seed", base_seed, "Seed of the first run")->required();
  bch->add_option("--out", bench_out, "Output CSV file")->required();
  bch->add_flag("--ablation", do_ablation, "Compare runs with and without local search");
  bch->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  bch->add_option("--np", bench_cfg.population_size, "Population size")->capture_default_str();
  bch->add_option("--fes-max", bench_cfg.max_evaluations, "Evaluation budget")->capture_default_str();
  bch->add_option("--pls", bench_cfg.ls_probability, "Local search probability")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen) {
      const auto g = decolor::generate(decolor::parse_graph_type(gen_type), gen_n, gen_p, gen_seed);
      write_file(gen_out, decolor::save_dimacs(g));
      std::cout << "vertices: " << g.num_vertices() << "\nedges: " << g.num_edges() << '\n';
    } else if (*slv) {
      const auto g = decolor::load_dimacs(read_file(graph_path));
      cfg.ls_enabled = !no_ls;
      const auto result = decolor::solve(g, cfg);
      if (!trace_path.empty()) write_file(trace_path, decolor::emit_trace(result));
      std::cout << "success: " << (result.success ? "true" : "false") << '\n'
                << "evaluations: " << result.evaluations << '\n'
                << "best_penalty: " << result.best_penalty << '\n';
    } else if (*bch) {
      const auto type = decolor::parse_graph_type(bench_type);
      const auto densities = decolor::density_range(p_min, p_max, p_step);
      std::string csv;
      if (do_ablation) {
        csv = decolor::emit_ablation_csv(decolor::ablation(
            type, bench_n, densities, bench_cfg, runs, bench_gen_seed, base_seed, jobs));
      } else {
        csv = decolor::emit_csv(decolor::sweep(type, bench_n, densities, bench_cfg, runs,
                                               bench_gen_seed, base_seed, jobs));
      }
      write_file(bench_out, csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
