#ifndef DECOLOR_BENCH_HPP
#define DECOLOR_BENCH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "decolor/graph.hpp"
#include "decolor/solver.hpp"

namespace decolor {

/// Runs `runs` independent solves with seeds base_seed, base_seed + 1, ...
/// on up to `jobs` threads. Results are ordered by seed and do not depend on
/// `jobs`.
std::vector<RunResult> run_campaign(const Graph& g, const SolverConfig& cfg, int runs,
                                    std::uint64_t base_seed, int jobs = 1);

struct ReportRow {
  double p = 0.0;
  int runs = 0;
  int successes = 0;
  double success_rate = 0.0;
  std::optional<double> aes;  // mean evaluations over successful runs
  std::uint64_t graph_checksum = 0;
};

/// Aggregates SR and AES for one density.
ReportRow aggregate(double p, std::span<const RunResult> results);

struct BenchReport {
  GraphType type = GraphType::EquiPartite;
  Vertex n = 0;
  std::uint64_t gen_seed = 0;
  SolverConfig config;
  std::vector<ReportRow> rows;
};

/// Densities min, min + step, ..., up to max inclusive (within step / 2).
std::vector<double> density_range(double min, double max, double step);

/// The 11 densities 0.004, 0.005, ..., 0.014 of the reference experiment.
std::vector<double> reference_densities();

/// One graph G(type, n, p, gen_seed) and one campaign per density.
BenchReport sweep(GraphType type, Vertex n, std::span<const double> p_values,
                  const SolverConfig& cfg, int runs, std::uint64_t gen_seed,
                  std::uint64_t base_seed, int jobs = 1);

/// The same sweep with local search off and on, over identical graphs and
/// seeds.
struct AblationReport {
  BenchReport without_ls;
  BenchReport with_ls;
};

AblationReport ablation(GraphType type, Vertex n, std::span<const double> p_values,
                        const SolverConfig& cfg, int runs, std::uint64_t gen_seed,
                        std::uint64_t base_seed, int jobs = 1);

/// `type,n,p,runs,successes,SR,AES`, one row per density. SR has 4
/// decimals, AES 2, and AES is empty when no run succeeded.
std::string emit_csv(const BenchReport& report);

/// Paired NONE/LS rows followed by an `avg` row. Each arm's average SR is
/// taken over all densities, its average AES over densities where it is
/// defined.
std::string emit_ablation_csv(const AblationReport& report);

/// `evals,best_uncolored,mean_uncolored`, one row per trace sample.
std::string emit_trace(const RunResult& result);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace decolor

#endif  // DECOLOR_BENCH_HPP
