#include "decolor/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "decolor/errors.hpp"

namespace decolor {

std::vector<RunResult> run_campaign(const Graph& g, const SolverConfig& cfg, int runs,
                                    std::uint64_t base_seed, int jobs) {
  if (runs < 1) throw ParameterError("campaign needs at least one run");
  cfg.validate();

  std::vector<RunResult> results(static_cast<std::size_t>(runs));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (int r = next++; r < runs; r = next++) {
      try {
        SolverConfig run_cfg = cfg;
        run_cfg.seed = base_seed + static_cast<std::uint64_t>(r);
        results[static_cast<std::size_t>(r)] = solve(g, run_cfg);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const int workers = std::clamp(jobs, 1, runs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

ReportRow aggregate(double p, std::span<const RunResult> results) {
  ReportRow row;
  row.p = p;
  row.runs = static_cast<int>(results.size());
  std::int64_t evals = 0;
  for (const auto& r : results) {
    if (!r.success) continue;
    ++row.successes;
    evals += r.evaluations;
  }
  row.success_rate = row.runs == 0 ? 0.0 : static_cast<double>(row.successes) / row.runs;
  if (row.successes > 0) row.aes = static_cast<double>(evals) / row.successes;
  return row;
}

std::vector<double> density_range(double min, double max, double step) {
  if (!(step > 0.0)) throw ParameterError("density step must be positive");
  if (!(min >= 0.0 && max <= 1.0 && min <= max)) {
    throw ParameterError("densities must satisfy 0 <= min <= max <= 1");
  }
  std::vector<double> values;
  const auto count = static_cast<long>(std::floor((max - min) / step + 0.5));
  for (long k = 0; k <= count; ++k) {
    // Snap to 12 decimals so 0.004 + 3 * 0.001 prints as 0.007.
    const double p = std::round((min + static_cast<double>(k) * step) * 1e12) / 1e12;
    values.push_back(std::min(p, 1.0));
  }
  return values;
}

std::vector<double> reference_densities() { return density_range(0.004, 0.014, 0.001); }

BenchReport sweep(GraphType type, Vertex n, std::span<const double> p_values,
                  const SolverConfig& cfg, int runs, std::uint64_t gen_seed,
                  std::uint64_t base_seed, int jobs) {
  cfg.validate();
  if (runs < 1) throw ParameterError("campaign needs at least one run");
  BenchReport report{type, n, gen_seed, cfg, {}};
  for (const double p : p_values) {
    const Graph g = generate(type, n, p, gen_seed);
    const auto results = run_campaign(g, cfg, runs, base_seed, jobs);
    ReportRow row = aggregate(p, results);
    row.graph_checksum = checksum(g);
    report.rows.push_back(row);
  }
  return report;
}

AblationReport ablation(GraphType type, Vertex n, std::span<const double> p_values,
                        const SolverConfig& cfg, int runs, std::uint64_t gen_seed,
                        std::uint64_t base_seed, int jobs) {
  SolverConfig none = cfg;
  none.ls_enabled = false;
  SolverConfig ls = cfg;
  ls.ls_enabled = true;
  return {sweep(type, n, p_values, none, runs, gen_seed, base_seed, jobs),
          sweep(type, n, p_values, ls, runs, gen_seed, base_seed, jobs)};
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string aes_field(const std::optional<double>& aes) {
  return aes ? fixed(*aes, 2) : std::string();
}

}  // namespace

std::string emit_csv(const BenchReport& report) {
  std::string out = "type,n,p,runs,successes,SR,AES\n";
  for (const auto& row : report.rows) {
    out += std::string(to_string(report.type)) + ',' + std::to_string(report.n) + ',' +
           format_double(row.p) + ',' + std::to_string(row.runs) + ',' +
           std::to_string(row.successes) + ',' + fixed(row.success_rate, 4) + ',' +
           aes_field(row.aes) + '\n';
  }
  return out;
}

std::string emit_ablation_csv(const AblationReport& report) {
  const auto& none = report.without_ls;
  const auto& ls = report.with_ls;
  if (none.rows.size() != ls.rows.size()) {
    throw ParameterError("ablation arms cover different densities");
  }
  std::string out = "type,n,p,runs,SR_none,AES_none,SR_ls,AES_ls\n";
  const std::string prefix = std::string(to_string(none.type)) + ',' + std::to_string(none.n) + ',';
  for (std::size_t k = 0; k < none.rows.size(); ++k) {
    const auto& a = none.rows[k];
    const auto& b = ls.rows[k];
    out += prefix + format_double(a.p) + ',' + std::to_string(a.runs) + ',' +
           fixed(a.success_rate, 4) + ',' + aes_field(a.aes) + ',' +
           fixed(b.success_rate, 4) + ',' + aes_field(b.aes) + '\n';
  }
  if (none.rows.empty()) return out;

  auto averages = [](const BenchReport& arm) {
    double sr = 0.0, aes = 0.0;
    int defined = 0;
    for (const auto& row : arm.rows) {
      sr += row.success_rate;
      if (row.aes) {
        aes += *row.aes;
        ++defined;
      }
    }
    std::optional<double> mean_aes;
    if (defined > 0) mean_aes = aes / defined;
    return std::pair{sr / static_cast<double>(arm.rows.size()), mean_aes};
  };
  const auto [sr_none, aes_none] = averages(none);
  const auto [sr_ls, aes_ls] = averages(ls);
  out += prefix + "avg," + std::to_string(none.rows.front().runs) + ',' + fixed(sr_none, 4) +
         ',' + aes_field(aes_none) + ',' + fixed(sr_ls, 4) + ',' + aes_field(aes_ls) + '\n';
  return out;
}

std::string emit_trace(const RunResult& result) {
  std::string out = "evals,best_uncolored,mean_uncolored\n";
  for (const auto& s : result.trace) {
    out += std::to_string(s.evaluations) + ',' + std::to_string(s.best_penalty) + ',' +
           fixed(s.mean_penalty, 4) + '\n';
  }
  return out;
}

}  // namespace decolor
