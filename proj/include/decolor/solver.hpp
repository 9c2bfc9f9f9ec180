#ifndef DECOLOR_SOLVER_HPP
#define DECOLOR_SOLVER_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "decolor/decode.hpp"
#include "decolor/genotype.hpp"
#include "decolor/graph.hpp"
#include "decolor/rng.hpp"

namespace decolor {

inline constexpr double kScaleMin = 0.1;
inline constexpr double kScaleMax = 1.0;
inline constexpr double kCrossoverMin = 0.0;
inline constexpr double kCrossoverMax = 1.0;

struct SolverConfig {
  int population_size = 15;
  std::int64_t max_evaluations = 300'000;
  double ls_probability = 0.02;
  double sigma_init = 30.0;
  double lower = 0.0;   // weight bounds
  double upper = 1.0;
  double sigma_floor = 0.001;
  std::uint64_t seed = 0;
  bool ls_enabled = true;

  /// Throws ParameterError when a field is out of range, including a budget
  /// too small to evaluate the initial population.
  void validate() const;
};

struct Population {
  std::vector<Genotype> members;
  std::vector<std::int64_t> fitness;  // penalty of each decoded member
  std::vector<Coloring> colorings;    // phenotype of each member
  std::int64_t evaluations = 0;
  std::size_t best = 0;

  std::size_t size() const { return members.size(); }
  double mean_fitness() const;
  void update_best();
};

/// Random weights uniform in [lower, upper], F uniform in [0.1, 1], CR
/// uniform in [0, 1], both sigmas at sigma_init. Every member is evaluated.
Population init_population(Evaluator& evaluator, const SolverConfig& cfg, Rng& rng);

/// Learning rates of the log-normal sigma update for dimension n.
struct LearningRates {
  double global;      // 1 / sqrt(2 n)
  double individual;  // 1 / sqrt(2 sqrt(n))
};
LearningRates learning_rates(std::size_t n);

/// Standard normal draws consumed by one control-parameter mutation.
/// `shared` enters both sigma updates; the rest belong to one parameter.
struct ControlDraws {
  double shared;
  double scale_sigma;
  double scale_step;
  double crossover_sigma;
  double crossover_step;

  /// Draws in declaration order.
  static ControlDraws sample(Rng& rng);
};

/// sigma' = max(eps0, sigma * exp(tau' * shared + tau * own)), then
/// x' = x + sigma' * step, clamped into the parameter's legal range.
/// Weights are left untouched.
Genotype mutate_control_params(Genotype geno, std::size_t n,
                               const ControlDraws& draws, double sigma_floor);
Genotype mutate_control_params(Genotype geno, std::size_t n, Rng& rng,
                               double sigma_floor);

/// Three mutually distinct member indices, all different from `target`.
std::array<std::size_t, 3> pick_donors(std::size_t population_size,
                                       std::size_t target, Rng& rng);

/// base + scale * (a - b) per component, clamped to [lower, upper].
std::vector<double> mutant_vector(std::span<const double> base,
                                  std::span<const double> a,
                                  std::span<const double> b, double scale,
                                  double lower, double upper);

/// DE/rand/1 mutant for member `target`.
std::vector<double> differential_mutation(const Population& pop, std::size_t target,
                                          double scale, double lower, double upper,
                                          Rng& rng);

/// Binomial crossover: coordinate j comes from the mutant when
/// uniform() <= rate or j is the forced index, otherwise from the target.
std::vector<double> differential_crossover(std::span<const double> target,
                                           std::span<const double> mutant,
                                           double rate, Rng& rng);

/// Replaces member i when trial_fitness <= fitness[i]. Returns whether the
/// trial was accepted.
bool differential_selection(Population& pop, std::size_t i, Genotype trial,
                            std::int64_t trial_fitness, Coloring trial_coloring);

struct TraceSample {
  std::int64_t evaluations;
  std::int64_t best_penalty;
  double mean_penalty;
};

struct RunResult {
  bool success = false;
  std::int64_t evaluations = 0;
  std::int64_t best_penalty = 0;
  Coloring best_coloring;
  std::vector<TraceSample> trace;  // one sample after init, then per generation
  std::uint64_t seed = 0;
};

/// Self-adaptive DE/rand/1/bin with optional order local search. Stops on
/// the first complete coloring or once the evaluation budget is spent.
RunResult solve(Evaluator& evaluator, const SolverConfig& cfg);
RunResult solve(const Graph& g, const SolverConfig& cfg);

}  // namespace decolor

#endif  // DECOLOR_SOLVER_HPP
