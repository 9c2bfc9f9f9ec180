#include "decolor/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "decolor/errors.hpp"
#include "decolor/local_search.hpp"

namespace decolor {

void SolverConfig::validate() const {
  if (population_size < 4) {
    throw ParameterError("population size must be at least 4");
  }
  if (max_evaluations < population_size) {
    throw ParameterError("evaluation budget " + std::to_string(max_evaluations) +
                         " is smaller than the population size " +
                         std::to_string(population_size));
  }
  if (!(ls_probability >= 0.0 && ls_probability <= 1.0)) {
    throw ParameterError("local search probability must lie in [0, 1]");
  }
  if (!(lower < upper)) throw ParameterError("weight bounds need lower < upper");
  if (!(sigma_floor > 0.0)) throw ParameterError("sigma floor must be positive");
  if (!(sigma_init >= sigma_floor)) {
    throw ParameterError("initial sigma must not be below the sigma floor");
  }
}

double Population::mean_fitness() const {
  if (fitness.empty()) return 0.0;
  const auto total = std::accumulate(fitness.begin(), fitness.end(), std::int64_t{0});
  return static_cast<double>(total) / static_cast<double>(fitness.size());
}

void Population::update_best() {
  best = static_cast<std::size_t>(
      std::min_element(fitness.begin(), fitness.end()) - fitness.begin());
}

Population init_population(Evaluator& evaluator, const SolverConfig& cfg, Rng& rng) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(evaluator.graph().num_vertices());
  Population pop;
  for (int i = 0; i < cfg.population_size; ++i) {
    Genotype geno;
    geno.weights.resize(n);
    for (auto& w : geno.weights) w = rng.uniform() * (cfg.upper - cfg.lower) + cfg.lower;
    geno.scale = kScaleMin + rng.uniform() * (kScaleMax - kScaleMin);
    geno.crossover = kCrossoverMin + rng.uniform() * (kCrossoverMax - kCrossoverMin);
    geno.scale_sigma = cfg.sigma_init;
    geno.crossover_sigma = cfg.sigma_init;

    Decoding decoded = evaluator.evaluate(geno.weights);
    ++pop.evaluations;
    pop.members.push_back(std::move(geno));
    pop.fitness.push_back(decoded.penalty);
    pop.colorings.push_back(std::move(decoded.coloring));
  }
  pop.update_best();
  return pop;
}

LearningRates learning_rates(std::size_t n) {
  const double dim = static_cast<double>(std::max<std::size_t>(n, 1));
  return {1.0 / std::sqrt(2.0 * dim), 1.0 / std::sqrt(2.0 * std::sqrt(dim))};
}

ControlDraws ControlDraws::sample(Rng& rng) {
  ControlDraws d{};
  d.shared = rng.gaussian();
  d.scale_sigma = rng.gaussian();
  d.scale_step = rng.gaussian();
  d.crossover_sigma = rng.gaussian();
  d.crossover_step = rng.gaussian();
  return d;
}

Genotype mutate_control_params(Genotype geno, std::size_t n,
                               const ControlDraws& draws, double sigma_floor) {
  const auto rates = learning_rates(n);
  const double shared = rates.global * draws.shared;

  geno.scale_sigma *= std::exp(shared + rates.individual * draws.scale_sigma);
  geno.crossover_sigma *= std::exp(shared + rates.individual * draws.crossover_sigma);
  if (geno.scale_sigma < sigma_floor) geno.scale_sigma = sigma_floor;
  if (geno.crossover_sigma < sigma_floor) geno.crossover_sigma = sigma_floor;

  geno.scale = std::clamp(geno.scale + geno.scale_sigma * draws.scale_step,
                          kScaleMin, kScaleMax);
  geno.crossover = std::clamp(geno.crossover + geno.crossover_sigma * draws.crossover_step,
                              kCrossoverMin, kCrossoverMax);
  return geno;
}

Genotype mutate_control_params(Genotype geno, std::size_t n, Rng& rng,
                               double sigma_floor) {
  return mutate_control_params(std::move(geno), n, ControlDraws::sample(rng), sigma_floor);
}

std::array<std::size_t, 3> pick_donors(std::size_t population_size,
                                       std::size_t target, Rng& rng) {
  if (population_size < 4) throw ParameterError("DE/rand/1 needs at least 4 members");
  std::array<std::size_t, 3> r{};
  for (std::size_t k = 0; k < r.size(); ++k) {
    for (;;) {
      const auto candidate = static_cast<std::size_t>(rng.below(population_size));
      if (candidate == target) continue;
      if (std::find(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k), candidate) !=
          r.begin() + static_cast<std::ptrdiff_t>(k)) {
        continue;
      }
      r[k] = candidate;
      break;
    }
  }
  return r;
}

std::vector<double> mutant_vector(std::span<const double> base,
                                  std::span<const double> a,
                                  std::span<const double> b, double scale,
                                  double lower, double upper) {
  std::vector<double> out(base.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = std::clamp(base[j] + scale * (a[j] - b[j]), lower, upper);
  }
  return out;
}

std::vector<double> differential_mutation(const Population& pop, std::size_t target,
                                          double scale, double lower, double upper,
                                          Rng& rng) {
  const auto [r0, r1, r2] = pick_donors(pop.size(), target, rng);
  return mutant_vector(pop.members[r0].weights, pop.members[r1].weights,
                       pop.members[r2].weights, scale, lower, upper);
}

std::vector<double> differential_crossover(std::span<const double> target,
                                           std::span<const double> mutant,
                                           double rate, Rng& rng) {
  if (target.size() != mutant.size()) {
    throw ParameterError("crossover operands differ in length");
  }
  std::vector<double> trial(target.begin(), target.end());
  if (trial.empty()) return trial;
  const auto forced = static_cast<std::size_t>(rng.below(trial.size()));
  for (std::size_t j = 0; j < trial.size(); ++j) {
    if (rng.uniform() <= rate || j == forced) trial[j] = mutant[j];
  }
  return trial;
}

bool differential_selection(Population& pop, std::size_t i, Genotype trial,
                            std::int64_t trial_fitness, Coloring trial_coloring) {
  if (trial_fitness > pop.fitness[i]) return false;
  pop.members[i] = std::move(trial);
  pop.fitness[i] = trial_fitness;
  pop.colorings[i] = std::move(trial_coloring);
  pop.update_best();
  return true;
}

namespace {

TraceSample sample(const Population& pop) {
  return {pop.evaluations, pop.fitness[pop.best], pop.mean_fitness()};
}

}  // namespace

RunResult solve(Evaluator& evaluator, const SolverConfig& cfg) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(evaluator.graph().num_vertices());
  Rng rng(cfg.seed);

  Population pop = init_population(evaluator, cfg, rng);
  RunResult result;
  result.seed = cfg.seed;
  result.trace.push_back(sample(pop));
  bool solved = pop.fitness[pop.best] == 0;

  // Generations are synchronous: donors and targets come from `pop`, while
  // survivors are written into `next`.
  while (!solved && pop.evaluations < cfg.max_evaluations) {
    Population next = pop;
    for (std::size_t i = 0; i < pop.size(); ++i) {
      if (next.evaluations >= cfg.max_evaluations) break;

      Genotype trial = mutate_control_params(pop.members[i], n, rng, cfg.sigma_floor);
      const auto mutant =
          differential_mutation(pop, i, trial.scale, cfg.lower, cfg.upper, rng);
      trial.weights = differential_crossover(pop.members[i].weights, mutant,
                                             trial.crossover, rng);

      Decoding decoded = evaluator.evaluate(trial.weights);
      ++next.evaluations;

      const bool improve = rng.uniform() < cfg.ls_probability;
      if (cfg.ls_enabled && improve && decoded.penalty > 0) {
        auto improved = local_search(evaluator, std::move(trial), std::move(decoded),
                                     cfg.max_evaluations - next.evaluations, rng);
        next.evaluations += improved.evaluations;
        trial = std::move(improved.genotype);
        decoded = std::move(improved.decoding);
      }

      const auto fitness = decoded.penalty;
      differential_selection(next, i, std::move(trial), fitness,
                             std::move(decoded.coloring));
      if (fitness == 0) {
        solved = true;
        break;
      }
    }
    pop = std::move(next);
    result.trace.push_back(sample(pop));
  }

  result.success = solved;
  result.evaluations = pop.evaluations;
  result.best_penalty = pop.fitness[pop.best];
  result.best_coloring = pop.colorings[pop.best];
  return result;
}

RunResult solve(const Graph& g, const SolverConfig& cfg) {
  Evaluator evaluator(g);
  return solve(evaluator, cfg);
}

}  // namespace decolor
