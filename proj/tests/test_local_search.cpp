#include <doctest.h>

#include <algorithm>
#include <set>

#include "counting_evaluator.hpp"
#include "decolor/local_search.hpp"
#include "oracles.hpp"

using namespace decolor;

namespace {

Genotype with_weights(std::vector<double> w) {
  Genotype g;
  g.weights = std::move(w);
  return g;
}

Genotype random_genotype(Vertex n, Rng& rng) {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (auto& x : w) x = rng.uniform();
  return with_weights(std::move(w));
}

}  // namespace

TEST_CASE("swap_step picks the most saturated neighbor, random among ties") {
  // Vertex 4 is uncolored with neighbors 1, 6, 7. Vertices 1 and 7 both see
  // two colors, vertex 6 sees none.
  const Graph g(8, {{4, 1}, {4, 6}, {4, 7}, {1, 0}, {1, 2}, {7, 5}, {7, 3}});
  std::vector<double> w(8);
  for (std::size_t v = 0; v < 8; ++v) w[v] = 1.0 - 0.1 * static_cast<double>(v);
  const auto geno = with_weights(w);

  Decoding d;
  d.permutation = weights_to_permutation(geno.weights);
  d.coloring = Coloring{{2, 1, 3, 2, kUncolored, 1, 2, 3}, 1};
  d.penalty = 1;
  REQUIRE(saturation_degrees(g, d.coloring)[1] == 2);
  REQUIRE(saturation_degrees(g, d.coloring)[7] == 2);
  REQUIRE(saturation_degrees(g, d.coloring)[6] == 0);

  std::set<Vertex> partners;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    Rng rng(seed);
    const auto move = swap_step(g, geno, d, rng);
    REQUIRE(move.has_value());
    CHECK(move->uncolored == 4);
    CHECK((move->partner == 1 || move->partner == 7));
    partners.insert(move->partner);
    CHECK(move->genotype.weights[4] == w[static_cast<std::size_t>(move->partner)]);
    CHECK(move->genotype.weights[static_cast<std::size_t>(move->partner)] == w[4]);
    const auto swapped = weights_to_permutation(move->genotype.weights);
    CHECK(swapped.rank[4] == d.permutation.rank[move->partner]);
  }
  CHECK(partners == std::set<Vertex>{1, 7});
}

TEST_CASE("swap_step with a single neighbor always takes it") {
  const Graph g(3, {{0, 2}});
  const auto geno = with_weights({0.9, 0.5, 0.1});
  Decoding d;
  d.permutation = weights_to_permutation(geno.weights);
  d.coloring = Coloring{{1, kUncolored, kUncolored}, 2};
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Rng rng(seed);
    // Vertex 1 comes first among the uncolored but has no neighbors.
    CHECK_FALSE(swap_step(g, geno, d, rng).has_value());
  }
  d.coloring = Coloring{{1, 2, kUncolored}, 1};
  Rng rng(0);
  const auto move = swap_step(g, geno, d, rng);
  REQUIRE(move.has_value());
  CHECK(move->uncolored == 2);
  CHECK(move->partner == 0);
}

TEST_CASE("swap_step on a complete coloring returns nothing") {
  const auto g = oracle::complete(3);
  CountingEvaluator eval(g);
  const auto geno = with_weights({0.1, 0.2, 0.3});
  const auto d = eval.evaluate(geno.weights);
  Rng rng(1);
  CHECK_FALSE(swap_step(g, geno, d, rng).has_value());
}

TEST_CASE("local_search stops immediately on penalty 0 or budget 0") {
  Rng rng(3);
  const auto g = oracle::cycle(6);
  CountingEvaluator eval(g);
  const auto geno = random_genotype(6, rng);
  const auto d = eval.evaluate(geno.weights);
  REQUIRE(d.penalty == 0);
  const auto res = local_search(eval, geno, d, 100, rng);
  CHECK(res.evaluations == 0);
  CHECK(res.genotype == geno);

  const auto k4 = oracle::complete(4);
  CountingEvaluator eval4(k4);
  const auto geno4 = random_genotype(4, rng);
  const auto d4 = eval4.evaluate(geno4.weights);
  const auto res4 = local_search(eval4, geno4, d4, 0, rng);
  CHECK(res4.evaluations == 0);
  CHECK(res4.genotype == geno4);
}

TEST_CASE("local_search on K4 makes one non-improving swap") {
  REQUIRE(oracle::min_penalty(oracle::complete(4)) == 1);
  const auto k4 = oracle::complete(4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    CountingEvaluator eval(k4);
    const auto geno = random_genotype(4, rng);
    const auto d = eval.evaluate(geno.weights);
    eval.calls = 0;
    const auto res = local_search(eval, geno, d, 1000, rng);
    CHECK(res.evaluations == 1);
    CHECK(eval.calls == 1);
    CHECK(res.decoding.penalty == 1);
    CHECK(res.genotype == geno);
  }
}

TEST_CASE("local_search properties over random graphs") {
  Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<Vertex>(20 + rng.below(80));
    const auto g = generate(static_cast<GraphType>(t % 3), n, 0.05 + 0.1 * rng.uniform(),
                            static_cast<std::uint64_t>(t));
    CountingEvaluator eval(g);
    const auto geno = random_genotype(n, rng);
    const auto d = eval.evaluate(geno.weights);
    const auto budget = static_cast<std::int64_t>(rng.below(150));
    eval.calls = 0;
    const auto res = local_search(eval, geno, d, budget, rng);

    CHECK(res.decoding.penalty <= d.penalty);
    CHECK(res.evaluations == eval.calls);
    CHECK(res.evaluations <= std::min<std::int64_t>(budget, n));
    auto a = geno.weights, b = res.genotype.weights;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(Evaluator(g).evaluate(res.genotype.weights).penalty == res.decoding.penalty);
  }
}
