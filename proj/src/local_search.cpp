#include "decolor/local_search.hpp"

#include <utility>
#include <vector>

namespace decolor {

std::optional<SwapMove> swap_step(const Graph& g, const Genotype& geno,
                                  const Decoding& decoding, Rng& rng) {
  if (decoding.coloring.complete()) return std::nullopt;

  Vertex first = -1;
  for (const Vertex v : decoding.permutation.order) {
    if (decoding.coloring.color[static_cast<std::size_t>(v)] == kUncolored) {
      first = v;
      break;
    }
  }
  if (first < 0 || g.degree(first) == 0) return std::nullopt;

  const auto saturation = saturation_degrees(g, decoding.coloring);
  std::vector<Vertex> top;
  int best = -1;
  for (const Vertex u : g.neighbors(first)) {
    const int s = saturation[static_cast<std::size_t>(u)];
    if (s > best) {
      best = s;
      top.clear();
    }
    if (s == best) top.push_back(u);
  }
  const Vertex partner = top.size() == 1 ? top.front() : top[rng.below(top.size())];

  SwapMove move{geno, first, partner};
  std::swap(move.genotype.weights[static_cast<std::size_t>(first)],
            move.genotype.weights[static_cast<std::size_t>(partner)]);
  return move;
}

LocalSearchResult local_search(Evaluator& evaluator, Genotype geno,
                               Decoding decoding, std::int64_t budget, Rng& rng) {
  LocalSearchResult result{std::move(geno), std::move(decoding), 0};
  const Graph& g = evaluator.graph();
  const auto cap = static_cast<std::int64_t>(g.num_vertices());

  while (result.decoding.penalty > 0 && result.evaluations < budget &&
         result.evaluations < cap) {
    auto move = swap_step(g, result.genotype, result.decoding, rng);
    if (!move) break;
    Decoding candidate = evaluator.evaluate(move->genotype.weights);
    ++result.evaluations;
    if (candidate.penalty >= result.decoding.penalty) break;
    result.genotype = std::move(move->genotype);
    result.decoding = std::move(candidate);
  }
  return result;
}

}  // namespace decolor
