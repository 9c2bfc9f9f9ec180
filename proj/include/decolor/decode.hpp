#ifndef DECOLOR_DECODE_HPP
#define DECOLOR_DECODE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "decolor/graph.hpp"

namespace decolor {

/// Vertex ordering together with its inverse.
struct Permutation {
  std::vector<Vertex> order;  // position -> vertex
  std::vector<Vertex> rank;   // vertex -> position

  /// Throws ParameterError unless `order` is a bijection on 0..n-1.
  static Permutation from_order(std::vector<Vertex> order);
};

inline constexpr std::uint8_t kUncolored = 0;

/// Partial 3-coloring. color[v] is 1, 2, 3, or kUncolored.
struct Coloring {
  std::vector<std::uint8_t> color;
  std::int64_t uncolored_count = 0;

  bool complete() const { return uncolored_count == 0; }
};

/// Vertices sorted by weight, heaviest first; equal weights keep id order.
Permutation weights_to_permutation(std::span<const double> weights);

/// Saturation-driven construction with the permutation as tie-breaker.
///
/// At each step the unprocessed vertex with the most distinct neighbor colors
/// is taken, earliest permutation position first among equals. It receives the
/// smallest color in {1,2,3} missing from its neighbors, or stays uncolored if
/// all three are present. Uncolored vertices do not saturate their neighbors.
Coloring dsatur_decode(const Graph& g, const Permutation& perm);

/// Number of distinct colors among the colored neighbors of each vertex.
std::vector<std::uint8_t> saturation_degrees(const Graph& g, const Coloring& c);

/// Count of vertices that are uncolored or share a color with a neighbor.
/// Zero exactly when `c` is a complete proper 3-coloring.
std::int64_t penalty(const Graph& g, const Coloring& c);

/// Everything one objective evaluation produces.
struct Decoding {
  Permutation permutation;
  Coloring coloring;
  std::int64_t penalty = 0;
};

/// The genotype-to-phenotype map: weights -> permutation -> coloring ->
/// penalty. Every call is one objective evaluation; subclasses may observe
/// calls but must delegate to the base implementation.
class Evaluator {
 public:
  explicit Evaluator(const Graph& g) : graph_(&g) {}
  virtual ~Evaluator() = default;

  /// Throws ParameterError if weights.size() differs from the vertex count.
  virtual Decoding evaluate(std::span<const double> weights);

  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_;
};

}  // namespace decolor

#endif  // DECOLOR_DECODE_HPP
