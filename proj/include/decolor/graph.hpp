#ifndef DECOLOR_GRAPH_HPP
#define DECOLOR_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace decolor {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1, optionally carrying the
/// hidden 3-partition it was generated from. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) are collapsed. Throws ParameterError on self-loops,
  /// out-of-range endpoints, or a partition that is malformed or not proper.
  Graph(Vertex n, std::vector<Edge> edges,
        std::optional<std::vector<std::uint8_t>> partition = std::nullopt);

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Edges as (min, max) pairs, sorted ascending.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbors of v, sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_[static_cast<std::size_t>(v)]};
  }
  std::size_t degree(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)].size();
  }
  bool has_edge(Vertex u, Vertex v) const;

  /// Ground-truth class in {0,1,2} for every vertex, if known.
  const std::optional<std::vector<std::uint8_t>>& partition() const {
    return partition_;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::optional<std::vector<std::uint8_t>> partition_;
};

enum class GraphType { EquiPartite, Uniform, Flat };

std::string_view to_string(GraphType type);
/// Accepts "equipartite", "uniform" or "flat". Throws ParameterError.
GraphType parse_graph_type(std::string_view name);

/// Random 3-colorable graph G(type, n, p, seed). Edges only ever join
/// vertices of different hidden classes; p is the probability applied to
/// each such cross-class pair.
///
///  - EquiPartite: class sizes differ by at most one, each cross pair kept
///    independently with probability p.
///  - Uniform: each vertex joins a class uniformly at random, then as above.
///  - Flat: classes as EquiPartite; exactly round(p * P) edges, where P is the
///    number of cross-class pairs. Each edge is drawn uniformly among the
///    cross-class non-edges whose endpoint degree sum is currently minimal.
///
/// Pure function of its arguments. Throws ParameterError for n < 3 or p
/// outside [0, 1].
Graph generate(GraphType type, Vertex n, double p, std::uint64_t seed);

/// Number of vertex pairs whose partition classes differ.
std::int64_t cross_class_pairs(std::span<const std::uint8_t> partition);

/// Parses DIMACS edge format (1-based ids). A `c partition c1 ... cn`
/// comment restores the ground-truth partition. Throws FormatError.
Graph load_dimacs(std::string_view text);

/// Byte-deterministic DIMACS text: partition comment (if any), `p edge n m`,
/// then edges sorted ascending.
std::string save_dimacs(const Graph& g);

/// FNV-1a digest of save_dimacs(g); identifies a graph instance.
std::uint64_t checksum(const Graph& g);

}  // namespace decolor

#endif  // DECOLOR_GRAPH_HPP
