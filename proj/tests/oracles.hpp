// Brute-force reference computations for tests. Nothing here calls into the
// decoder or solver; only the Graph container is shared.
#ifndef DECOLOR_TESTS_ORACLES_HPP
#define DECOLOR_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "decolor/graph.hpp"

namespace oracle {

using decolor::Edge;
using decolor::Graph;
using decolor::Vertex;

inline Graph complete(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph cycle(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph path(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

// Cycle 1..n-1 plus hub 0 joined to every rim vertex.
inline Graph wheel(Vertex n) {
  std::vector<Edge> edges;
  const Vertex rim = n - 1;
  for (Vertex k = 0; k < rim; ++k) {
    edges.emplace_back(0, k + 1);
    edges.emplace_back(k + 1, (k + 1) % rim + 1);
  }
  return Graph(n, edges);
}

inline std::vector<Edge> petersen_edges() {
  std::vector<Edge> edges;
  for (Vertex k = 0; k < 5; ++k) {
    edges.emplace_back(k, (k + 1) % 5);          // outer cycle
    edges.emplace_back(k, k + 5);                // spokes
    edges.emplace_back(k + 5, (k + 2) % 5 + 5);  // inner pentagram
  }
  return edges;
}

// Subgraph of the Petersen graph induced on `keep`, relabelled 0..k-1.
inline Graph petersen_induced(const std::vector<Vertex>& keep) {
  std::vector<Edge> edges;
  auto index = [&](Vertex v) {
    return static_cast<Vertex>(std::find(keep.begin(), keep.end(), v) - keep.begin());
  };
  const auto k = static_cast<Vertex>(keep.size());
  for (const auto& [u, v] : petersen_edges()) {
    const Vertex a = index(u), b = index(v);
    if (a < k && b < k) edges.emplace_back(a, b);
  }
  return Graph(k, edges);
}

// Vertices uncolored (0) or sharing a color with a neighbor.
inline std::int64_t violations(const Graph& g, const std::vector<int>& color) {
  std::int64_t count = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    bool bad = color[static_cast<std::size_t>(v)] == 0;
    for (const Vertex u : g.neighbors(v)) {
      if (color[static_cast<std::size_t>(v)] != 0 &&
          color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
        bad = true;
      }
    }
    count += bad ? 1 : 0;
  }
  return count;
}

// Exhaustive search over all 3^n complete assignments.
inline bool three_colorable(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> color(n, 1);
  for (;;) {
    bool proper = true;
    for (const auto& [u, v] : g.edges()) {
      if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
        proper = false;
        break;
      }
    }
    if (proper) return true;
    std::size_t k = 0;
    while (k < n && color[k] == 3) color[k++] = 1;
    if (k == n) return false;
    ++color[k];
  }
}

// Minimum penalty over all 4^n partial assignments (0 = uncolored).
inline std::int64_t min_penalty(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> color(n, 0);
  std::int64_t best = static_cast<std::int64_t>(n);
  for (;;) {
    best = std::min(best, violations(g, color));
    std::size_t k = 0;
    while (k < n && color[k] == 3) color[k++] = 0;
    if (k == n) return best;
    ++color[k];
  }
}

struct ReferenceColoring {
  std::vector<int> color;  // 0 = uncolored
  std::int64_t uncolored = 0;
};

// Literal transcription of the saturation rule: scan every unprocessed
// vertex, count distinct colors among its colored neighbors, take the
// maximum, earliest in `order` on ties.
inline ReferenceColoring reference_dsatur(const Graph& g, const std::vector<Vertex>& order) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  ReferenceColoring out{std::vector<int>(n, 0), 0};
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    int best_sat = -1;
    Vertex pick = -1;
    for (const Vertex v : order) {
      if (done[static_cast<std::size_t>(v)]) continue;
      std::set<int> seen;
      for (const Vertex u : g.neighbors(v)) {
        if (out.color[static_cast<std::size_t>(u)] != 0) seen.insert(out.color[static_cast<std::size_t>(u)]);
      }
      if (static_cast<int>(seen.size()) > best_sat) {
        best_sat = static_cast<int>(seen.size());
        pick = v;
      }
    }
    done[static_cast<std::size_t>(pick)] = true;
    std::set<int> seen;
    for (const Vertex u : g.neighbors(pick)) seen.insert(out.color[static_cast<std::size_t>(u)]);
    int c = 1;
    while (c <= 3 && seen.count(c)) ++c;
    if (c <= 3) {
      out.color[static_cast<std::size_t>(pick)] = c;
    } else {
      ++out.uncolored;
    }
  }
  return out;
}

}  // namespace oracle

#endif  // DECOLOR_TESTS_ORACLES_HPP
