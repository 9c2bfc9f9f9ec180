#include "decolor/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "decolor/errors.hpp"
#include "decolor/rng.hpp"

namespace decolor {

Graph::Graph(Vertex n, std::vector<Edge> edges,
             std::optional<std::vector<std::uint8_t>> partition)
    : n_(n) {
  if (n < 0) throw ParameterError("vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParameterError("edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "} out of range");
    }
    if (u == v) throw ParameterError("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.resize(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  if (partition) {
    if (partition->size() != static_cast<std::size_t>(n)) {
      throw ParameterError("partition size does not match vertex count");
    }
    for (const auto c : *partition) {
      if (c > 2) throw ParameterError("partition class must be 0, 1 or 2");
    }
    for (const auto& [u, v] : edges_) {
      if ((*partition)[static_cast<std::size_t>(u)] ==
          (*partition)[static_cast<std::size_t>(v)]) {
        throw ParameterError("partition is not a proper coloring");
      }
    }
    partition_ = std::move(partition);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::string_view to_string(GraphType type) {
  switch (type) {
    case GraphType::EquiPartite: return "equipartite";
    case GraphType::Uniform: return "uniform";
    case GraphType::Flat: return "flat";
  }
  return "unknown";
}

GraphType parse_graph_type(std::string_view name) {
  if (name == "equipartite") return GraphType::EquiPartite;
  if (name == "uniform") return GraphType::Uniform;
  if (name == "flat") return GraphType::Flat;
  throw ParameterError("unknown graph type '" + std::string(name) + "'");
}

std::int64_t cross_class_pairs(std::span<const std::uint8_t> partition) {
  std::array<std::int64_t, 3> sizes{};
  for (const auto c : partition) ++sizes[c];
  return sizes[0] * sizes[1] + sizes[0] * sizes[2] + sizes[1] * sizes[2];
}

namespace {

std::vector<std::uint8_t> balanced_classes(Vertex n, Rng& rng) {
  std::vector<std::uint8_t> classes(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < classes.size(); ++v) {
    classes[v] = static_cast<std::uint8_t>(v % 3);
  }
  rng.shuffle(classes);
  return classes;
}

std::vector<Edge> bernoulli_edges(std::span<const std::uint8_t> classes,
                                  double p, Rng& rng) {
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(classes.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (classes[static_cast<std::size_t>(u)] ==
          classes[static_cast<std::size_t>(v)]) {
        continue;
      }
      if (rng.uniform() < p) edges.emplace_back(u, v);
    }
  }
  return edges;
}

// Incrementally grows a graph by adding, one at a time, a cross-class
// non-edge whose endpoint degree sum is minimal, chosen uniformly among all
// such pairs.
class FlatBuilder {
 public:
  FlatBuilder(std::span<const std::uint8_t> classes, Rng& rng)
      : classes_(classes),
        rng_(rng),
        adjacency_(classes.size()) {}

  void add_edges(std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) add_one();
  }

  std::vector<Edge> take_edges() { return std::move(edges_); }

 private:
  struct Bucket {
    std::vector<Vertex> members;
    std::array<std::int64_t, 3> per_class{};
  };
  struct Candidate {
    std::size_t a, b;
    std::int64_t count;
  };

  std::size_t degree(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)].size();
  }
  std::uint8_t cls(Vertex v) const {
    return classes_[static_cast<std::size_t>(v)];
  }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& lu = adjacency_[static_cast<std::size_t>(u)];
    const auto& lv = adjacency_[static_cast<std::size_t>(v)];
    const auto& shorter = lu.size() <= lv.size() ? lu : lv;
    const Vertex target = lu.size() <= lv.size() ? v : u;
    return std::find(shorter.begin(), shorter.end(), target) != shorter.end();
  }

  bool eligible(Vertex u, Vertex v) const {
    return u != v && cls(u) != cls(v) && !adjacent(u, v);
  }

  // Cross-class non-edges with one endpoint of degree a and one of degree b.
  std::int64_t count_eligible(std::size_t a, std::size_t b) const {
    const Bucket& A = buckets_[a];
    const Bucket& B = buckets_[b];
    std::int64_t cross = 0;
    if (a == b) {
      const auto size = static_cast<std::int64_t>(A.members.size());
      std::int64_t same = 0;
      for (const auto c : A.per_class) same += c * c;
      cross = (size * size - same) / 2;
    } else {
      const auto size_b = static_cast<std::int64_t>(B.members.size());
      for (int c = 0; c < 3; ++c) cross += A.per_class[c] * (size_b - B.per_class[c]);
    }
    std::int64_t existing = 0;
    for (const Vertex u : A.members) {
      for (const Vertex x : adjacency_[static_cast<std::size_t>(u)]) {
        if (degree(x) == b) ++existing;
      }
    }
    if (a == b) existing /= 2;
    return cross - existing;
  }

  Edge sample_pair(const Candidate& cand) {
    const auto& A = buckets_[cand.a].members;
    const auto& B = buckets_[cand.b].members;
    const auto ordered = static_cast<std::int64_t>(A.size() * B.size());
    if (cand.count * 16 >= ordered) {
      // Dense enough for rejection sampling; every eligible pair has the
      // same number of ordered representations, so acceptance is uniform.
      for (;;) {
        const Vertex u = A[rng_.below(A.size())];
        const Vertex v = B[rng_.below(B.size())];
        if (eligible(u, v)) return {u, v};
      }
    }
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < A.size(); ++i) {
      const std::size_t j0 = cand.a == cand.b ? i + 1 : 0;
      for (std::size_t j = j0; j < B.size(); ++j) {
        if (eligible(A[i], B[j])) pairs.emplace_back(A[i], B[j]);
      }
    }
    return pairs[rng_.below(pairs.size())];
  }

  void rebuild_buckets() {
    std::size_t max_degree = 0;
    for (const auto& list : adjacency_) max_degree = std::max(max_degree, list.size());
    buckets_.assign(max_degree + 1, Bucket{});
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
      Bucket& bucket = buckets_[adjacency_[v].size()];
      bucket.members.push_back(static_cast<Vertex>(v));
      ++bucket.per_class[classes_[v]];
    }
  }

  void add_one() {
    rebuild_buckets();
    const std::size_t top = buckets_.size() - 1;
    std::size_t low = 0;
    while (buckets_[low].members.empty()) ++low;

    std::vector<Candidate> candidates;
    std::int64_t total = 0;
    for (std::size_t sum = 2 * low; sum <= 2 * top && total == 0; ++sum) {
      candidates.clear();
      for (std::size_t a = low; a <= sum / 2; ++a) {
        const std::size_t b = sum - a;
        if (b > top || buckets_[a].members.empty() || buckets_[b].members.empty()) {
          continue;
        }
        const auto count = count_eligible(a, b);
        if (count > 0) {
          candidates.push_back({a, b, count});
          total += count;
        }
      }
    }
    if (total == 0) throw ParameterError("no cross-class pair left to connect");

    auto pick = static_cast<std::int64_t>(rng_.below(static_cast<std::uint64_t>(total)));
    const Candidate* chosen = &candidates.back();
    for (const auto& cand : candidates) {
      if (pick < cand.count) {
        chosen = &cand;
        break;
      }
      pick -= cand.count;
    }
    const auto [u, v] = sample_pair(*chosen);
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    edges_.emplace_back(u, v);
  }

  std::span<const std::uint8_t> classes_;
  Rng& rng_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Bucket> buckets_;
  std::vector<Edge> edges_;
};

}  // namespace

Graph generate(GraphType type, Vertex n, double p, std::uint64_t seed) {
  if (n < 3) throw ParameterError("graph needs at least 3 vertices");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge probability must lie in [0, 1]");

  Rng rng(seed);
  std::vector<std::uint8_t> classes;
  std::vector<Edge> edges;
  switch (type) {
    case GraphType::EquiPartite:
      classes = balanced_classes(n, rng);
      edges = bernoulli_edges(classes, p, rng);
      break;
    case GraphType::Uniform:
      classes.resize(static_cast<std::size_t>(n));
      for (auto& c : classes) c = static_cast<std::uint8_t>(rng.below(3));
      edges = bernoulli_edges(classes, p, rng);
      break;
    case GraphType::Flat: {
      classes = balanced_classes(n, rng);
      const auto target = std::llround(p * static_cast<double>(cross_class_pairs(classes)));
      FlatBuilder builder(classes, rng);
      builder.add_edges(target);
      edges = builder.take_edges();
      break;
    }
  }
  return Graph(n, std::move(edges), std::move(classes));
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename Int>
Int parse_int(std::string_view token, std::size_t line_no) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw FormatError(line_no, "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph load_dimacs(std::string_view text) {
  std::optional<Vertex> n;
  std::vector<Edge> edges;
  std::optional<std::vector<std::uint8_t>> partition;
  std::size_t partition_line = 0;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    const auto kind = tokens[0];
    if (kind == "c") {
      if (tokens.size() >= 2 && tokens[1] == "partition") {
        std::vector<std::uint8_t> classes;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          const auto c = parse_int<int>(tokens[i], line_no);
          if (c < 0 || c > 2) throw FormatError(line_no, "partition class must be 0, 1 or 2");
          classes.push_back(static_cast<std::uint8_t>(c));
        }
        partition = std::move(classes);
        partition_line = line_no;
      }
    } else if (kind == "p") {
      if (n) throw FormatError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw FormatError(line_no, "expected 'p edge <n> <m>'");
      }
      const auto count = parse_int<Vertex>(tokens[2], line_no);
      if (count < 0) throw FormatError(line_no, "negative vertex count");
      parse_int<std::int64_t>(tokens[3], line_no);
      n = count;
    } else if (kind == "e") {
      if (!n) throw FormatError(line_no, "edge before problem line");
      if (tokens.size() != 3) throw FormatError(line_no, "expected 'e <u> <v>'");
      const auto u = parse_int<Vertex>(tokens[1], line_no);
      const auto v = parse_int<Vertex>(tokens[2], line_no);
      if (u < 1 || u > *n || v < 1 || v > *n) {
        throw FormatError(line_no, "vertex id out of range");
      }
      if (u == v) throw FormatError(line_no, "self-loop on vertex " + std::to_string(u));
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw FormatError(line_no, "unrecognized line type '" + std::string(kind) + "'");
    }
  }
  if (!n) throw FormatError(0, "missing problem line 'p edge <n> <m>'");

  if (partition) {
    if (partition->size() != static_cast<std::size_t>(*n)) {
      throw FormatError(partition_line, "partition lists " +
                                            std::to_string(partition->size()) +
                                            " classes for " + std::to_string(*n) +
                                            " vertices");
    }
    for (const auto& [u, v] : edges) {
      if ((*partition)[static_cast<std::size_t>(u)] ==
          (*partition)[static_cast<std::size_t>(v)]) {
        throw FormatError(partition_line, "partition is not a proper coloring");
      }
    }
  }
  return Graph(*n, std::move(edges), std::move(partition));
}

std::string save_dimacs(const Graph& g) {
  std::ostringstream out;
  if (const auto& part = g.partition()) {
    out << "c partition";
    for (const auto c : *part) out << ' ' << static_cast<int>(c);
    out << '\n';
  }
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return std::move(out).str();
}

std::uint64_t checksum(const Graph& g) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char ch : save_dimacs(g)) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace decolor
