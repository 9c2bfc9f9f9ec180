#include "decolor/decode.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "decolor/errors.hpp"

namespace decolor {

Permutation Permutation::from_order(std::vector<Vertex> order) {
  const auto n = order.size();
  std::vector<Vertex> rank(n, -1);
  for (std::size_t k = 0; k < n; ++k) {
    const Vertex v = order[k];
    if (v < 0 || static_cast<std::size_t>(v) >= n || rank[static_cast<std::size_t>(v)] != -1) {
      throw ParameterError("order is not a permutation");
    }
    rank[static_cast<std::size_t>(v)] = static_cast<Vertex>(k);
  }
  return {std::move(order), std::move(rank)};
}

Permutation weights_to_permutation(std::span<const double> weights) {
  std::vector<Vertex> order(weights.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    const double wa = weights[static_cast<std::size_t>(a)];
    const double wb = weights[static_cast<std::size_t>(b)];
    return wa > wb || (wa == wb && a < b);
  });
  std::vector<Vertex> rank(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    rank[static_cast<std::size_t>(order[k])] = static_cast<Vertex>(k);
  }
  return {std::move(order), std::move(rank)};
}

namespace {

constexpr std::array<std::uint8_t, 8> kBitCount{0, 1, 1, 2, 1, 2, 2, 3};

// Set of permutation ranks with ascending iteration, one bit per rank.
class RankSet {
 public:
  explicit RankSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void insert(std::size_t r) {
    words_[r / 64] |= std::uint64_t{1} << (r % 64);
    first_ = std::min(first_, r / 64);
    ++size_;
  }
  void erase(std::size_t r) {
    words_[r / 64] &= ~(std::uint64_t{1} << (r % 64));
    --size_;
  }
  bool empty() const { return size_ == 0; }

  // Smallest member; the set must be non-empty. Words below `first_` are
  // known to be zero.
  std::size_t front() {
    while (words_[first_] == 0) ++first_;
    return first_ * 64 + static_cast<std::size_t>(std::countr_zero(words_[first_]));
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
  std::size_t first_ = 0;
};

}  // namespace

Coloring dsatur_decode(const Graph& g, const Permutation& perm) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  Coloring result;
  result.color.assign(n, kUncolored);

  // Bit c of seen[v] is set once a neighbor of v holds color c + 1. Each
  // unprocessed vertex sits in the rank set of its saturation level, so the
  // next vertex is the front of the highest non-empty level.
  std::vector<std::uint8_t> seen(n, 0);
  std::array<RankSet, 4> levels{RankSet(n), RankSet(n), RankSet(n), RankSet(n)};
  for (std::size_t r = 0; r < n; ++r) levels[0].insert(r);

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t lvl = 3;
    while (levels[lvl].empty()) --lvl;
    const std::size_t r = levels[lvl].front();
    levels[lvl].erase(r);
    const Vertex v = perm.order[r];
    const auto vi = static_cast<std::size_t>(v);

    const auto free = static_cast<unsigned>(~seen[vi] & 0b111u);
    // Bit 3 marks v as processed so neighbor updates leave it alone.
    seen[vi] = 0b1000;
    if (free == 0) {
      ++result.uncolored_count;
      continue;
    }
    const int c = std::countr_zero(free);
    result.color[vi] = static_cast<std::uint8_t>(c + 1);
    const auto bit = static_cast<std::uint8_t>(1u << c);
    for (const Vertex u : g.neighbors(v)) {
      auto& mask = seen[static_cast<std::size_t>(u)];
      if (mask & (bit | 0b1000)) continue;
      const auto ru = static_cast<std::size_t>(perm.rank[static_cast<std::size_t>(u)]);
      levels[kBitCount[mask]].erase(ru);
      mask = static_cast<std::uint8_t>(mask | bit);
      levels[kBitCount[mask]].insert(ru);
    }
  }
  return result;
}

std::vector<std::uint8_t> saturation_degrees(const Graph& g, const Coloring& c) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<std::uint8_t> seen(n, 0);
  for (const auto& [u, v] : g.edges()) {
    const auto cu = c.color[static_cast<std::size_t>(u)];
    const auto cv = c.color[static_cast<std::size_t>(v)];
    if (cv != kUncolored) seen[static_cast<std::size_t>(u)] |= static_cast<std::uint8_t>(1u << (cv - 1));
    if (cu != kUncolored) seen[static_cast<std::size_t>(v)] |= static_cast<std::uint8_t>(1u << (cu - 1));
  }
  for (auto& s : seen) s = kBitCount[s];
  return seen;
}

std::int64_t penalty(const Graph& g, const Coloring& c) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<char> violated(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (c.color[v] == kUncolored) violated[v] = 1;
  }
  for (const auto& [u, v] : g.edges()) {
    const auto cu = c.color[static_cast<std::size_t>(u)];
    if (cu != kUncolored && cu == c.color[static_cast<std::size_t>(v)]) {
      violated[static_cast<std::size_t>(u)] = 1;
      violated[static_cast<std::size_t>(v)] = 1;
    }
  }
  return std::count(violated.begin(), violated.end(), 1);
}

Decoding Evaluator::evaluate(std::span<const double> weights) {
  const Graph& g = graph();
  if (weights.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw ParameterError("weight vector length " + std::to_string(weights.size()) +
                         " does not match vertex count " +
                         std::to_string(g.num_vertices()));
  }
  Decoding out;
  out.permutation = weights_to_permutation(weights);
  out.coloring = dsatur_decode(g, out.permutation);
  // Decoded colorings are proper, so only uncolored vertices violate.
  out.penalty = out.coloring.uncolored_count;
  return out;
}

}  // namespace decolor
