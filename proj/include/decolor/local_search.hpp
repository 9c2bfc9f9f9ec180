#ifndef DECOLOR_LOCAL_SEARCH_HPP
#define DECOLOR_LOCAL_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "decolor/decode.hpp"
#include "decolor/genotype.hpp"
#include "decolor/rng.hpp"

namespace decolor {

struct SwapMove {
  Genotype genotype;  // input genotype with the two weights exchanged
  Vertex uncolored;   // first uncolored vertex in permutation order
  Vertex partner;     // its most saturated neighbor
};

/// One order-local-search move. Finds the uncolored vertex that comes first
/// in the decoded permutation and exchanges its weight with that of its
/// neighbor of highest final saturation degree (ties broken uniformly at
/// random). Returns nothing if the coloring is complete.
///
/// `decoding` must be the decode of `geno`.
std::optional<SwapMove> swap_step(const Graph& g, const Genotype& geno,
                                  const Decoding& decoding, Rng& rng);

struct LocalSearchResult {
  Genotype genotype;
  Decoding decoding;
  std::int64_t evaluations = 0;
};

/// Applies swap_step repeatedly, keeping each swap whose re-decode strictly
/// lowers the penalty. Stops at the first non-improving swap (reverted), a
/// complete coloring, an exhausted budget, or after n swaps.
LocalSearchResult local_search(Evaluator& evaluator, Genotype geno,
                               Decoding decoding, std::int64_t budget, Rng& rng);

}  // namespace decolor

#endif  // DECOLOR_LOCAL_SEARCH_HPP
