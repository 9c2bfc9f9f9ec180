#ifndef DECOLOR_RNG_HPP
#define DECOLOR_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>

namespace decolor {

/// Portable random stream.
///
/// The engine is std::mt19937_64, whose output sequence for a given seed is
/// fixed by the C++ standard. The standard distributions are not portable, so
/// every derived quantity is computed here from raw 64-bit outputs:
///
///   uniform()       top 53 bits of one output, scaled to [0, 1)
///   below(k)        rejection sampling on one or more outputs, in [0, k)
///   gaussian()      Box-Muller on two uniform() draws, cosine branch only
///
/// Two streams constructed from the same seed therefore produce identical
/// values on every platform.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, k). k must be positive.
  std::uint64_t below(std::uint64_t k) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % k;
  }

  double gaussian() {
    // 1 - uniform() lies in (0, 1], so the logarithm is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Fisher-Yates shuffle driven by below().
  template <typename Range>
  void shuffle(Range& range) {
    const auto n = static_cast<std::uint64_t>(std::size(range));
    for (std::uint64_t i = n; i > 1; --i) {
      const auto j = below(i);
      using std::swap;
      swap(range[i - 1], range[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace decolor

#endif  // DECOLOR_RNG_HPP
