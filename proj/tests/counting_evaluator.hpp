#ifndef DECOLOR_TESTS_COUNTING_EVALUATOR_HPP
#define DECOLOR_TESTS_COUNTING_EVALUATOR_HPP

#include <cstdint>

#include "decolor/decode.hpp"

// Counts every decode-and-score call that reaches the decoder.
class CountingEvaluator : public decolor::Evaluator {
 public:
  using decolor::Evaluator::Evaluator;

  decolor::Decoding evaluate(std::span<const double> weights) override {
    ++calls;
    return decolor::Evaluator::evaluate(weights);
  }

  std::int64_t calls = 0;
};

#endif  // DECOLOR_TESTS_COUNTING_EVALUATOR_HPP
