#ifndef DECOLOR_GENOTYPE_HPP
#define DECOLOR_GENOTYPE_HPP

#include <vector>

namespace decolor {

/// One DE individual: a weight per vertex plus its self-adapted control
/// parameters and their mutation strengths.
struct Genotype {
  std::vector<double> weights;
  double scale = 0.5;           // F, kept in [0.1, 1.0]
  double scale_sigma = 1.0;     // mutation strength of F, >= eps0
  double crossover = 0.5;       // CR, kept in [0.0, 1.0]
  double crossover_sigma = 1.0; // mutation strength of CR, >= eps0

  friend bool operator==(const Genotype&, const Genotype&) = default;
};

}  // namespace decolor

#endif  // DECOLOR_GENOTYPE_HPP
