#pragma once

#include <cstddef>
#include <vector>

#include "ccopt/random.hpp"

namespace ccopt {

/// Maps the dimension-relative inheritance parameter alpha to a crossover
/// rate: Cr = 2^(-1/(dim*alpha)). Larger alpha -> longer inherited blocks.
double cr_from_alpha(double alpha, std::size_t dim);

/// Number of consecutive genes an exponential crossover copies, drawn with a
/// single uniform: L = min(dim, 1 + floor(log(1-u)/log(Cr))). Equivalent in
/// distribution to the trial-by-trial coin-flip loop but O(1).
std::size_t exp_xover_length(double cr, std::size_t dim, RandomSource& rng);

/// Exponential crossover: copies a cyclic block of `length` genes from donor
/// into a copy of base, starting at `start`.
std::vector<double> exp_crossover(const std::vector<double>& base,
                                  const std::vector<double>& donor, std::size_t start,
                                  std::size_t length);

/// Re-sampled inheritance recombination: overlays a random cyclic block of
/// elite genes onto the fresh point. Start index is drawn first, then the
/// block length.
std::vector<double> ri_recombine(const std::vector<double>& fresh,
                                 const std::vector<double>& elite, double cr,
                                 RandomSource& rng);

}  // namespace ccopt
