#include "ccopt/crossover.hpp"

#include <cmath>
#include <stdexcept>

namespace ccopt {

double cr_from_alpha(double alpha, std::size_t dim) {
    const double exponent_scale = alpha * static_cast<double>(dim);
    if (!(exponent_scale > 0.0)) {
        throw std::invalid_argument("cr_from_alpha: alpha * dim must be positive");
    }
    return std::pow(2.0, -1.0 / exponent_scale);
}

std::size_t exp_xover_length(double cr, std::size_t dim, RandomSource& rng) {
    if (dim == 0) {
        throw std::invalid_argument("exp_xover_length: dimension must be positive");
    }
    if (cr < 0.0) {
        throw std::invalid_argument("exp_xover_length: crossover rate must be non-negative");
    }
    if (cr >= 1.0) {
        return dim;  // every coin flip succeeds
    }
    if (cr == 0.0) {
        return 1;  // only the guaranteed first gene
    }
    const double u = rng.next_double();
    // Geometric tail: P(L > k) = Cr^k for k = 0..dim-1.
    const double extra = std::floor(std::log1p(-u) / std::log(cr));
    const double len = 1.0 + extra;
    if (len >= static_cast<double>(dim)) {
        return dim;
    }
    return static_cast<std::size_t>(len);
}

std::vector<double> exp_crossover(const std::vector<double>& base,
                                  const std::vector<double>& donor, std::size_t start,
                                  std::size_t length) {
    const std::size_t d = base.size();
    if (donor.size() != d) {
        throw std::invalid_argument("exp_crossover: dimension mismatch");
    }
    if (d == 0) {
        throw std::invalid_argument("exp_crossover: dimension must be positive");
    }
    if (start >= d) {
        throw std::out_of_range("exp_crossover: start index out of range");
    }
    if (length == 0 || length > d) {
        throw std::invalid_argument("exp_crossover: length must be in [1, dim]");
    }
    std::vector<double> child = base;
    for (std::size_t k = 0; k < length; ++k) {
        const std::size_t idx = (start + k) % d;
        child[idx] = donor[idx];
    }
    return child;
}

std::vector<double> ri_recombine(const std::vector<double>& fresh,
                                 const std::vector<double>& elite, double cr,
                                 RandomSource& rng) {
    const std::size_t d = fresh.size();
    if (elite.size() != d) {
        throw std::invalid_argument("ri_recombine: dimension mismatch");
    }
    if (d == 0) {
        throw std::invalid_argument("ri_recombine: dimension must be positive");
    }
    const std::size_t start = rng.next_index(d);
    const std::size_t length = exp_xover_length(cr, d, rng);
    return exp_crossover(fresh, elite, start, length);
}

}  // namespace ccopt
