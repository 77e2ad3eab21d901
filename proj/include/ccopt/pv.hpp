#pragma once

#include <cstddef>
#include <vector>

#include "ccopt/candidate.hpp"
#include "ccopt/random.hpp"

namespace ccopt {

/// Default floor keeping every per-dimension sigma strictly positive.
inline constexpr double kDefaultSigmaFloor = 1e-6;

/// The probabilistic model a compact algorithm evolves instead of a
/// population: one truncated Gaussian per dimension over [-1,1], plus the
/// virtual population size Np that scales every update step.
struct ProbabilityVector {
    std::vector<double> mu;
    std::vector<double> sigma;
    int virtual_population = 300;
    double sigma_floor = kDefaultSigmaFloor;
    /// When true (default) mu is kept inside the normalized box [-1,1] by the
    /// update; when false mu may wander outside while sampling still
    /// truncates to the box.
    bool clamp_mu = true;

    std::size_t dim() const { return mu.size(); }
};

/// Fresh model: mu = 0, sigma = lambda (lambda large enough to emulate a
/// uniform distribution over the normalized cube).
ProbabilityVector init_pv(std::size_t dim, double lambda, int virtual_population = 300,
                          double sigma_floor = kDefaultSigmaFloor);

/// Draws one unevaluated candidate, each coordinate from its truncated
/// Gaussian.
Candidate sample_pv(const ProbabilityVector& pv, RandomSource& rng);

/// Allocation-free variant; sigma_scale inflates every sigma (used by the
/// single-draw DE mutant).
void sample_pv_into(const ProbabilityVector& pv, double sigma_scale, RandomSource& rng,
                    std::vector<double>& out);

/// Moves mu toward the winner and reshapes sigma so the model's second moment
/// tracks the comparison outcome:
///   mu'    = mu + (winner - loser)/Np, clamped to [-1,1]
///   sigma' = sqrt(max(floor^2, sigma^2 + mu^2 - mu'^2 + (winner^2 - loser^2)/Np))
/// The caller guarantees winner.fitness <= loser.fitness. Identical
/// winner/loser coordinates leave the model unchanged.
void update_pv(ProbabilityVector& pv, const Candidate& winner, const Candidate& loser);

}  // namespace ccopt
