#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccopt/engine.hpp"
#include "ccopt/objective.hpp"
#include "ccopt/problem.hpp"
#include "ccopt/random.hpp"

namespace ccopt {

enum class WrapperMode { none, ri, random_restart, random_walk };

struct WrapperConfig {
    WrapperMode mode = WrapperMode::none;
    /// Fraction of the total budget given to the engine between restarts.
    double epoch_fraction = 0.25;
    /// Inheritance fraction alpha; the restart crossover rate is
    /// cr_from_alpha(ri_alpha, D).
    double ri_alpha = 0.05;

    void validate() const;
};

/// Everything one optimization run produces.
struct RunResult {
    Candidate best;                 // best solution found, normalized coords
    std::vector<TracePoint> trace;  // improvement staircase over evaluations
    std::uint64_t evaluations = 0;  // instrumented objective-call count
    int epochs = 0;                 // engine epochs executed (0 for RW)
};

/// Engine alone on the full budget.
RunResult run_bare(const EngineConfig& engine_config, const Problem& problem,
                   std::uint64_t total_budget, RandomSource& rng);

/// Re-sampled inheritance: epochs of epoch_fraction * budget, each started
/// from a restart point that inherits a block of the best-so-far solution;
/// the engine's model is re-centered on that point every epoch.
RunResult run_with_ri(const EngineConfig& engine_config, const Problem& problem,
                      std::uint64_t total_budget, const WrapperConfig& wrapper_config,
                      RandomSource& rng);

/// Same epoch structure, but restarts are plain uniform points.
RunResult run_with_random_restart(const EngineConfig& engine_config, const Problem& problem,
                                  std::uint64_t total_budget,
                                  const WrapperConfig& wrapper_config, RandomSource& rng);

/// Baseline: budget independent uniform samples, keeping the best.
RunResult run_random_walk(const Problem& problem, std::uint64_t total_budget, RandomSource& rng);

/// Dispatches on wrapper_config.mode (engine_config is ignored for
/// random_walk).
RunResult run_algorithm(const EngineConfig& engine_config, const Problem& problem,
                        std::uint64_t total_budget, const WrapperConfig& wrapper_config,
                        RandomSource& rng);

}  // namespace ccopt
