#include "ccopt/wrapper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ccopt/budget.hpp"
#include "ccopt/crossover.hpp"

namespace ccopt {
namespace {

void fill_uniform(std::vector<double>& x, RandomSource& rng) {
    for (double& v : x) {
        v = rng.next_symmetric();
    }
}

RunResult finish(const BestTracker& tracker, const Evaluator& eval, int epochs) {
    RunResult result;
    result.best = tracker.best();
    result.trace = tracker.trace();
    result.evaluations = eval.calls();
    result.epochs = epochs;
    return result;
}

RunResult run_restart_loop(const EngineConfig& engine_config, const Problem& problem,
                           std::uint64_t total_budget, const WrapperConfig& wrapper_config,
                           RandomSource& rng, bool inherit) {
    wrapper_config.validate();
    BudgetCounter run_budget(total_budget);
    BestTracker tracker;
    Evaluator eval(problem, run_budget, &tracker);
    const std::size_t d = problem.dim;

    // First restart point is plain uniform; later ones come out of the
    // restart rule below.
    Candidate x;
    x.coords.resize(d);
    fill_uniform(x.coords, rng);
    eval.evaluate(x);
    Candidate x_best = x;

    const double cr = inherit ? cr_from_alpha(wrapper_config.ri_alpha, d) : 0.0;
    const std::uint64_t epoch_budget = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(wrapper_config.epoch_fraction *
                                      static_cast<double>(total_budget)));
    auto engine = make_engine(engine_config, d);
    std::vector<double> x_rand(d);
    int epochs = 0;

    while (run_budget.remaining() > 0) {
        // The engine runs on a slice chained to the run counter; a short
        // final slice simply uses whatever remains.
        BudgetCounter epoch(std::min(epoch_budget, run_budget.remaining()), &run_budget);
        eval.set_budget(epoch);
        engine->init(eval, rng, &x.coords, x.fitness);
        while (eval.remaining() > 0) {
            engine->step(eval, rng);
        }
        eval.set_budget(run_budget);
        ++epochs;
        if (engine->elite().fitness < x_best.fitness) {
            x_best = engine->elite();
        }
        if (run_budget.remaining() == 0) {
            break;
        }
        fill_uniform(x_rand, rng);
        if (inherit) {
            x.coords = ri_recombine(x_rand, x_best.coords, cr, rng);
        } else {
            x.coords = x_rand;
        }
        eval.evaluate(x);
        if (x.fitness < x_best.fitness) {
            x_best = x;
        }
    }
    return finish(tracker, eval, epochs);
}

}  // namespace

void WrapperConfig::validate() const {
    if (!(epoch_fraction > 0.0) || epoch_fraction > 1.0) {
        throw std::invalid_argument("WrapperConfig: epoch_fraction must be in (0, 1]");
    }
    if (!(ri_alpha > 0.0) || ri_alpha > 1.0) {
        throw std::invalid_argument("WrapperConfig: ri_alpha must be in (0, 1]");
    }
}

RunResult run_bare(const EngineConfig& engine_config, const Problem& problem,
                   std::uint64_t total_budget, RandomSource& rng) {
    BudgetCounter run_budget(total_budget);
    BestTracker tracker;
    Evaluator eval(problem, run_budget, &tracker);
    auto engine = make_engine(engine_config, problem.dim);
    engine->init(eval, rng);
    while (eval.remaining() > 0) {
        engine->step(eval, rng);
    }
    return finish(tracker, eval, 1);
}

RunResult run_with_ri(const EngineConfig& engine_config, const Problem& problem,
                      std::uint64_t total_budget, const WrapperConfig& wrapper_config,
                      RandomSource& rng) {
    return run_restart_loop(engine_config, problem, total_budget, wrapper_config, rng, true);
}

RunResult run_with_random_restart(const EngineConfig& engine_config, const Problem& problem,
                                  std::uint64_t total_budget,
                                  const WrapperConfig& wrapper_config, RandomSource& rng) {
    return run_restart_loop(engine_config, problem, total_budget, wrapper_config, rng, false);
}

RunResult run_random_walk(const Problem& problem, std::uint64_t total_budget,
                          RandomSource& rng) {
    BudgetCounter run_budget(total_budget);
    BestTracker tracker;
    Evaluator eval(problem, run_budget, &tracker);
    Candidate c;
    c.coords.resize(problem.dim);
    while (run_budget.remaining() > 0) {
        fill_uniform(c.coords, rng);
        eval.evaluate(c);
    }
    return finish(tracker, eval, 0);
}

RunResult run_algorithm(const EngineConfig& engine_config, const Problem& problem,
                        std::uint64_t total_budget, const WrapperConfig& wrapper_config,
                        RandomSource& rng) {
    switch (wrapper_config.mode) {
        case WrapperMode::none:
            return run_bare(engine_config, problem, total_budget, rng);
        case WrapperMode::ri:
            return run_with_ri(engine_config, problem, total_budget, wrapper_config, rng);
        case WrapperMode::random_restart:
            return run_with_random_restart(engine_config, problem, total_budget,
                                           wrapper_config, rng);
        case WrapperMode::random_walk:
            return run_random_walk(problem, total_budget, rng);
    }
    throw std::invalid_argument("run_algorithm: unknown wrapper mode");
}

}  // namespace ccopt
