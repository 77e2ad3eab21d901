#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "ccopt/candidate.hpp"
#include "ccopt/objective.hpp"
#include "ccopt/pv.hpp"
#include "ccopt/random.hpp"

namespace ccopt {

enum class EngineKind { cde_light, rcga, cpso, cbfo };

const char* engine_name(EngineKind kind);
EngineKind engine_from_name(const std::string& name);

/// Persistent elitism keeps the incumbent until strictly beaten;
/// non-persistent additionally force-refreshes it with the latest candidate
/// every refresh_period steps.
enum class ElitismMode { persistent, non_persistent };

enum class RcgaCrossover { none, binomial };

struct EngineConfig {
    EngineKind kind = EngineKind::cde_light;
    int virtual_population = 300;
    double lambda = 10.0;  // initial sigma
    double sigma_floor = kDefaultSigmaFloor;
    bool clamp_mu = true;  // keep mu inside the normalized box on update
    ElitismMode elitism = ElitismMode::persistent;
    int refresh_period = 0;  // required >= 1 when non-persistent

    // cDE-light
    double f = 0.5;
    double alpha_m = 0.25;

    // rcGA
    RcgaCrossover rcga_crossover = RcgaCrossover::binomial;
    double p_gene = 0.15;  // probability a gene keeps the sampled value

    // cPSO
    double phi1 = 0.2;
    double phi2 = 0.07;
    double phi3 = 3.74;
    double gamma1 = 1.0;
    double gamma2 = 1.0;

    // cBFO
    double ci = 0.1;  // chemotaxis step length
    int ns = 4;       // maximum swims per tumble

    static EngineConfig defaults(EngineKind kind);
    void validate() const;
};

/// Binomial recombination used by rcGA: each gene of x is overwritten by the
/// elite's gene with probability 1 - p_gene, except one uniformly chosen gene
/// that always keeps the sampled value.
void rcga_binomial_inplace(std::vector<double>& x, const std::vector<double>& elite,
                           double p_gene, RandomSource& rng);

/// One component of the cPSO velocity update:
///   v' = phi1*v + phi2*u1*(x_lb - gamma1*x) + phi3*u2*(x_gb - gamma2*x)
double cpso_velocity(const EngineConfig& config, double v, double x, double x_lb, double x_gb,
                     double u1, double u2);

/// Step-wise state machine shared by all four compact algorithms: a
/// probability vector plus an elite, advanced one comparison at a time.
class CompactEngine {
public:
    virtual ~CompactEngine() = default;

    /// Fresh model (sigma = lambda) centered on initial_mu (zeros when
    /// absent); samples and evaluates the starting elite — one budget unit.
    /// Restart wrappers that already evaluated the restart point may pass its
    /// fitness so engines whose extras track a current position (cBFO) can
    /// resume from that point instead of the sampled elite.
    void init(Evaluator& eval, RandomSource& rng, const std::vector<double>* initial_mu = nullptr,
              double initial_mu_fitness = std::numeric_limits<double>::quiet_NaN());

    /// One iteration; consumes at least one budget unit. Requires remaining
    /// budget >= 1.
    virtual void step(Evaluator& eval, RandomSource& rng) = 0;

    const Candidate& elite() const { return elite_; }
    const ProbabilityVector& pv() const { return pv_; }
    std::uint64_t steps() const { return steps_; }

protected:
    CompactEngine(const EngineConfig& config, std::size_t dim);

    /// Engine-specific state reset after (re)initialization.
    virtual void reset_extras() {}

    /// Winner/loser PV update against the elite, then elitism-scheme
    /// replacement. Ties go to the incumbent.
    void compare_with_elite(const Candidate& challenger);

    EngineConfig config_;
    std::size_t dim_;
    ProbabilityVector pv_;
    Candidate elite_;
    Candidate start_point_;             // restart point, valid when has_start_point_
    bool has_start_point_ = false;
    std::uint64_t steps_ = 0;
};

std::unique_ptr<CompactEngine> make_engine(const EngineConfig& config, std::size_t dim);

}  // namespace ccopt
