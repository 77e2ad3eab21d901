#include "ccopt/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ccopt/crossover.hpp"

namespace ccopt {
namespace {

class CdeLightEngine final : public CompactEngine {
public:
    CdeLightEngine(const EngineConfig& config, std::size_t dim)
        : CompactEngine(config, dim),
          cr_(cr_from_alpha(config.alpha_m, dim)),
          sigma_scale_(std::sqrt(1.0 + 2.0 * config.f * config.f)) {}

    void step(Evaluator& eval, RandomSource& rng) override {
        // Single inflated draw stands in for rand/1 mutation; an exponential
        // block of it lands on a copy of the elite.
        sample_pv_into(pv_, sigma_scale_, rng, mutant_);
        const std::size_t start = rng.next_index(dim_);
        const std::size_t length = exp_xover_length(cr_, dim_, rng);
        trial_.coords = elite_.coords;
        for (std::size_t k = 0; k < length; ++k) {
            const std::size_t idx = (start + k) % dim_;
            trial_.coords[idx] = mutant_[idx];
        }
        eval.evaluate(trial_);
        compare_with_elite(trial_);
    }

private:
    double cr_;
    double sigma_scale_;
    std::vector<double> mutant_;
    Candidate trial_;
};

class RcgaEngine final : public CompactEngine {
public:
    RcgaEngine(const EngineConfig& config, std::size_t dim) : CompactEngine(config, dim) {}

    void step(Evaluator& eval, RandomSource& rng) override {
        sample_pv_into(pv_, 1.0, rng, trial_.coords);
        if (config_.rcga_crossover == RcgaCrossover::binomial) {
            rcga_binomial_inplace(trial_.coords, elite_.coords, config_.p_gene, rng);
        }
        eval.evaluate(trial_);
        compare_with_elite(trial_);
    }

private:
    Candidate trial_;
};

class CpsoEngine final : public CompactEngine {
public:
    CpsoEngine(const EngineConfig& config, std::size_t dim) : CompactEngine(config, dim) {}

    void step(Evaluator& eval, RandomSource& rng) override {
        // elite_ doubles as the swarm's global best.
        sample_pv_into(pv_, 1.0, rng, local_);
        for (std::size_t i = 0; i < dim_; ++i) {
            const double u1 = rng.next_double();
            const double u2 = rng.next_double();
            velocity_[i] = cpso_velocity(config_, velocity_[i], position_[i], local_[i],
                                         elite_.coords[i], u1, u2);
            position_[i] = std::clamp(position_[i] + velocity_[i], -1.0, 1.0);
        }
        trial_.coords = position_;
        eval.evaluate(trial_);
        const bool improved = trial_.fitness < elite_.fitness;
        update_pv(pv_, improved ? trial_ : elite_, improved ? elite_ : trial_);
        if (improved) {
            elite_ = trial_;
        }
        ++steps_;
    }

private:
    void reset_extras() override {
        velocity_.assign(dim_, 0.0);
        position_ = elite_.coords;
    }

    std::vector<double> velocity_;
    std::vector<double> position_;
    std::vector<double> local_;
    Candidate trial_;
};

class CbfoEngine final : public CompactEngine {
public:
    CbfoEngine(const EngineConfig& config, std::size_t dim) : CompactEngine(config, dim) {}

    void step(Evaluator& eval, RandomSource& rng) override {
        // Tumble: fixed-length move along a fresh uniform direction, then
        // keep swimming the same way while it pays off. A move that does not
        // improve is abandoned: the bacterium stays put and tumbles anew.
        double norm_sq = 0.0;
        do {
            norm_sq = 0.0;
            for (std::size_t i = 0; i < dim_; ++i) {
                delta_[i] = rng.next_symmetric();
                norm_sq += delta_[i] * delta_[i];
            }
        } while (norm_sq < 1e-24);
        const double scale = config_.ci / std::sqrt(norm_sq);
        int moves = 0;
        while (true) {
            for (std::size_t i = 0; i < dim_; ++i) {
                trial_.coords[i] = std::clamp(position_.coords[i] + scale * delta_[i], -1.0, 1.0);
            }
            eval.evaluate(trial_);
            const bool improved = trial_.fitness < position_.fitness;
            update_pv(pv_, improved ? trial_ : position_, improved ? position_ : trial_);
            if (trial_.fitness < elite_.fitness) {
                elite_ = trial_;
            }
            ++moves;
            if (!improved) {
                break;  // the bacterium stays put and will tumble anew
            }
            position_ = trial_;  // swim: keep moving while it pays off
            if (moves > config_.ns || eval.remaining() == 0) {
                break;
            }
        }
        ++steps_;
    }

private:
    void reset_extras() override {
        // The walk resumes from the restart point when one is known (its
        // fitness travels with it), otherwise from the sampled elite.
        position_ = has_start_point_ ? start_point_ : elite_;
        if (position_.fitness < elite_.fitness) {
            elite_ = position_;
        }
        delta_.resize(dim_);
        trial_.coords.resize(dim_);
    }

    Candidate position_;
    std::vector<double> delta_;
    Candidate trial_;
};

}  // namespace

const char* engine_name(EngineKind kind) {
    switch (kind) {
        case EngineKind::cde_light:
            return "cDE";
        case EngineKind::rcga:
            return "rcGA";
        case EngineKind::cpso:
            return "cPSO";
        case EngineKind::cbfo:
            return "cBFO";
    }
    throw std::invalid_argument("engine_name: unknown engine kind");
}

EngineKind engine_from_name(const std::string& name) {
    for (EngineKind kind :
         {EngineKind::cde_light, EngineKind::rcga, EngineKind::cpso, EngineKind::cbfo}) {
        if (name == engine_name(kind)) {
            return kind;
        }
    }
    throw std::invalid_argument("engine_from_name: unknown engine '" + name + "'");
}

EngineConfig EngineConfig::defaults(EngineKind kind) {
    EngineConfig config;
    config.kind = kind;
    return config;
}

void EngineConfig::validate() const {
    if (virtual_population <= 0) {
        throw std::invalid_argument("EngineConfig: virtual population must be positive");
    }
    if (!(lambda > 0.0) || !(sigma_floor > 0.0)) {
        throw std::invalid_argument("EngineConfig: lambda and sigma floor must be positive");
    }
    if (elitism == ElitismMode::non_persistent) {
        if (kind == EngineKind::cpso || kind == EngineKind::cbfo) {
            throw std::invalid_argument(
                "EngineConfig: cPSO/cBFO track a global best and are inherently persistent");
        }
        if (refresh_period < 1) {
            throw std::invalid_argument(
                "EngineConfig: non-persistent elitism needs refresh_period >= 1");
        }
    }
    switch (kind) {
        case EngineKind::cde_light:
            if (!(f > 0.0)) {
                throw std::invalid_argument("EngineConfig: F must be positive");
            }
            if (!(alpha_m > 0.0) || alpha_m > 1.0) {
                throw std::invalid_argument("EngineConfig: alpha_m must be in (0, 1]");
            }
            break;
        case EngineKind::rcga:
            if (!(p_gene > 0.0) || p_gene > 1.0) {
                throw std::invalid_argument("EngineConfig: p_gene must be in (0, 1]");
            }
            break;
        case EngineKind::cpso:
            if (!(phi1 > 0.0) || !(phi2 > 0.0) || !(phi3 > 0.0) || !(gamma1 > 0.0) ||
                !(gamma2 > 0.0)) {
                throw std::invalid_argument("EngineConfig: cPSO coefficients must be positive");
            }
            break;
        case EngineKind::cbfo:
            if (!(ci > 0.0)) {
                throw std::invalid_argument("EngineConfig: Ci must be positive");
            }
            if (ns < 1) {
                throw std::invalid_argument("EngineConfig: Ns must be at least 1");
            }
            break;
    }
}

void rcga_binomial_inplace(std::vector<double>& x, const std::vector<double>& elite,
                           double p_gene, RandomSource& rng) {
    if (x.size() != elite.size() || x.empty()) {
        throw std::invalid_argument("rcga_binomial_inplace: dimension mismatch");
    }
    const std::size_t forced = rng.next_index(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i == forced) {
            continue;
        }
        if (rng.next_double() >= p_gene) {
            x[i] = elite[i];
        }
    }
}

double cpso_velocity(const EngineConfig& config, double v, double x, double x_lb, double x_gb,
                     double u1, double u2) {
    return config.phi1 * v + config.phi2 * u1 * (x_lb - config.gamma1 * x) +
           config.phi3 * u2 * (x_gb - config.gamma2 * x);
}

CompactEngine::CompactEngine(const EngineConfig& config, std::size_t dim)
    : config_(config), dim_(dim) {
    if (dim == 0) {
        throw std::invalid_argument("CompactEngine: dimension must be positive");
    }
    config_.validate();
}

void CompactEngine::init(Evaluator& eval, RandomSource& rng,
                         const std::vector<double>* initial_mu, double initial_mu_fitness) {
    pv_ = init_pv(dim_, config_.lambda, config_.virtual_population, config_.sigma_floor);
    has_start_point_ = false;
    if (initial_mu != nullptr) {
        if (initial_mu->size() != dim_) {
            throw std::invalid_argument("CompactEngine::init: initial mu dimension mismatch");
        }
        for (double m : *initial_mu) {
            if (m < -1.0 || m > 1.0) {
                throw std::invalid_argument("CompactEngine::init: initial mu outside [-1,1]");
            }
        }
        pv_.mu = *initial_mu;
        if (!std::isnan(initial_mu_fitness)) {
            start_point_.coords = *initial_mu;
            start_point_.fitness = initial_mu_fitness;
            has_start_point_ = true;
        }
    }
    pv_.clamp_mu = config_.clamp_mu;
    elite_ = sample_pv(pv_, rng);
    eval.evaluate(elite_);
    steps_ = 0;
    reset_extras();
}

void CompactEngine::compare_with_elite(const Candidate& challenger) {
    const bool improved = challenger.fitness < elite_.fitness;
    update_pv(pv_, improved ? challenger : elite_, improved ? elite_ : challenger);
    ++steps_;
    const bool refresh = config_.elitism == ElitismMode::non_persistent &&
                         steps_ % static_cast<std::uint64_t>(config_.refresh_period) == 0;
    if (improved || refresh) {
        elite_ = challenger;
    }
}

std::unique_ptr<CompactEngine> make_engine(const EngineConfig& config, std::size_t dim) {
    switch (config.kind) {
        case EngineKind::cde_light:
            return std::make_unique<CdeLightEngine>(config, dim);
        case EngineKind::rcga:
            return std::make_unique<RcgaEngine>(config, dim);
        case EngineKind::cpso:
            return std::make_unique<CpsoEngine>(config, dim);
        case EngineKind::cbfo:
            return std::make_unique<CbfoEngine>(config, dim);
    }
    throw std::invalid_argument("make_engine: unknown engine kind");
}

}  // namespace ccopt
