#include "ccopt/pv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ccopt/normal.hpp"

namespace ccopt {

ProbabilityVector init_pv(std::size_t dim, double lambda, int virtual_population,
                          double sigma_floor) {
    if (dim == 0) {
        throw std::invalid_argument("init_pv: dimension must be positive");
    }
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("init_pv: lambda must be positive");
    }
    if (virtual_population <= 0) {
        throw std::invalid_argument("init_pv: virtual population must be positive");
    }
    if (!(sigma_floor > 0.0)) {
        throw std::invalid_argument("init_pv: sigma floor must be positive");
    }
    ProbabilityVector pv;
    pv.mu.assign(dim, 0.0);
    pv.sigma.assign(dim, lambda);
    pv.virtual_population = virtual_population;
    pv.sigma_floor = sigma_floor;
    return pv;
}

Candidate sample_pv(const ProbabilityVector& pv, RandomSource& rng) {
    Candidate c;
    sample_pv_into(pv, 1.0, rng, c.coords);
    return c;
}

void sample_pv_into(const ProbabilityVector& pv, double sigma_scale, RandomSource& rng,
                    std::vector<double>& out) {
    const std::size_t d = pv.dim();
    out.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = sample_truncated_normal(pv.mu[i], sigma_scale * pv.sigma[i], rng);
    }
}

void update_pv(ProbabilityVector& pv, const Candidate& winner, const Candidate& loser) {
    const std::size_t d = pv.dim();
    if (winner.coords.size() != d || loser.coords.size() != d) {
        throw std::invalid_argument("update_pv: dimension mismatch");
    }
    const double inv_np = 1.0 / static_cast<double>(pv.virtual_population);
    const double floor_sq = pv.sigma_floor * pv.sigma_floor;
    for (std::size_t i = 0; i < d; ++i) {
        const double w = winner.coords[i];
        const double l = loser.coords[i];
        if (w == l) {
            continue;  // comparison carries no information on this axis
        }
        const double mu_old = pv.mu[i];
        const double mu_raw = mu_old + (w - l) * inv_np;
        const double mu_new = pv.clamp_mu ? std::clamp(mu_raw, -1.0, 1.0) : mu_raw;
        const double var = pv.sigma[i] * pv.sigma[i] + mu_old * mu_old - mu_new * mu_new +
                           (w * w - l * l) * inv_np;
        pv.mu[i] = mu_new;
        pv.sigma[i] = std::sqrt(std::max(floor_sq, var));
    }
}

}  // namespace ccopt
