#include "ccopt/normal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ccopt {

namespace {

// Acklam's rational approximation of the normal quantile (|rel err| ~ 1.15e-9
// before refinement).
constexpr double kA[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                          -2.759285104469687e+02, 1.383577518672690e+02,
                          -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                          -1.556989798598866e+02, 6.680131188771972e+01,
                          -1.328068155288572e+01};
constexpr double kC[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                          -2.400758277161838e+00, -2.549732539343734e+00,
                          4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                          2.445134137142996e+00, 3.754408661907416e+00};

double quantile_estimate(double p) {
    constexpr double p_low = 0.02425;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
               ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
               ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
    }
    double q = p - 0.5;
    double r = q * q;
    return (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * q /
           (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
}

// Inverse-CDF draw for the positive-mu branch; see sample_truncated_normal.
double truncated_quantile(double mu, double sigma, double u) {
    const double inv = 1.0 / (sigma * std::numbers::sqrt2);
    const double erf_lo = std::erf((-1.0 - mu) * inv);
    const double erf_hi = std::erf((1.0 - mu) * inv);
    if (erf_hi <= erf_lo) {
        // interval collapsed in floating point (mu far outside with tiny
        // sigma): all mass sits at the nearer wall
        return std::clamp(mu, -1.0, 1.0);
    }
    const double t = (1.0 - u) * erf_lo + u * erf_hi;
    return mu + sigma * std::numbers::sqrt2 * inverse_erf(t);
}

}  // namespace

double normal_quantile(double p) {
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    if (p >= 1.0) return std::numeric_limits<double>::infinity();
    double x = quantile_estimate(p);
    // One Halley step against the exact CDF.
    if (std::abs(x) < 37.0) {
        static const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
        double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
        double u = e * sqrt_2pi * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

double inverse_erf(double t) {
    if (t <= -1.0) return -std::numeric_limits<double>::infinity();
    if (t >= 1.0) return std::numeric_limits<double>::infinity();
    return normal_quantile(0.5 * (t + 1.0)) / std::numbers::sqrt2;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double sample_truncated_normal(double mu, double sigma, RandomSource& rng) {
    const double u = rng.next_double();
    const double x =
        mu < 0.0 ? -truncated_quantile(-mu, sigma, u) : truncated_quantile(mu, sigma, u);
    return std::clamp(x, -1.0, 1.0);
}

}  // namespace ccopt
