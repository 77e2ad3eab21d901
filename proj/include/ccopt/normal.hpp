#pragma once

#include "ccopt/random.hpp"

namespace ccopt {

/// Inverse of the standard normal CDF. Rational approximation refined by one
/// Halley step, relative error well below 1e-9 over (0, 1).
double normal_quantile(double p);

/// Inverse error function, valid on (-1, 1); returns +/-infinity at the ends.
double inverse_erf(double t);

/// Standard normal CDF.
double normal_cdf(double z);

/// One draw from a Gaussian(mu, sigma) truncated and renormalized to [-1, 1],
/// by exact inverse-CDF sampling (rejection-free). The result is clamped
/// against floating-point spill, so it always lies in [-1, 1].
///
/// Sampling mirrors the sign of mu through the positive branch, so two
/// streams fed identical uniforms produce exact negations under mu -> -mu.
double sample_truncated_normal(double mu, double sigma, RandomSource& rng);

}  // namespace ccopt
