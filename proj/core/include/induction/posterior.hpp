#pragma once

#include <induction/evidence.hpp>

namespace induction {

/// Posterior mass placed on an interval by Bernoulli evidence under a
/// uniform prior on the success probability.
struct ConfidenceReport {
  Evidence evidence;
  ProbInterval interval;
  double confidence;
};

/// Maximum-likelihood estimate occurrences / trials.
/// Throws DomainError("no observations") when trials == 0.
double mle_estimate(const Evidence& evidence);

/// Log of the normalized posterior density
///   x^k (1-x)^(n-k) / B(k+1, n-k+1)
/// Returns -infinity where the kernel vanishes (x = 0 with k > 0, x = 1 with
/// k < n). Throws DomainError for x outside [0, 1].
double posterior_log_density(const Evidence& evidence, double x);

/// Posterior CDF, I_x(k+1, n-k+1).
double posterior_cdf(const Evidence& evidence, double x);

/// Posterior survival function 1 - posterior_cdf, evaluated without
/// cancellation in the upper tail.
double posterior_sf(const Evidence& evidence, double x);

/// Posterior probability that the success probability lies in `interval`.
ConfidenceReport confidence_on_interval(const Evidence& evidence, const ProbInterval& interval);

/// Closed form 1 - lo^(n+1) for n successes out of n trials on [lo, 1].
double all_success_confidence(Count n, double lo);

}  // namespace induction
