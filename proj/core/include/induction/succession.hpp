#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <induction/evidence.hpp>

namespace induction {

/// Conditional probability P(h|e) = P(e|h) P(h) / P(e).
/// Throws DomainError if marginal == 0 (undefined conditional) or if
/// likelihood * prior exceeds the marginal (inconsistent inputs).
double bayes_posterior(double likelihood, double prior, double marginal);

struct SuccessionEstimate {
  Evidence evidence;
  double probability_next;
};

/// Laplace's rule (occurrences + 1) / (trials + 2).
SuccessionEstimate rule_of_succession(const Evidence& evidence);

/// Outcome of simulating the urn experiment.
struct UrnSimulation {
  Evidence evidence;
  double probability_next;  // next-trial success frequency among accepted runs
  Count attempts;
  Count accepted;
  Count next_successes;
  std::uint64_t seed;
  std::string generator;

  /// Binomial standard error of `probability_next` around probability q.
  [[nodiscard]] double standard_error(double q) const {
    return std::sqrt(q * (1.0 - q) / static_cast<double>(accepted));
  }
};

/// Largest trial count the rejection sampler accepts.
inline constexpr Count kMaxUrnTrials = 30;

/// Laplace's urn: draw p ~ U(0,1), run `trials` Bernoulli(p) draws, keep the
/// run when the success count matches the evidence, then record whether the
/// following draw succeeds. `samples` counts attempts, not acceptances.
/// Throws DomainError when samples == 0 or trials > kMaxUrnTrials, and
/// InsufficientAcceptance when no attempt is accepted.
UrnSimulation succession_monte_carlo(const Evidence& evidence, Count samples, std::uint64_t seed);

}  // namespace induction
