#include <induction/succession.hpp>

#include <algorithm>
#include <string>

#include <induction/errors.hpp>
#include <induction/random.hpp>

namespace induction {

double bayes_posterior(double likelihood, double prior, double marginal) {
  require_probability(likelihood, "likelihood");
  require_probability(prior, "prior");
  require_probability(marginal, "marginal");
  if (marginal == 0.0) throw DomainError("conditional on an event of probability zero is undefined");
  const double joint = likelihood * prior;
  // Relative slack absorbs the rounding of the product.
  if (joint > marginal * (1.0 + 1e-12)) {
    throw DomainError("inconsistent inputs: likelihood * prior exceeds the marginal");
  }
  return std::min(1.0, joint / marginal);
}

SuccessionEstimate rule_of_succession(const Evidence& evidence) {
  const double p = (static_cast<double>(evidence.occurrences()) + 1.0) /
                   (static_cast<double>(evidence.trials()) + 2.0);
  return {evidence, p};
}

UrnSimulation succession_monte_carlo(const Evidence& evidence, Count samples, std::uint64_t seed) {
  if (samples == 0) throw DomainError("samples must be at least 1");
  if (evidence.trials() > kMaxUrnTrials) {
    throw DomainError("rejection sampling supports at most " + std::to_string(kMaxUrnTrials) +
                      " trials");
  }

  Rng rng(seed);
  const Count want_successes = evidence.occurrences();
  const Count want_failures = evidence.failures();
  Count accepted = 0;
  Count next_successes = 0;
  for (Count attempt = 0; attempt < samples; ++attempt) {
    const double p = rng.uniform();
    Count successes = 0;
    Count failures = 0;
    // Abandon the run as soon as it can no longer match the evidence.
    while (successes + failures < evidence.trials() && successes <= want_successes &&
           failures <= want_failures) {
      if (rng.bernoulli(p)) {
        ++successes;
      } else {
        ++failures;
      }
    }
    if (successes != want_successes || failures != want_failures) continue;
    ++accepted;
    if (rng.bernoulli(p)) ++next_successes;
  }

  if (accepted == 0) {
    throw InsufficientAcceptance("no run matched the evidence after " + std::to_string(samples) +
                                 " attempts");
  }
  return {evidence,
          static_cast<double>(next_successes) / static_cast<double>(accepted),
          samples,
          accepted,
          next_successes,
          seed,
          std::string(Rng::kAlgorithm)};
}

}  // namespace induction
