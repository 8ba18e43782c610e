#include <induction/posterior.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <induction/errors.hpp>
#include <induction/special_functions.hpp>

namespace induction {

Evidence::Evidence(Count trials, Count occurrences) : trials_(trials), occurrences_(occurrences) {
  if (occurrences > trials) {
    throw DomainError("occurrences (" + std::to_string(occurrences) + ") exceed trials (" +
                      std::to_string(trials) + ")");
  }
}

ProbInterval::ProbInterval(double lo, double hi) : lo_(lo), hi_(hi) {
  require_probability(lo, "interval lower bound");
  require_probability(hi, "interval upper bound");
  if (lo > hi) throw DomainError("interval lower bound exceeds upper bound");
}

ProbInterval ProbInterval::unit() noexcept { return ProbInterval(0.0, 1.0); }

double require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
  }
  return p;
}

namespace {

struct Shapes {
  double a;
  double b;
};

Shapes shapes_of(const Evidence& e) {
  return {static_cast<double>(e.occurrences()) + 1.0, static_cast<double>(e.failures()) + 1.0};
}

special::BetaTails tails(const Evidence& e, double x) {
  const auto [a, b] = shapes_of(e);
  return special::incomplete_beta(a, b, x);
}

}  // namespace

double mle_estimate(const Evidence& evidence) {
  if (evidence.empty()) throw DomainError("no observations");
  return static_cast<double>(evidence.occurrences()) / static_cast<double>(evidence.trials());
}

double posterior_log_density(const Evidence& evidence, double x) {
  require_probability(x, "x");
  const auto [a, b] = shapes_of(evidence);
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double log_kernel = 0.0;
  if (evidence.occurrences() > 0) {
    if (x == 0.0) return kNegInf;
    log_kernel += (a - 1.0) * std::log(x);
  }
  if (evidence.failures() > 0) {
    if (x == 1.0) return kNegInf;
    log_kernel += (b - 1.0) * std::log1p(-x);
  }
  return log_kernel - special::log_beta(a, b);
}

double posterior_cdf(const Evidence& evidence, double x) {
  require_probability(x, "x");
  if (evidence.empty()) return x;
  return tails(evidence, x).lower;
}

double posterior_sf(const Evidence& evidence, double x) {
  require_probability(x, "x");
  if (evidence.empty()) return 1.0 - x;
  return tails(evidence, x).upper;
}

ConfidenceReport confidence_on_interval(const Evidence& evidence, const ProbInterval& interval) {
  if (interval.is_unit()) return {evidence, interval, 1.0};
  if (evidence.empty()) return {evidence, interval, interval.hi() - interval.lo()};

  // Subtract whichever tails were evaluated directly so that narrow windows
  // deep in either tail keep their relative accuracy.
  const auto lo = tails(evidence, interval.lo());
  const auto hi = tails(evidence, interval.hi());
  double mass;
  if (lo.lower_direct && hi.lower_direct) {
    mass = hi.lower - lo.lower;
  } else if (!lo.lower_direct && !hi.lower_direct) {
    mass = lo.upper - hi.upper;
  } else {
    mass = 1.0 - lo.lower - hi.upper;
  }
  return {evidence, interval, std::clamp(mass, 0.0, 1.0)};
}

double all_success_confidence(Count n, double lo) {
  require_probability(lo, "lo");
  return -std::expm1(static_cast<double>(n + 1) * std::log(lo));
}

}  // namespace induction
