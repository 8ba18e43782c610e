#include <induction/confirmation.hpp>

#include <algorithm>
#include <cmath>

#include <induction/errors.hpp>
#include <induction/posterior.hpp>

namespace induction {
namespace {

constexpr double kInvPhi = 0.61803398874989484820;  // 1 / golden ratio

struct Probe {
  double x;
  double value;
};

// Keeps the best probe; ties go to the smaller abscissa.
void keep_best(Probe& best, const Probe& candidate) {
  if (candidate.value > best.value || (candidate.value == best.value && candidate.x < best.x)) {
    best = candidate;
  }
}

// Golden-section maximization of a unimodal f on [lo, hi]. The bracket
// endpoints are probed too, so maxima flush against either end are found
// exactly rather than to within the tolerance.
template <typename F>
Probe golden_section_max(F&& f, double lo, double hi, double tol) {
  Probe best{lo, f(lo)};
  if (hi <= lo) return best;
  keep_best(best, {hi, f(hi)});

  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  keep_best(best, {x1, f1});
  keep_best(best, {x2, f2});
  return best;
}

ProbInterval window(double left, double width) {
  return ProbInterval(left, std::min(1.0, left + width));
}

}  // namespace

WindowResult max_confidence_interval(const Evidence& evidence, double width) {
  require_probability(width, "width");
  if (width == 1.0) return {ProbInterval::unit(), 1.0};
  // Every window of the uniform posterior has mass `width`.
  if (evidence.empty()) return {ProbInterval(0.0, width), width};

  // A log-concave posterior's best window covers the mode, so only left
  // endpoints in [mode - width, mode] are searched.
  const double mode = mle_estimate(evidence);
  const double lo = std::max(0.0, mode - width);
  const double hi = std::min(mode, 1.0 - width);

  auto mass = [&](double left) {
    return confidence_on_interval(evidence, window(left, width)).confidence;
  };
  const Probe best = golden_section_max(mass, lo, std::max(lo, hi), kWindowTolerance);
  return {window(best.x, width), best.value};
}

ConfirmationReport degree_of_confirmation(const Evidence& evidence) {
  auto objective = [&](double d) {
    return (1.0 - d) * max_confidence_interval(evidence, d).confidence;
  };

  constexpr int kLast = kWidthGridPoints - 1;
  auto grid_width = [](int i) { return static_cast<double>(i) / kLast; };

  int best_index = 0;
  double best_value = objective(0.0);
  for (int i = 1; i <= kLast; ++i) {
    const double value = objective(grid_width(i));
    if (value > best_value) {
      best_value = value;
      best_index = i;
    }
  }

  Probe best{grid_width(best_index), best_value};
  const double lo = grid_width(std::max(best_index - 1, 0));
  const double hi = grid_width(std::min(best_index + 1, kLast));
  keep_best(best, golden_section_max(objective, lo, hi, kWidthTolerance));

  const WindowResult window = max_confidence_interval(evidence, best.x);
  return {evidence, best.x, window.interval, window.confidence,
          (1.0 - best.x) * window.confidence};
}

double all_success_confirmation(Count n) {
  const double n1 = static_cast<double>(n) + 1.0;
  const double n2 = static_cast<double>(n) + 2.0;
  return std::exp(-std::log(n2) / n1) * (n1 / n2);
}

double all_success_best_width(Count n) {
  const double n1 = static_cast<double>(n) + 1.0;
  const double n2 = static_cast<double>(n) + 2.0;
  return -std::expm1(-std::log(n2) / n1);
}

}  // namespace induction
