#pragma once

#include <induction/evidence.hpp>

namespace induction {

/// Width-`width` window carrying the most posterior mass.
struct WindowResult {
  ProbInterval interval;
  double confidence;
};

/// Result of maximizing (1 - d) * c*(d) over window widths d.
struct ConfirmationReport {
  Evidence evidence;
  double best_width;
  ProbInterval best_interval;
  double best_confidence;
  double degree;
};

// Search tolerances. Left endpoints are located to kWindowTolerance; the
// outer width search scans kWidthGridPoints widths then refines the best
// cell to kWidthTolerance.
inline constexpr double kWindowTolerance = 1e-10;
inline constexpr int kWidthGridPoints = 1024;
inline constexpr double kWidthTolerance = 1e-10;

/// Finds [a, a + width] of maximal posterior mass. For trials >= 1 the
/// window always contains the mode occurrences / trials. Among windows of
/// equal mass the one with the smaller left endpoint wins, so the uniform
/// posterior (trials == 0) yields [0, width].
WindowResult max_confidence_interval(const Evidence& evidence, double width);

/// Degree of confirmation C = max_d (1 - d) * c*(d).
ConfirmationReport degree_of_confirmation(const Evidence& evidence);

/// Closed form of the degree of confirmation for n successes in n trials:
/// (n+2)^(-1/(n+1)) * (n+1)/(n+2).
double all_success_confirmation(Count n);

/// Optimal width for all-success evidence: 1 - (n+2)^(-1/(n+1)).
double all_success_best_width(Count n);

}  // namespace induction
