#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <induction/evidence.hpp>

namespace induction {

struct Checkpoint {
  Count n;
  Count successes;
  double ratio;  // successes / n
};

/// Record of one simulated Bernoulli process. Outcomes are kept only when
/// the run has at most kMaxStoredOutcomes trials; checkpoints always are.
struct TrialTrajectory {
  std::vector<std::uint8_t> outcomes;
  bool outcomes_retained = true;
  std::vector<Checkpoint> checkpoints;
  std::uint64_t generator_seed = 0;
  std::string generator;
  std::string process_label;

  [[nodiscard]] const Checkpoint& final_checkpoint() const { return checkpoints.back(); }
};

inline constexpr Count kMaxStoredOutcomes = 10'000'000;

/// n i.i.d. Bernoulli(p) trials; checkpoints every `stride` trials and at n.
TrialTrajectory simulate_bernoulli(double p, Count n, std::uint64_t seed, Count stride);

struct LlnPoint {
  Count n;
  double ratio;
  double confidence;
};

/// Posterior confidence on [ratio - epsilon, ratio + epsilon] (clamped to
/// [0, 1]) at every checkpoint. Requires 0 < epsilon < 1.
std::vector<LlnPoint> lln_confidence_trajectory(const TrialTrajectory& trajectory, double epsilon);

/// Regime parameters for the oscillating adversary. The coin flips at
/// p_initial for warmup_trials trials without interference, then at p_high
/// until the running frequency reaches upper_threshold, then at p_low until
/// it falls to lower_threshold, and so on.
struct DemonConfig {
  double p_high = 0.6;
  double p_low = 0.4;
  double upper_threshold = 0.55;
  double lower_threshold = 0.45;
  double p_initial = 0.5;
  Count warmup_trials = 100;

  /// Throws DomainError unless all values are probabilities and
  /// p_low < lower_threshold < upper_threshold < p_high.
  void validate() const;
};

enum class CycleDirection { rising, falling };

const char* to_string(CycleDirection direction) noexcept;

/// Half-cycle (start_n, end_n]: a rising cycle ends at the first trial where
/// the running frequency is >= upper_threshold, a falling one where it is
/// <= lower_threshold. No crossing is recognised during the warmup; the first
/// cycle is rising, starts at 0 and includes the warmup.
struct CycleRecord {
  Count index;
  Count start_n;
  Count end_n;
  CycleDirection direction;

  [[nodiscard]] Count length() const noexcept { return end_n - start_n; }
};

struct DemonRun {
  TrialTrajectory trajectory;
  std::vector<CycleRecord> cycles;
};

DemonRun simulate_demon(const DemonConfig& config, Count max_trials, std::uint64_t seed,
                        Count stride = 1000);

struct CycleGrowth {
  Count index;
  Count length;
  std::optional<double> growth_ratio;  // absent for the first cycle
};

std::vector<CycleGrowth> analyze_cycles(const std::vector<CycleRecord>& cycles);

}  // namespace induction
