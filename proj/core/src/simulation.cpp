#include <induction/simulation.hpp>

#include <algorithm>
#include <string>
#include <utility>

#include <induction/errors.hpp>
#include <induction/posterior.hpp>
#include <induction/random.hpp>

namespace induction {
namespace {

class TrajectoryRecorder {
public:
  TrajectoryRecorder(Count total, Count stride, std::uint64_t seed, std::string label)
      : total_(total), stride_(stride) {
    trajectory_.outcomes_retained = total <= kMaxStoredOutcomes;
    if (trajectory_.outcomes_retained) trajectory_.outcomes.reserve(total);
    trajectory_.checkpoints.reserve(total / stride + 1);
    trajectory_.generator_seed = seed;
    trajectory_.generator = std::string(Rng::kAlgorithm);
    trajectory_.process_label = std::move(label);
  }

  // Returns the running frequency after recording the outcome.
  double record(bool success) {
    ++n_;
    if (success) ++successes_;
    if (trajectory_.outcomes_retained) trajectory_.outcomes.push_back(success ? 1 : 0);
    const double ratio = static_cast<double>(successes_) / static_cast<double>(n_);
    if (n_ % stride_ == 0 || n_ == total_) trajectory_.checkpoints.push_back({n_, successes_, ratio});
    return ratio;
  }

  [[nodiscard]] Count n() const { return n_; }

  TrialTrajectory finish() && {
    if (trajectory_.checkpoints.empty() || trajectory_.checkpoints.back().n != n_) {
      trajectory_.checkpoints.push_back(
          {n_, successes_, static_cast<double>(successes_) / static_cast<double>(n_)});
    }
    return std::move(trajectory_);
  }

private:
  Count total_;
  Count stride_;
  Count n_ = 0;
  Count successes_ = 0;
  TrialTrajectory trajectory_;
};

void require_positive(Count value, const char* name) {
  if (value == 0) throw DomainError(std::string(name) + " must be at least 1");
}

}  // namespace

TrialTrajectory simulate_bernoulli(double p, Count n, std::uint64_t seed, Count stride) {
  require_probability(p, "p");
  require_positive(n, "n");
  require_positive(stride, "stride");

  Rng rng(seed);
  TrajectoryRecorder recorder(n, stride, seed, "bernoulli(p=" + std::to_string(p) + ")");
  for (Count i = 0; i < n; ++i) recorder.record(rng.bernoulli(p));
  return std::move(recorder).finish();
}

std::vector<LlnPoint> lln_confidence_trajectory(const TrialTrajectory& trajectory,
                                                double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
  std::vector<LlnPoint> points;
  points.reserve(trajectory.checkpoints.size());
  for (const Checkpoint& cp : trajectory.checkpoints) {
    if (cp.n == 0) continue;
    const ProbInterval band(std::max(0.0, cp.ratio - epsilon), std::min(1.0, cp.ratio + epsilon));
    const double c = confidence_on_interval(Evidence(cp.n, cp.successes), band).confidence;
    points.push_back({cp.n, cp.ratio, c});
  }
  return points;
}

void DemonConfig::validate() const {
  require_probability(p_high, "p_high");
  require_probability(p_low, "p_low");
  require_probability(upper_threshold, "upper_threshold");
  require_probability(lower_threshold, "lower_threshold");
  require_probability(p_initial, "p_initial");
  if (!(p_low < lower_threshold && lower_threshold < upper_threshold &&
        upper_threshold < p_high)) {
    throw DomainError("demon config requires p_low < lower_threshold < upper_threshold < p_high");
  }
}

const char* to_string(CycleDirection direction) noexcept {
  return direction == CycleDirection::rising ? "rising" : "falling";
}

DemonRun simulate_demon(const DemonConfig& config, Count max_trials, std::uint64_t seed,
                        Count stride) {
  config.validate();
  require_positive(max_trials, "max_trials");
  require_positive(stride, "stride");

  enum class Phase { warmup, raising, lowering };

  Rng rng(seed);
  TrajectoryRecorder recorder(max_trials, stride, seed, "demon");
  std::vector<CycleRecord> cycles;
  Phase phase = config.warmup_trials > 0 ? Phase::warmup : Phase::raising;
  double p = config.warmup_trials > 0 ? config.p_initial : config.p_high;
  Count cycle_start = 0;

  auto close_cycle = [&](CycleDirection direction) {
    const Count end = recorder.n();
    cycles.push_back({static_cast<Count>(cycles.size()), cycle_start, end, direction});
    cycle_start = end;
    if (direction == CycleDirection::rising) {
      phase = Phase::lowering;
      p = config.p_low;
    } else {
      phase = Phase::raising;
      p = config.p_high;
    }
  };

  for (Count i = 0; i < max_trials; ++i) {
    const double ratio = recorder.record(rng.bernoulli(p));
    if (phase == Phase::warmup) {
      if (recorder.n() == config.warmup_trials) {
        phase = Phase::raising;
        p = config.p_high;
      }
      continue;
    }
    if (phase == Phase::raising && ratio >= config.upper_threshold) {
      close_cycle(CycleDirection::rising);
    } else if (phase == Phase::lowering && ratio <= config.lower_threshold) {
      close_cycle(CycleDirection::falling);
    }
  }
  return {std::move(recorder).finish(), std::move(cycles)};
}

std::vector<CycleGrowth> analyze_cycles(const std::vector<CycleRecord>& cycles) {
  std::vector<CycleGrowth> out;
  out.reserve(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    CycleGrowth g{cycles[i].index, cycles[i].length(), std::nullopt};
    if (i > 0) {
      g.growth_ratio =
          static_cast<double>(g.length) / static_cast<double>(cycles[i - 1].length());
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace induction
