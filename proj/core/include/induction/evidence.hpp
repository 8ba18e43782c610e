#pragma once

#include <cstdint>

namespace induction {

using Count = std::uint64_t;

/// Observation record: the event occurred `occurrences` times in `trials`
/// independent trials. Zero trials is legal and means "no observations".
class Evidence {
public:
  /// Throws DomainError unless occurrences <= trials.
  Evidence(Count trials, Count occurrences);

  [[nodiscard]] Count trials() const noexcept { return trials_; }
  [[nodiscard]] Count occurrences() const noexcept { return occurrences_; }
  [[nodiscard]] Count failures() const noexcept { return trials_ - occurrences_; }
  [[nodiscard]] bool empty() const noexcept { return trials_ == 0; }
  [[nodiscard]] bool all_success() const noexcept { return occurrences_ == trials_; }

  /// The same record with successes and failures exchanged.
  [[nodiscard]] Evidence mirrored() const noexcept { return Evidence(trials_, failures()); }

  friend bool operator==(const Evidence&, const Evidence&) = default;

private:
  Count trials_;
  Count occurrences_;
};

/// Closed sub-interval [lo, hi] of [0, 1].
class ProbInterval {
public:
  /// Throws DomainError unless 0 <= lo <= hi <= 1.
  ProbInterval(double lo, double hi);

  static ProbInterval unit() noexcept;

  [[nodiscard]] double lo() const noexcept { return lo_; }
  [[nodiscard]] double hi() const noexcept { return hi_; }
  [[nodiscard]] double width() const noexcept { return hi_ - lo_; }
  [[nodiscard]] bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  [[nodiscard]] bool is_unit() const noexcept { return lo_ == 0.0 && hi_ == 1.0; }

  friend bool operator==(const ProbInterval&, const ProbInterval&) = default;

private:
  double lo_;
  double hi_;
};

/// Throws DomainError unless 0 <= p <= 1 (NaN is rejected).
double require_probability(double p, const char* name);

}  // namespace induction
