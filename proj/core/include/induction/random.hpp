#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace induction {

/// Seeded 64-bit generator used by every simulation. Conversions to doubles
/// are done here rather than through <random> distributions, whose output
/// is implementation-defined, so runs are reproducible across toolchains.
class Rng {
public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// True with probability p; p = 0 never fires, p = 1 always does.
  bool bernoulli(double p) noexcept { return uniform() < p; }

  std::uint64_t next() noexcept { return engine_(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace induction
