#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <induction/evidence.hpp>
#include <induction/simulation.hpp>

#include "cli/output.hpp"

namespace induction::cli {

struct CommonOptions {
  Format format = Format::table;
  std::string output;  // empty: standard output
};

struct ConfidenceOptions {
  CommonOptions common;
  Count trials = 0;
  Count occurrences = 0;
  std::vector<double> interval;
};

struct ConfirmOptions {
  CommonOptions common;
  Count trials = 0;
  Count occurrences = 0;
};

struct SuccessionOptions {
  CommonOptions common;
  Count trials = 0;
  Count occurrences = 0;
  Count samples = 0;  // 0: skip the urn simulation
  std::optional<std::uint64_t> seed;
};

struct ScenarioOptions {
  CommonOptions common;
  std::string name;
  Count max_n = 100;
};

struct LlnOptions {
  CommonOptions common;
  double p = 0.5;
  Count n = 100'000;
  double epsilon = 0.05;
  Count stride = 100;
  std::optional<std::uint64_t> seed;
};

struct DemonOptions {
  CommonOptions common;
  DemonConfig config;
  Count max_trials = 1'000'000;
  Count stride = 1000;
  std::optional<std::uint64_t> seed;
};

inline const std::vector<std::string> kScenarioNames = {"swans", "turkey", "sunrise"};

void run_confidence(const ConfidenceOptions& options, std::ostream& out);
void run_confirm(const ConfirmOptions& options, std::ostream& out);
void run_succession(const SuccessionOptions& options, std::ostream& out);
void run_scenario(const ScenarioOptions& options, std::ostream& out);
void run_simulate_lln(const LlnOptions& options, std::ostream& out);
void run_simulate_demon(const DemonOptions& options, std::ostream& out);

}  // namespace induction::cli
