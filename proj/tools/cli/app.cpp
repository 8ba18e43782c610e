#include "cli/app.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include <induction/errors.hpp>

#include "cli/commands.hpp"
#include "cli/config_file.hpp"
#include "cli/manifest.hpp"

namespace induction::cli {
namespace {

const std::map<std::string, Format> kFormats = {
    {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("table");
  cmd->add_option("--output", common.output, "Write the report to this path");
  // Consumed by merge_config_arguments before parsing.
  cmd->add_option("--config", "key=value file mirroring the flags; flags win");
}

void add_evidence(CLI::App* cmd, Count& trials, Count& occurrences) {
  cmd->add_option("--trials", trials, "Number of trials N")->required();
  cmd->add_option("--occurrences", occurrences, "Number of occurrences N_A")->required();
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bayesian confidence, confirmation and law-of-large-numbers tools", "induction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", artifact_version());

  ConfidenceOptions confidence;
  auto* confidence_cmd = app.add_subcommand("confidence", "Posterior confidence on an interval");
  add_evidence(confidence_cmd, confidence.trials, confidence.occurrences);
  confidence_cmd->add_option("--interval", confidence.interval, "Interval lo,hi")
      ->required()
      ->delimiter(',')
      ->expected(2);
  add_common(confidence_cmd, confidence.common);

  ConfirmOptions confirm;
  auto* confirm_cmd = app.add_subcommand("confirm", "Degree of confirmation and optimal interval");
  add_evidence(confirm_cmd, confirm.trials, confirm.occurrences);
  add_common(confirm_cmd, confirm.common);

  SuccessionOptions succession;
  auto* succession_cmd = app.add_subcommand("succession", "Rule of Succession, optionally simulated");
  add_evidence(succession_cmd, succession.trials, succession.occurrences);
  succession_cmd->add_option("--samples", succession.samples,
                             "Urn-experiment attempts for the Monte-Carlo estimate");
  succession_cmd->add_option("--seed", succession.seed, "Generator seed");
  add_common(succession_cmd, succession.common);

  ScenarioOptions scenario;
  auto* scenario_cmd = app.add_subcommand("scenario", "Preset swans / turkey / sunrise examples");
  scenario_cmd->add_option("name", scenario.name, "Scenario name")
      ->required()
      ->check(CLI::IsMember(kScenarioNames));
  scenario_cmd->add_option("--max-n", scenario.max_n, "Largest N in the swans curve")
      ->capture_default_str();
  add_common(scenario_cmd, scenario.common);

  auto* simulate_cmd = app.add_subcommand("simulate", "Bernoulli and demon process simulations");
  simulate_cmd->require_subcommand(1);

  LlnOptions lln;
  auto* lln_cmd = simulate_cmd->add_subcommand("lln", "Constant-probability coin");
  lln_cmd->add_option("--p", lln.p, "Success probability")->capture_default_str();
  lln_cmd->add_option("--n", lln.n, "Number of trials")->capture_default_str();
  lln_cmd->add_option("--epsilon", lln.epsilon, "Half-width of the confidence band")
      ->capture_default_str();
  lln_cmd->add_option("--stride", lln.stride, "Checkpoint spacing")->capture_default_str();
  lln_cmd->add_option("--seed", lln.seed, "Generator seed (drawn and reported if absent)");
  add_common(lln_cmd, lln.common);

  DemonOptions demon;
  auto* demon_cmd = simulate_cmd->add_subcommand("demon", "Oscillating adversarial coin");
  demon_cmd->add_option("--max-trials", demon.max_trials, "Number of trials")->capture_default_str();
  demon_cmd->add_option("--p-high", demon.config.p_high, "Heads probability while raising")
      ->capture_default_str();
  demon_cmd->add_option("--p-low", demon.config.p_low, "Heads probability while lowering")
      ->capture_default_str();
  demon_cmd->add_option("--upper", demon.config.upper_threshold, "Upper frequency threshold")
      ->capture_default_str();
  demon_cmd->add_option("--lower", demon.config.lower_threshold, "Lower frequency threshold")
      ->capture_default_str();
  demon_cmd->add_option("--p-initial", demon.config.p_initial, "Heads probability during warmup")
      ->capture_default_str();
  demon_cmd->add_option("--warmup", demon.config.warmup_trials, "Unmanipulated warmup trials")
      ->capture_default_str();
  demon_cmd->add_option("--stride", demon.stride, "Checkpoint spacing")->capture_default_str();
  demon_cmd->add_option("--seed", demon.seed, "Generator seed (drawn and reported if absent)");
  add_common(demon_cmd, demon.common);

  try {
    args = merge_config_arguments(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }

  try {
    if (*confidence_cmd) {
      run_confidence(confidence, out);
    } else if (*confirm_cmd) {
      run_confirm(confirm, out);
    } else if (*succession_cmd) {
      run_succession(succession, out);
    } else if (*scenario_cmd) {
      run_scenario(scenario, out);
    } else if (*lln_cmd) {
      run_simulate_lln(lln, out);
    } else if (*demon_cmd) {
      run_simulate_demon(demon, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kSuccess;
}

}  // namespace induction::cli
