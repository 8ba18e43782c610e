#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <induction/confirmation.hpp>
#include <induction/errors.hpp>
#include <induction/posterior.hpp>
#include <induction/random.hpp>
#include <induction/succession.hpp>

#include "cli/manifest.hpp"

namespace induction::cli {
namespace {

namespace fs = std::filesystem;

std::uint64_t draw_seed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) | device();
}

RunManifest make_manifest(std::string command, std::map<std::string, std::string> parameters,
                          std::optional<std::uint64_t> seed) {
  return {std::move(command), std::move(parameters), seed, artifact_version(), utc_timestamp()};
}

std::string render_document(Format format, const RunManifest& manifest, const Record* record,
                            const Table* table) {
  std::ostringstream text;
  switch (format) {
    case Format::table:
      if (record) write_key_values(text, *record);
      if (table) {
        if (record) text << '\n';
        write_columns(text, *table);
      }
      break;
    case Format::csv:
      // A record and a curve never share one CSV document.
      if (table) {
        write_csv(text, *table);
      } else {
        write_csv(text, record->as_table());
      }
      break;
    case Format::json: {
      nlohmann::json doc;
      doc["manifest"] = manifest.to_json();
      if (record && table) {
        doc["result"] = to_json(*record);
        doc["result"]["rows"] = to_json(*table);
      } else if (record) {
        doc["result"] = to_json(*record);
      } else {
        doc["result"] = to_json(*table);
      }
      text << doc.dump(2) << '\n';
      break;
    }
  }
  return text.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << contents;
  file.close();
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

void emit(const CommonOptions& common, const RunManifest& manifest, const Record* record,
          const Table* table, std::ostream& out) {
  const std::string text = render_document(common.format, manifest, record, table);
  if (common.output.empty()) {
    out << text;
    return;
  }
  write_file(common.output, text);
  if (common.format != Format::json) {
    write_file(common.output + ".manifest.json", manifest.to_json().dump(2) + "\n");
  }
}

std::string format_name(Format f) {
  switch (f) {
    case Format::table: return "table";
    case Format::json: return "json";
    case Format::csv: return "csv";
  }
  return "table";
}

std::map<std::string, std::string> base_parameters(const CommonOptions& common) {
  std::map<std::string, std::string> p{{"format", format_name(common.format)}};
  if (!common.output.empty()) p["output"] = common.output;
  return p;
}

Record confidence_record(const ConfidenceReport& report) {
  Record r;
  r.add("trials", report.evidence.trials());
  r.add("occurrences", report.evidence.occurrences());
  r.add("lo", report.interval.lo());
  r.add("hi", report.interval.hi());
  r.add("confidence", report.confidence);
  return r;
}

// Confidence on [lo, 1] after n consecutive successes, plus its closed form.
Record all_success_scenario(const std::string& name, Count n, double lo, const std::string& claim) {
  const auto report = confidence_on_interval(Evidence(n, n), ProbInterval(lo, 1.0));
  Record r;
  r.add("scenario", name);
  r.add("claim", claim);
  for (auto& field : confidence_record(report).fields) r.fields.push_back(std::move(field));
  r.add("closed_form", all_success_confidence(n, lo));
  r.add("expression", "1 - " + full_precision(lo) + "^" + std::to_string(n + 1));
  return r;
}

void prepare_output_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory " + dir.string());
  }
}

}  // namespace

void run_confidence(const ConfidenceOptions& o, std::ostream& out) {
  if (o.interval.size() != 2) throw DomainError("--interval expects two values lo,hi");
  const auto report = confidence_on_interval(Evidence(o.trials, o.occurrences),
                                             ProbInterval(o.interval[0], o.interval[1]));
  auto params = base_parameters(o.common);
  params["trials"] = std::to_string(o.trials);
  params["occurrences"] = std::to_string(o.occurrences);
  params["interval"] = full_precision(o.interval[0]) + "," + full_precision(o.interval[1]);
  const Record record = confidence_record(report);
  emit(o.common, make_manifest("confidence", std::move(params), std::nullopt), &record, nullptr,
       out);
}

void run_confirm(const ConfirmOptions& o, std::ostream& out) {
  const Evidence evidence(o.trials, o.occurrences);
  const auto report = degree_of_confirmation(evidence);
  Record r;
  r.add("trials", evidence.trials());
  r.add("occurrences", evidence.occurrences());
  r.add("best_width", report.best_width);
  r.add("lo", report.best_interval.lo());
  r.add("hi", report.best_interval.hi());
  r.add("best_confidence", report.best_confidence);
  r.add("degree", report.degree);
  r.add("succession", rule_of_succession(evidence).probability_next);
  if (evidence.all_success()) r.add("closed_form_degree", all_success_confirmation(evidence.trials()));

  auto params = base_parameters(o.common);
  params["trials"] = std::to_string(o.trials);
  params["occurrences"] = std::to_string(o.occurrences);
  emit(o.common, make_manifest("confirm", std::move(params), std::nullopt), &r, nullptr, out);
}

void run_succession(const SuccessionOptions& o, std::ostream& out) {
  const Evidence evidence(o.trials, o.occurrences);
  const double rule = rule_of_succession(evidence).probability_next;
  Record r;
  r.add("trials", evidence.trials());
  r.add("occurrences", evidence.occurrences());
  r.add("rule_of_succession", rule);

  auto params = base_parameters(o.common);
  params["trials"] = std::to_string(o.trials);
  params["occurrences"] = std::to_string(o.occurrences);
  std::optional<std::uint64_t> seed;
  if (o.samples > 0) {
    seed = o.seed.value_or(draw_seed());
    const auto sim = succession_monte_carlo(evidence, o.samples, *seed);
    const double se = sim.standard_error(rule);
    r.add("monte_carlo", sim.probability_next);
    r.add("attempts", sim.attempts);
    r.add("accepted", sim.accepted);
    r.add("standard_error", se);
    r.add("z_score", (sim.probability_next - rule) / se);
    r.add("seed", *seed);
    r.add("generator", sim.generator);
    params["samples"] = std::to_string(o.samples);
  }
  emit(o.common, make_manifest("succession", std::move(params), seed), &r, nullptr, out);
}

void run_scenario(const ScenarioOptions& o, std::ostream& out) {
  auto params = base_parameters(o.common);
  params["name"] = o.name;
  if (o.name == "swans") {
    if (o.max_n == 0) throw DomainError("--max-n must be at least 1");
    params["max_n"] = std::to_string(o.max_n);
    params["interval"] = "0.9,1";
    Table curve;
    curve.columns = {"N", "confidence"};
    for (Count n = 1; n <= o.max_n; ++n) {
      curve.add_row({n, confidence_on_interval(Evidence(n, n), ProbInterval(0.9, 1.0)).confidence});
    }
    emit(o.common, make_manifest("scenario", std::move(params), std::nullopt), nullptr, &curve, out);
    return;
  }
  Record r;
  if (o.name == "turkey") {
    // Two months of morning feedings: 60 observations, closed form 1 - 0.99^61.
    r = all_success_scenario("turkey", 60, 0.99, "probability of feeding exceeds 0.99");
  } else if (o.name == "sunrise") {
    r = all_success_scenario("sunrise", 10000, 0.999, "probability of sunrise exceeds 0.999");
  } else {
    throw std::invalid_argument("unknown scenario " + o.name);
  }
  emit(o.common, make_manifest("scenario", std::move(params), std::nullopt), &r, nullptr, out);
}

void run_simulate_lln(const LlnOptions& o, std::ostream& out) {
  const std::uint64_t seed = o.seed.value_or(draw_seed());
  const auto trajectory = simulate_bernoulli(o.p, o.n, seed, o.stride);
  const auto points = lln_confidence_trajectory(trajectory, o.epsilon);
  const auto& last = points.back();

  Record r;
  r.add("kind", "lln");
  r.add("p", o.p);
  r.add("n", o.n);
  r.add("epsilon", o.epsilon);
  r.add("seed", seed);
  r.add("generator", trajectory.generator);
  r.add("final_ratio", last.ratio);
  r.add("abs_error", std::abs(last.ratio - o.p));
  r.add("final_confidence", last.confidence);
  r.add("checkpoints", static_cast<std::uint64_t>(points.size()));

  auto params = base_parameters(o.common);
  params["p"] = full_precision(o.p);
  params["n"] = std::to_string(o.n);
  params["epsilon"] = full_precision(o.epsilon);
  params["stride"] = std::to_string(o.stride);
  const auto manifest = make_manifest("simulate lln", params, seed);

  if (!o.common.output.empty()) {
    const fs::path dir(o.common.output);
    prepare_output_directory(dir);
    Table t;
    t.columns = {"n", "ratio", "confidence"};
    for (const auto& p : points) t.add_row({p.n, p.ratio, p.confidence});
    std::ostringstream csv;
    write_csv(csv, t);
    write_file(dir / "trajectory.csv", csv.str());
    write_file(dir / "manifest.json", manifest.to_json().dump(2) + "\n");
  }
  CommonOptions to_stdout = o.common;
  to_stdout.output.clear();
  emit(to_stdout, manifest, &r, nullptr, out);
}

void run_simulate_demon(const DemonOptions& o, std::ostream& out) {
  const std::uint64_t seed = o.seed.value_or(draw_seed());
  const auto run = simulate_demon(o.config, o.max_trials, seed, o.stride);
  const auto growth = analyze_cycles(run.cycles);

  // Growth ratios over the second half of the cycle list.
  std::vector<double> late;
  for (std::size_t i = growth.size() / 2; i < growth.size(); ++i) {
    if (growth[i].growth_ratio) late.push_back(*growth[i].growth_ratio);
  }
  std::sort(late.begin(), late.end());

  Record r;
  r.add("kind", "demon");
  r.add("max_trials", o.max_trials);
  r.add("seed", seed);
  r.add("generator", run.trajectory.generator);
  r.add("warmup_trials", o.config.warmup_trials);
  r.add("completed_cycles", static_cast<std::uint64_t>(run.cycles.size()));
  r.add("final_ratio", run.trajectory.final_checkpoint().ratio);
  if (!late.empty()) {
    r.add("median_late_growth", late[late.size() / 2]);
  } else {
    r.add("median_late_growth", std::monostate{});
  }

  auto params = base_parameters(o.common);
  params["max_trials"] = std::to_string(o.max_trials);
  params["stride"] = std::to_string(o.stride);
  params["p_high"] = full_precision(o.config.p_high);
  params["p_low"] = full_precision(o.config.p_low);
  params["upper"] = full_precision(o.config.upper_threshold);
  params["lower"] = full_precision(o.config.lower_threshold);
  params["p_initial"] = full_precision(o.config.p_initial);
  params["warmup"] = std::to_string(o.config.warmup_trials);
  const auto manifest = make_manifest("simulate demon", params, seed);

  if (!o.common.output.empty()) {
    const fs::path dir(o.common.output);
    prepare_output_directory(dir);
    Table t;
    t.columns = {"n", "ratio"};
    for (const auto& cp : run.trajectory.checkpoints) t.add_row({cp.n, cp.ratio});
    std::ostringstream trajectory_csv;
    write_csv(trajectory_csv, t);
    write_file(dir / "trajectory.csv", trajectory_csv.str());

    Table c;
    c.columns = {"index", "direction", "start_n", "end_n", "length", "growth_ratio"};
    for (std::size_t i = 0; i < run.cycles.size(); ++i) {
      const auto& cycle = run.cycles[i];
      Value ratio = growth[i].growth_ratio ? Value(*growth[i].growth_ratio) : Value(std::monostate{});
      c.add_row({cycle.index, std::string(to_string(cycle.direction)), cycle.start_n, cycle.end_n,
                 cycle.length(), ratio});
    }
    std::ostringstream cycles_csv;
    write_csv(cycles_csv, c);
    write_file(dir / "cycles.csv", cycles_csv.str());
    write_file(dir / "manifest.json", manifest.to_json().dump(2) + "\n");
  }
  CommonOptions to_stdout = o.common;
  to_stdout.output.clear();
  emit(to_stdout, manifest, &r, nullptr, out);
}

}  // namespace induction::cli
