// Command line driver: tune -> run -> report pipeline plus self checks.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nqopt/design.hpp"
#include "nqopt/harness.hpp"
#include "nqopt/report.hpp"
#include "nqopt/results_io.hpp"
#include "nqopt/verify.hpp"

namespace fs = std::filesystem;
using namespace nqopt;

namespace {

struct CliOptions {
  std::string plan_file;
  std::string out_dir;
  int workers = 1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::vector<std::string> algorithms;
  bool algorithms_given = false;
  std::vector<int> sizes;
  std::vector<double> weights;
  bool verbose = false;
};

std::string fmt(double v) {
  char buf[48];
  if (v == static_cast<long long>(v) && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
  } else {
    std::snprintf(buf, sizeof(buf), "%g", v);
  }
  return buf;
}

fs::path resolve_out_dir(const CliOptions& opt) {
  if (!opt.out_dir.empty()) return opt.out_dir;
  if (const char* env = std::getenv("NQOPT_OUT_DIR"); env && *env) return env;
  return "results";
}

ExperimentPlan load_plan(const CliOptions& opt) {
  ExperimentPlan plan;
  if (!opt.plan_file.empty()) plan = read_plan(opt.plan_file);
  if (opt.seed_set) plan.master_seed = opt.seed;
  if (!opt.weights.empty()) {
    if (opt.weights.size() != 2 || opt.weights[0] < 0 || opt.weights[1] < 0) {
      throw std::runtime_error("--weights expects two non-negative values: cost,nfe");
    }
    plan.weight_cost = opt.weights[0];
    plan.weight_nfe = opt.weights[1];
  }
  return plan;
}

// Filtered (algorithm, size) cells, in plan order. Filters must name things
// the plan actually contains; an empty selection is legal and yields no work.
std::vector<std::pair<Algorithm, int>> select_cells(const ExperimentPlan& plan,
                                                    const CliOptions& opt) {
  std::vector<Algorithm> algorithms;
  if (!opt.algorithms_given) {
    algorithms = plan.algorithms;
  } else {
    for (const std::string& name : opt.algorithms) {
      if (name.empty()) continue;
      const auto a = algorithm_from_string(name);
      if (!a) throw std::runtime_error("unknown algorithm '" + name + "'");
      if (std::find(plan.algorithms.begin(), plan.algorithms.end(), *a) ==
          plan.algorithms.end()) {
        throw std::runtime_error("algorithm '" + name + "' is not in the plan");
      }
      algorithms.push_back(*a);
    }
  }
  std::vector<int> sizes;
  if (opt.sizes.empty()) {
    sizes = plan.sizes;
  } else {
    for (int n : opt.sizes) {
      if (std::find(plan.sizes.begin(), plan.sizes.end(), n) == plan.sizes.end()) {
        throw std::runtime_error("size " + std::to_string(n) + " is not in the plan");
      }
      sizes.push_back(n);
    }
  }
  std::vector<std::pair<Algorithm, int>> cells;
  for (Algorithm a : algorithms) {
    for (int n : sizes) cells.emplace_back(a, n);
  }
  return cells;
}

int algorithm_rank(Algorithm a) {
  for (std::size_t i = 0; i < kAlgorithms.size(); ++i) {
    if (kAlgorithms[i] == a) return static_cast<int>(i);
  }
  return static_cast<int>(kAlgorithms.size());
}

// Canonical record order, so merged and fresh result sets serialize the same.
void sort_records(std::vector<PhasedRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const PhasedRecord& a, const PhasedRecord& b) {
                     const auto key = [](const PhasedRecord& r) {
                       return std::tuple(algorithm_rank(r.run.algorithm), r.run.n,
                                         static_cast<int>(r.phase), r.config_id,
                                         r.replication);
                     };
                     return key(a) < key(b);
                   });
}

void drop_records(std::vector<PhasedRecord>& records, Algorithm a, int n,
                  std::initializer_list<Phase> phases) {
  records.erase(std::remove_if(records.begin(), records.end(),
                               [&](const PhasedRecord& r) {
                                 if (r.run.algorithm != a || r.run.n != n) return false;
                                 return std::find(phases.begin(), phases.end(),
                                                  r.phase) != phases.end();
                               }),
                records.end());
}

ResultsBundle load_or_create(const fs::path& dir, const ExperimentPlan& plan) {
  ResultsBundle bundle;
  if (fs::exists(dir / kManifestName)) {
    bundle = read_results(dir);
    if (plan_digest(bundle.manifest.plan) != plan_digest(plan)) {
      std::cerr << "note: plan differs from the one stored in " << dir.string()
                << "; keeping existing records, updating the plan\n";
    }
  }
  bundle.manifest.plan = plan;
  bundle.manifest.plan_digest = plan_digest(plan);
  return bundle;
}

void save(const fs::path& dir, ResultsBundle& bundle) {
  bundle.manifest.created = current_timestamp();
  sort_records(bundle.records);
  write_results(dir, bundle.manifest, bundle.records);
}

int cmd_tune(const CliOptions& opt) {
  const ExperimentPlan plan = load_plan(opt);
  const auto cells = select_cells(plan, opt);
  if (cells.empty()) {
    std::cerr << "warning: nothing selected, no tuning to do\n";
    return 0;
  }
  const fs::path out = resolve_out_dir(opt);
  ResultsBundle bundle = load_or_create(out, plan);
  const Harness harness(plan, opt.workers);

  for (const auto& [a, n] : cells) {
    const FactorGrid grid = tuning_grid(a);
    std::cerr << "tune " << to_string(a) << " n=" << n << " ..." << std::flush;
    const TuningOutcome outcome = harness.run_tuning_phase(a, n);
    std::cerr << " done (" << outcome.records.size() << " runs)\n";

    drop_records(bundle.records, a, n, {Phase::Tuning});
    bundle.records.insert(bundle.records.end(), outcome.records.begin(),
                          outcome.records.end());
    bundle.manifest.put_design(a, outcome.design);
    TunedEntry entry;
    entry.algorithm = a;
    entry.n = n;
    entry.design_row = static_cast<int>(outcome.chosen_index);
    entry.config = outcome.configs[outcome.chosen_index];
    bundle.manifest.put_tuned(entry);

    const auto& agg = outcome.aggregates[outcome.chosen_index];
    std::cout << "chosen " << to_string(a) << " n=" << n << " (design row "
              << outcome.chosen_index << ", mean cost " << fmt(agg.mean_cost)
              << ", mean nfe " << fmt(agg.mean_nfe) << ")\n";
    const std::vector<double> values = values_of(entry.config);
    for (std::size_t i = 0; i < grid.factors.size(); ++i) {
      std::cout << "  " << grid.factors[i].name << " = " << fmt(values[i]) << "\n";
    }
    if (opt.verbose) {
      for (std::size_t row = 0; row < outcome.aggregates.size(); ++row) {
        std::cout << "  row " << row << ": mean cost "
                  << fmt(outcome.aggregates[row].mean_cost) << ", mean nfe "
                  << fmt(outcome.aggregates[row].mean_nfe) << "\n";
      }
    }
  }
  save(out, bundle);
  std::cerr << "results written to " << out.string() << "\n";
  return 0;
}

int cmd_run(const CliOptions& opt) {
  const fs::path out = resolve_out_dir(opt);
  if (!fs::exists(out / kManifestName)) {
    std::cerr << "error: no results at " << out.string()
              << "; run `nqopt tune` first to produce tuned configurations\n";
    return 1;
  }
  ResultsBundle bundle = read_results(out);

  ExperimentPlan plan = bundle.manifest.plan;
  if (!opt.plan_file.empty()) plan = read_plan(opt.plan_file);
  if (opt.seed_set) plan.master_seed = opt.seed;
  bundle.manifest.plan = plan;
  bundle.manifest.plan_digest = plan_digest(plan);

  const auto cells = select_cells(plan, opt);
  if (cells.empty()) {
    std::cerr << "warning: nothing selected, no runs to do\n";
    return 0;
  }
  const Harness harness(plan, opt.workers);

  for (const auto& [a, n] : cells) {
    const TunedEntry* tuned = bundle.manifest.find_tuned(a, n);
    if (tuned == nullptr) {
      std::cerr << "error: no tuned configuration for " << to_string(a) << " at n="
                << n << " in " << out.string() << "; run `nqopt tune --algorithms "
                << to_string(a) << " --sizes " << n << "` first\n";
      return 1;
    }
    std::cerr << "run " << to_string(a) << " n=" << n << " ..." << std::flush;
    const auto validation = harness.run_validation_phase(a, n, tuned->config);
    const auto final_records = harness.run_final_phase(a, n, tuned->config);
    std::cerr << " done (" << validation.size() + final_records.size() << " runs)\n";

    drop_records(bundle.records, a, n, {Phase::Validation, Phase::Final});
    bundle.records.insert(bundle.records.end(), validation.begin(), validation.end());
    bundle.records.insert(bundle.records.end(), final_records.begin(),
                          final_records.end());

    for (const SummaryRow& row : aggregate(final_records)) {
      std::cout << "final " << to_string(a) << " n=" << n << " " << row.metric
                << " min/avg/max " << fmt(row.min) << "/" << fmt(row.avg) << "/"
                << fmt(row.max) << " (" << row.replications << " runs)\n";
    }
  }
  save(out, bundle);
  std::cerr << "results written to " << out.string() << "\n";
  return 0;
}

int cmd_report(const CliOptions& opt) {
  const fs::path out = resolve_out_dir(opt);
  const ResultsBundle bundle = read_results(out);

  std::vector<PhasedRecord> final_records;
  for (const PhasedRecord& r : bundle.records) {
    if (r.phase == Phase::Final) final_records.push_back(r);
  }
  const ReportDocument doc = render_report(aggregate_all(final_records));

  std::ofstream csv(out / "report.csv", std::ios::binary);
  csv << doc.csv;
  std::ofstream txt(out / "report.txt", std::ios::binary);
  txt << doc.text;
  if (!csv || !txt) {
    std::cerr << "error: failed writing report files to " << out.string() << "\n";
    return 1;
  }
  for (const std::string& w : doc.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << doc.text;
  return 0;
}

int cmd_verify() {
  bool all_pass = true;
  for (const CheckResult& check : run_verification_suite()) {
    std::cout << (check.pass ? "PASS" : "FAIL") << "  " << check.name;
    if (!check.detail.empty()) std::cout << ": " << check.detail;
    std::cout << "\n";
    all_pass = all_pass && check.pass;
  }
  return all_pass ? 0 : 1;
}

void add_common_options(CLI::App* cmd, CliOptions& opt, bool with_plan_flags) {
  cmd->add_option("--out", opt.out_dir,
                  "Results directory (default: $NQOPT_OUT_DIR or ./results)");
  if (with_plan_flags) {
    cmd->add_option("--plan", opt.plan_file, "Plan file (default: built-in plan)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--workers", opt.workers, "Concurrent runs per phase")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "Master seed override")
        ->each([&opt](const std::string&) { opt.seed_set = true; });
    cmd->add_option("--algorithms", opt.algorithms,
                    "Comma separated algorithm filter (subset of the plan)")
        ->delimiter(',')
        ->each([&opt](const std::string&) { opt.algorithms_given = true; });
    cmd->add_option("--sizes", opt.sizes,
                    "Comma separated board size filter (subset of the plan)")
        ->delimiter(',');
    cmd->add_flag("--verbose", opt.verbose, "Chattier progress on stderr");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"N-queens metaheuristic workbench"};
  app.require_subcommand(1);
  CliOptions opt;

  CLI::App* tune = app.add_subcommand(
      "tune", "Run the tuning design and pick a configuration per algorithm/size");
  add_common_options(tune, opt, true);
  tune->add_option("--weights", opt.weights,
                   "Selection weights as cost,nfe (default 0.5,0.5)")
      ->delimiter(',');

  CLI::App* run = app.add_subcommand(
      "run", "Run validation and final phases with the tuned configurations");
  add_common_options(run, opt, true);

  CLI::App* report =
      app.add_subcommand("report", "Render the comparison report from stored results");
  add_common_options(report, opt, false);

  app.add_subcommand("verify", "Run the built-in oracle self checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tune->parsed()) return cmd_tune(opt);
    if (run->parsed()) return cmd_run(opt);
    if (report->parsed()) return cmd_report(opt);
    return cmd_verify();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
