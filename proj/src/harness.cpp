#include "nqopt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "nqopt/rng.hpp"

namespace nqopt {

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::Tuning: return "tuning";
    case Phase::Validation: return "validation";
    case Phase::Final: return "final";
  }
  return "?";
}

std::optional<Phase> phase_from_string(std::string_view name) {
  for (Phase p : {Phase::Tuning, Phase::Validation, Phase::Final}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

std::uint64_t derive_seed(std::uint64_t master, Algorithm a, int n, Phase phase,
                          int config_index, int replication) {
  std::uint64_t h = mix64(master ^ (static_cast<std::uint64_t>(a) + 1));
  h = mix64(h ^ static_cast<std::uint64_t>(n));
  h = mix64(h ^ static_cast<std::uint64_t>(config_index + 1));
  h = mix64(h ^ static_cast<std::uint64_t>(replication));
  // The phase owns the two lowest bits: no seed can appear in two phases.
  return (h & ~std::uint64_t{3}) | static_cast<std::uint64_t>(phase);
}

namespace {

void summarize(const std::vector<PhasedRecord>& records, const char* metric,
               std::vector<SummaryRow>& out) {
  SummaryRow row;
  row.algorithm = records.front().run.algorithm;
  row.n = records.front().run.n;
  row.phase = records.front().phase;
  row.metric = metric;
  row.replications = static_cast<int>(records.size());
  double sum = 0.0;
  bool first = true;
  for (const PhasedRecord& r : records) {
    const double v = metric == std::string("cost") ? static_cast<double>(r.run.cost)
                                                   : static_cast<double>(r.run.nfe);
    if (first) {
      row.min = row.max = v;
      first = false;
    } else {
      row.min = std::min(row.min, v);
      row.max = std::max(row.max, v);
    }
    sum += v;
  }
  row.avg = sum / static_cast<double>(records.size());
  out.push_back(std::move(row));
}

}  // namespace

std::vector<SummaryRow> aggregate(const std::vector<PhasedRecord>& records) {
  if (records.empty()) throw std::invalid_argument("cannot aggregate zero records");
  const Algorithm a = records.front().run.algorithm;
  const int n = records.front().run.n;
  const Phase phase = records.front().phase;
  for (const PhasedRecord& r : records) {
    if (r.run.algorithm != a || r.run.n != n || r.phase != phase) {
      throw std::invalid_argument(
          "aggregate() requires records from a single (algorithm, n, phase) group");
    }
  }
  std::vector<SummaryRow> out;
  summarize(records, "cost", out);
  summarize(records, "nfe", out);
  return out;
}

std::vector<SummaryRow> aggregate_all(const std::vector<PhasedRecord>& records) {
  std::map<std::tuple<int, int, int>, std::vector<PhasedRecord>> groups;
  for (const PhasedRecord& r : records) {
    groups[{static_cast<int>(r.run.algorithm), r.run.n, static_cast<int>(r.phase)}]
        .push_back(r);
  }
  std::vector<SummaryRow> out;
  for (const auto& [key, group] : groups) {
    summarize(group, "cost", out);
    summarize(group, "nfe", out);
  }
  return out;
}

Harness::Harness(ExperimentPlan plan, int workers)
    : plan_(std::move(plan)), workers_(workers < 1 ? 1 : workers) {}

std::vector<PhasedRecord> Harness::execute(Algorithm a, int n, Phase phase,
                                           const std::vector<AlgorithmConfig>& configs,
                                           int replications) const {
  struct Task {
    int config_index;  // index into configs; -1 config_id outside tuning
    int replication;
  };
  std::vector<Task> tasks;
  tasks.reserve(configs.size() * static_cast<std::size_t>(replications));
  for (std::size_t c = 0; c < configs.size(); ++c) {
    for (int r = 0; r < replications; ++r) {
      tasks.push_back({static_cast<int>(c), r});
    }
  }

  std::vector<PhasedRecord> slots(tasks.size());
  const auto run_task = [&](std::size_t t) {
    const Task& task = tasks[t];
    const int config_id = phase == Phase::Tuning ? task.config_index : -1;
    const std::uint64_t seed =
        derive_seed(plan_.master_seed, a, n, phase, config_id, task.replication);
    SolveOptions options;
    options.nfe_cap = plan_.nfe_cap;
    PhasedRecord rec;
    rec.phase = phase;
    rec.config_id = config_id;
    rec.replication = task.replication;
    rec.run = solve(n, configs[static_cast<std::size_t>(task.config_index)], seed, options);
    slots[t] = std::move(rec);
  };

  const int workers = std::min<int>(workers_, static_cast<int>(tasks.size()));
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t t = next.fetch_add(1);
          if (t >= tasks.size()) return;
          try {
            run_task(t);
          } catch (...) {
            const std::lock_guard<std::mutex> hold(failure_lock);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (std::thread& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  return slots;
}

TuningOutcome Harness::run_tuning_phase(Algorithm a, int n) const {
  TuningOutcome outcome;
  const FactorGrid grid = tuning_grid(a);
  outcome.design = build_design(grid);
  outcome.configs = expand_design(outcome.design, grid);
  outcome.records = execute(a, n, Phase::Tuning, outcome.configs,
                            plan_.tuning_replications);

  outcome.aggregates.assign(outcome.configs.size(), ConfigAggregate{});
  std::vector<int> counts(outcome.configs.size(), 0);
  for (const PhasedRecord& r : outcome.records) {
    ConfigAggregate& agg = outcome.aggregates[static_cast<std::size_t>(r.config_id)];
    agg.mean_cost += r.run.cost;
    agg.mean_nfe += static_cast<double>(r.run.nfe);
    ++counts[static_cast<std::size_t>(r.config_id)];
  }
  for (std::size_t c = 0; c < outcome.aggregates.size(); ++c) {
    if (counts[c] > 0) {
      outcome.aggregates[c].mean_cost /= counts[c];
      outcome.aggregates[c].mean_nfe /= counts[c];
    }
  }
  outcome.chosen_index =
      select_config_index(outcome.aggregates, plan_.weight_cost, plan_.weight_nfe);
  return outcome;
}

std::vector<PhasedRecord> Harness::run_validation_phase(
    Algorithm a, int n, const AlgorithmConfig& config) const {
  return execute(a, n, Phase::Validation, {config}, plan_.validation_replications);
}

std::vector<PhasedRecord> Harness::run_final_phase(Algorithm a, int n,
                                                   const AlgorithmConfig& config) const {
  return execute(a, n, Phase::Final, {config}, plan_.final_replications);
}

}  // namespace nqopt
