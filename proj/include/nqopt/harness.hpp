#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nqopt/design.hpp"
#include "nqopt/solver.hpp"
#include "nqopt/topsis.hpp"

namespace nqopt {

enum class Phase { Tuning = 0, Validation = 1, Final = 2 };

const char* to_string(Phase phase);
std::optional<Phase> phase_from_string(std::string_view name);

struct ExperimentPlan {
  std::vector<Algorithm> algorithms{kAlgorithms.begin(), kAlgorithms.end()};
  std::vector<int> sizes{8, 10, 25, 50, 100, 200, 300, 500, 1000};
  int tuning_replications = 5;
  int validation_replications = 5;
  int final_replications = 10;
  std::uint64_t master_seed = 2024;
  double weight_cost = 0.5;
  double weight_nfe = 0.5;
  std::uint64_t nfe_cap = 1'000'000;
};

// Seed for a single run. Built by chaining a mixing function over the run
// coordinates, then stamping the phase into the two lowest bits, so the seed
// sets of the three phases are disjoint by construction.
std::uint64_t derive_seed(std::uint64_t master, Algorithm a, int n,
                          Phase phase, int config_index, int replication);

// A solver run plus its position in the experiment.
struct PhasedRecord {
  Phase phase = Phase::Tuning;
  int config_id = 0;      // design row during tuning, -1 afterwards
  int replication = 0;    // 0-based
  RunRecord run;
};

struct SummaryRow {
  Algorithm algorithm;
  int n = 0;
  Phase phase = Phase::Final;
  std::string metric;  // "cost" or "nfe"
  double min = 0.0;
  double avg = 0.0;
  double max = 0.0;
  int replications = 0;
};

// Min/avg/max of cost and NFE. The single-group form requires all records to
// share (algorithm, n, phase) and throws std::invalid_argument otherwise or
// on empty input; the grouped form splits by (algorithm, n, phase) first and
// orders groups by algorithm, then n, then phase.
std::vector<SummaryRow> aggregate(const std::vector<PhasedRecord>& records);
std::vector<SummaryRow> aggregate_all(const std::vector<PhasedRecord>& records);

// Everything the tuning phase produced for one (algorithm, n) cell.
struct TuningOutcome {
  OrthogonalArray design;
  std::vector<AlgorithmConfig> configs;       // one per design row
  std::vector<ConfigAggregate> aggregates;    // one per design row
  std::size_t chosen_index = 0;
  std::vector<PhasedRecord> records;
};

// Runs experiment phases for one (algorithm, n) cell at a time. Workers > 1
// spreads replications over that many threads; results are identical to the
// single-threaded order.
class Harness {
 public:
  explicit Harness(ExperimentPlan plan, int workers = 1);

  const ExperimentPlan& plan() const { return plan_; }

  TuningOutcome run_tuning_phase(Algorithm a, int n) const;
  std::vector<PhasedRecord> run_validation_phase(Algorithm a, int n,
                                                 const AlgorithmConfig& config) const;
  std::vector<PhasedRecord> run_final_phase(Algorithm a, int n,
                                            const AlgorithmConfig& config) const;

 private:
  std::vector<PhasedRecord> execute(Algorithm a, int n, Phase phase,
                                    const std::vector<AlgorithmConfig>& configs,
                                    int replications) const;

  ExperimentPlan plan_;
  int workers_;
};

}  // namespace nqopt
