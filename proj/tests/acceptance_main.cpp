// Acceptance gate: one check per release criterion, one PASS/FAIL line each.
// Exits nonzero if any check fails. Heavier than the unit tests; the solver
// batch behind checks 6 to 8 runs all seven algorithms at three board sizes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "nqopt/design.hpp"
#include "nqopt/harness.hpp"
#include "nqopt/presets.hpp"
#include "nqopt/problem.hpp"
#include "nqopt/results_io.hpp"
#include "nqopt/solver.hpp"
#include "nqopt/topsis.hpp"
#include "support/oracles.hpp"

using namespace nqopt;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

std::string fmt_mean(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// ---- check 1: cost function vs brute-force oracle on every small board ----

Result check_cost_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t boards = 0;
  std::uint64_t mismatches = 0;
  for (int n = 1; n <= 6; ++n) {
    oracles::for_each_board(n, [&](const std::vector<int>& board) {
      ++boards;
      if (evaluate_cost(board) != oracles::pairwise_cost(board)) ++mismatches;
    });
  }
  const double elapsed = seconds_since(start);
  Result r;
  r.pass = mismatches == 0 && boards == 50069 && elapsed < 10.0;
  r.detail = std::to_string(boards) + " boards, " + std::to_string(mismatches) +
             " mismatches, " + fmt_seconds(elapsed) + " (limit 10s)";
  return r;
}

// ---- check 2: solution count over the full 8-queens permutation space ----

Result check_solution_count() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  int solutions = 0;
  do {
    if (evaluate_cost(perm) == 0) ++solutions;
  } while (std::next_permutation(perm.begin(), perm.end()));
  const double elapsed = seconds_since(start);
  Result r;
  r.pass = solutions == 92 && elapsed < 5.0;
  r.detail = std::to_string(solutions) + " of 40320 permutations solve n=8, " +
             fmt_seconds(elapsed) + " (limit 5s)";
  return r;
}

// ---- check 3: tuning design sizes per algorithm ----

Result check_design_rows() {
  const std::map<Algorithm, std::size_t> expected{
      {Algorithm::Brado, 32}, {Algorithm::Ga, 16}, {Algorithm::Ica, 32},
      {Algorithm::Ils, 32},   {Algorithm::Ls, 16}, {Algorithm::Mls, 16},
      {Algorithm::Pso, 16},
  };
  Result r;
  r.pass = true;
  std::string got;
  for (Algorithm a : kAlgorithms) {
    const OrthogonalArray design = build_design(tuning_grid(a));
    if (design.rows != expected.at(a)) r.pass = false;
    if (!got.empty()) got += ", ";
    got += std::string(to_string(a)) + "=" + std::to_string(design.rows);
  }
  r.detail = got;
  return r;
}

// ---- check 4: balance and strength 2 of the embedded arrays ----

bool array_is_strength_two(const OrthogonalArray& oa, std::string& why) {
  const std::size_t cols = oa.columns();
  for (std::size_t c = 0; c < cols; ++c) {
    const int levels = oa.level_counts[c];
    std::vector<int> count(static_cast<std::size_t>(levels), 0);
    for (const auto& row : oa.cells) ++count[static_cast<std::size_t>(row[c])];
    for (int v : count) {
      if (static_cast<std::size_t>(v) * static_cast<std::size_t>(levels) !=
          oa.rows) {
        why = "column " + std::to_string(c) + " unbalanced";
        return false;
      }
    }
  }
  for (std::size_t a = 0; a < cols; ++a) {
    for (std::size_t b = a + 1; b < cols; ++b) {
      const int la = oa.level_counts[a];
      const int lb = oa.level_counts[b];
      std::vector<int> count(static_cast<std::size_t>(la * lb), 0);
      for (const auto& row : oa.cells) {
        ++count[static_cast<std::size_t>(row[a] * lb + row[b])];
      }
      const std::size_t want = oa.rows / static_cast<std::size_t>(la * lb);
      for (int v : count) {
        if (static_cast<std::size_t>(v) != want) {
          why = "columns " + std::to_string(a) + "," + std::to_string(b) +
                " miss a level pair";
          return false;
        }
      }
    }
  }
  return true;
}

Result check_orthogonal_arrays() {
  Result r;
  std::string why16, why32;
  const bool ok16 = array_is_strength_two(embedded_array16(), why16);
  const bool ok32 = array_is_strength_two(embedded_array32(), why32);
  r.pass = ok16 && ok32;
  r.detail = ok16 ? "16-run array balanced, strength 2" : "16-run array: " + why16;
  r.detail += "; ";
  r.detail += ok32 ? "32-run array balanced, strength 2" : "32-run array: " + why32;
  return r;
}

// ---- check 5: ranking stage against an independent implementation ----

Result check_topsis() {
  const double tol = 1e-9;
  Result r;
  r.pass = true;

  // Small fixture worked out by hand.
  DecisionMatrix hand;
  hand.values = {{1.0, 1.0}, {3.0, 2.0}};
  hand.weights = {0.6, 0.4};
  hand.directions = {Direction::Maximize, Direction::Minimize};
  const TopsisResult hr = topsis_rank(hand);
  const double d1 = 1.2 / std::sqrt(10.0);  // criterion 1 gap after weighting
  const double d2 = 0.4 / std::sqrt(5.0);   // criterion 2 gap after weighting
  if (std::abs(hr.closeness[0] - d2 / (d1 + d2)) > tol ||
      std::abs(hr.closeness[1] - d1 / (d1 + d2)) > tol ||
      hr.ranking != (std::vector<std::size_t>{1, 0})) {
    r.pass = false;
    r.detail = "hand fixture mismatch";
    return r;
  }

  Rng rng(0x70515);
  int oracle_mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    DecisionMatrix m;
    m.values.assign(4, std::vector<double>(2, 0.0));
    for (auto& row : m.values) {
      for (double& v : row) v = rng.uniform(0.0, 100.0);
    }
    m.weights = {rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)};
    m.directions = {rng.bernoulli(0.5) ? Direction::Maximize : Direction::Minimize,
                    rng.bernoulli(0.5) ? Direction::Maximize : Direction::Minimize};
    const TopsisResult got = topsis_rank(m);
    const TopsisResult want = oracles::topsis_by_hand(m);
    for (std::size_t i = 0; i < got.closeness.size(); ++i) {
      if (std::abs(got.closeness[i] - want.closeness[i]) > tol) ++oracle_mismatches;
    }
    if (got.ranking != want.ranking) ++oracle_mismatches;
  }

  // A dominated alternative never outranks the one dominating it, and
  // positive rescaling of any criterion leaves the ranking alone.
  int dominance_failures = 0;
  int scaling_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t rows = 3 + rng.index(4);
    DecisionMatrix m;
    m.values.assign(rows, std::vector<double>(3, 0.0));
    for (auto& row : m.values) {
      for (double& v : row) v = rng.uniform(1.0, 50.0);
    }
    m.weights = {rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)};
    m.directions = {Direction::Minimize, Direction::Minimize, Direction::Minimize};
    const double shrink = rng.uniform(0.1, 0.9);
    for (std::size_t c = 0; c < 3; ++c) m.values[0][c] = m.values[1][c] * shrink;

    const TopsisResult base = topsis_rank(m);
    const auto pos = [&](std::size_t alt) {
      return std::find(base.ranking.begin(), base.ranking.end(), alt) -
             base.ranking.begin();
    };
    if (pos(0) > pos(1)) ++dominance_failures;

    DecisionMatrix scaled = m;
    for (std::size_t c = 0; c < 3; ++c) {
      const double factor = rng.uniform(0.5, 20.0);
      for (auto& row : scaled.values) row[c] *= factor;
    }
    if (topsis_rank(scaled).ranking != base.ranking) ++scaling_failures;
  }

  r.pass = oracle_mismatches == 0 && dominance_failures == 0 && scaling_failures == 0;
  r.detail = "hand fixture ok; 1000 matrices vs oracle (tol 1e-9): " +
             std::to_string(oracle_mismatches) + " mismatches; dominance " +
             std::to_string(dominance_failures) + ", scale invariance " +
             std::to_string(scaling_failures) + " failures";
  return r;
}

// ---- checks 6 to 8: benchmark batch with the shipped configurations ----

struct CellStats {
  int min_cost = 0;
  double mean_cost = 0.0;
  double mean_nfe = 0.0;
};

struct Batch {
  std::map<int, std::map<Algorithm, CellStats>> bySize;
  double seconds_at_100 = 0.0;
};

Batch run_reference_batch() {
  Batch batch;
  const int reps = 10;
  for (int n : {8, 25, 100}) {
    const auto start = std::chrono::steady_clock::now();
    for (Algorithm a : kAlgorithms) {
      const std::optional<AlgorithmConfig> config = reference_config(a, n);
      CellStats stats;
      stats.min_cost = max_cost(n);
      for (int rep = 0; rep < reps; ++rep) {
        const std::uint64_t seed =
            derive_seed(2024, a, n, Phase::Final, -1, rep);
        const RunRecord run = solve(n, *config, seed);
        stats.min_cost = std::min(stats.min_cost, run.cost);
        stats.mean_cost += run.cost;
        stats.mean_nfe += static_cast<double>(run.nfe);
      }
      stats.mean_cost /= reps;
      stats.mean_nfe /= reps;
      batch.bySize[n][a] = stats;
    }
    if (n == 100) batch.seconds_at_100 = seconds_since(start);
  }
  return batch;
}

Result check_small_board_quality(const Batch& batch) {
  const auto& at8 = batch.bySize.at(8);
  Result r;
  r.pass = at8.at(Algorithm::Brado).min_cost == 0 &&
           at8.at(Algorithm::Ga).min_cost == 0 &&
           at8.at(Algorithm::Ica).min_cost == 0 &&
           at8.at(Algorithm::Mls).min_cost == 0 &&
           at8.at(Algorithm::Pso).min_cost <= 1;
  std::string got;
  for (Algorithm a : {Algorithm::Brado, Algorithm::Ga, Algorithm::Ica,
                      Algorithm::Mls, Algorithm::Pso}) {
    if (!got.empty()) got += ", ";
    got += std::string(to_string(a)) + " min=" +
           std::to_string(at8.at(a).min_cost);
  }
  r.detail = "n=8, 10 runs each: " + got;
  return r;
}

Result check_scaling_order(const Batch& batch) {
  Result r;
  r.pass = true;
  std::string detail;
  for (int n : {25, 100}) {
    const auto& cells = batch.bySize.at(n);
    const double brado = cells.at(Algorithm::Brado).mean_cost;
    for (Algorithm a : kAlgorithms) {
      if (a != Algorithm::Brado && brado >= cells.at(a).mean_cost) r.pass = false;
    }
    const double ls = cells.at(Algorithm::Ls).mean_cost;
    if (ls <= cells.at(Algorithm::Mls).mean_cost ||
        ls <= cells.at(Algorithm::Ils).mean_cost) {
      r.pass = false;
    }
    if (!detail.empty()) detail += "; ";
    detail += "n=" + std::to_string(n) + " mean cost brado=" + fmt_mean(brado) +
              " ls=" + fmt_mean(ls) + " mls=" +
              fmt_mean(cells.at(Algorithm::Mls).mean_cost) + " ils=" +
              fmt_mean(cells.at(Algorithm::Ils).mean_cost);
  }
  if (batch.seconds_at_100 >= 1800.0) r.pass = false;
  r.detail = detail + "; n=100 batch took " + fmt_seconds(batch.seconds_at_100) +
             " (limit 1800s)";
  return r;
}

Result check_nfe_order(const Batch& batch) {
  Result r;
  r.pass = true;
  std::string detail;
  for (const auto& [n, cells] : batch.bySize) {
    const double ls = cells.at(Algorithm::Ls).mean_nfe;
    const double brado = cells.at(Algorithm::Brado).mean_nfe;
    for (const auto& [a, stats] : cells) {
      if (a != Algorithm::Ls && stats.mean_nfe <= ls) r.pass = false;
    }
    if (brado < 10.0 * ls) r.pass = false;
    if (!detail.empty()) detail += "; ";
    detail += "n=" + std::to_string(n) + " mean NFE ls=" + fmt_mean(ls) +
              " brado=" + fmt_mean(brado);
  }
  r.detail = detail;
  return r;
}

// ---- check 9: rerunning the experiment reproduces the results file ----

// results.csv with the elapsed_ms column blanked out; wall time is the one
// value allowed to differ between runs.
std::string stable_csv(const std::filesystem::path& dir) {
  std::ifstream in(dir / kResultsCsvName);
  std::string out, line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() == 11) fields[9].clear();
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += fields[i];
    }
    out += '\n';
  }
  return out;
}

void run_pipeline(const ExperimentPlan& plan, const std::filesystem::path& dir) {
  const Harness harness(plan, 1);
  RunManifest manifest;
  manifest.plan = plan;
  manifest.plan_digest = plan_digest(plan);
  manifest.created = current_timestamp();
  std::vector<PhasedRecord> records;
  for (Algorithm a : plan.algorithms) {
    manifest.put_design(a, build_design(tuning_grid(a)));
    for (int n : plan.sizes) {
      const TuningOutcome tuning = harness.run_tuning_phase(a, n);
      records.insert(records.end(), tuning.records.begin(), tuning.records.end());
      const AlgorithmConfig& chosen = tuning.configs[tuning.chosen_index];
      TunedEntry entry;
      entry.algorithm = a;
      entry.n = n;
      entry.design_row = static_cast<int>(tuning.chosen_index);
      entry.config = chosen;
      manifest.put_tuned(entry);
      for (const auto& batch : {harness.run_validation_phase(a, n, chosen),
                                harness.run_final_phase(a, n, chosen)}) {
        records.insert(records.end(), batch.begin(), batch.end());
      }
    }
  }
  write_results(dir, manifest, records);
}

Result check_determinism() {
  ExperimentPlan plan;
  plan.algorithms = {Algorithm::Ls, Algorithm::Mls};
  plan.sizes = {6, 8};
  plan.tuning_replications = 2;
  plan.validation_replications = 2;
  plan.final_replications = 3;
  plan.master_seed = 4242;

  const auto root = std::filesystem::temp_directory_path();
  const auto tag = std::to_string(std::random_device{}());
  const auto dir1 = root / ("nqopt_accept_a_" + tag);
  const auto dir2 = root / ("nqopt_accept_b_" + tag);
  run_pipeline(plan, dir1);
  run_pipeline(plan, dir2);

  const std::string csv1 = stable_csv(dir1);
  const std::string csv2 = stable_csv(dir2);
  const std::size_t lines =
      static_cast<std::size_t>(std::count(csv1.begin(), csv1.end(), '\n'));
  Result r;
  r.pass = !csv1.empty() && csv1 == csv2;
  r.detail = "two pipeline runs, " + std::to_string(lines) +
             " result lines each, identical outside the elapsed column: " +
             (r.pass ? "yes" : "no");
  std::filesystem::remove_all(dir1);
  std::filesystem::remove_all(dir2);
  return r;
}

// ---- check 10: solver contracts over random configurations ----

AlgorithmConfig random_grid_config(Algorithm a, Rng& rng) {
  const FactorGrid grid = tuning_grid(a);
  std::vector<double> values;
  values.reserve(grid.factors.size());
  for (const Factor& f : grid.factors) {
    values.push_back(f.levels[rng.index(f.levels.size())]);
  }
  return config_from_values(a, values);
}

Result check_solver_contracts() {
  const int n = 10;
  int violations = 0;
  int pairs = 0;
  for (Algorithm a : kAlgorithms) {
    Rng meta(0xACCE97 ^ static_cast<std::uint64_t>(a));
    for (int pair = 0; pair < 100; ++pair) {
      ++pairs;
      const AlgorithmConfig config = random_grid_config(a, meta);
      const std::uint64_t seed = meta.next_u64();

      std::uint64_t evaluations = 0;
      std::vector<IterationStats> iterations;
      SolveOptions options;
      options.on_evaluation = [&](const Placement&, int) { ++evaluations; };
      options.on_iteration = [&](const IterationStats& stats) {
        iterations.push_back(stats);
      };
      const RunRecord record = solve(n, config, seed, options);

      bool ok = record.nfe == evaluations;
      for (std::size_t i = 1; i < iterations.size(); ++i) {
        if (iterations[i].best_cost > iterations[i - 1].best_cost) ok = false;
        if (iterations[i].population != iterations[0].population) ok = false;
      }
      if (std::holds_alternative<IlsConfig>(config)) {
        const auto& c = std::get<IlsConfig>(config);
        if (record.iterations > static_cast<std::uint64_t>(1 + c.restarts)) {
          ok = false;
        }
      } else {
        int flat = 0, longest = 0, best = -1;
        for (const IterationStats& stats : iterations) {
          if (best < 0 || stats.best_cost < best) {
            best = stats.best_cost;
            flat = 0;
          } else {
            ++flat;
          }
          longest = std::max(longest, flat);
        }
        const int limit = std::visit([](const auto& c) { return c.max_stall; },
                                     config);
        if (longest > limit) ok = false;
      }
      if (!ok) ++violations;
    }
  }
  Result r;
  r.pass = violations == 0;
  r.detail = std::to_string(pairs) + " (config, seed) pairs at n=10, " +
             std::to_string(violations) + " contract violations";
  return r;
}

}  // namespace

int main() {
  struct Check {
    const char* name;
    Result result;
  };
  std::vector<Check> checks;
  checks.push_back({"01 cost function matches the pairwise oracle", check_cost_oracle()});
  checks.push_back({"02 full 8-queens solution count", check_solution_count()});
  checks.push_back({"03 tuning design row counts", check_design_rows()});
  checks.push_back({"04 embedded arrays balanced at strength 2", check_orthogonal_arrays()});
  checks.push_back({"05 ranking stage matches the hand method", check_topsis()});

  const Batch batch = run_reference_batch();
  checks.push_back({"06 small-board success with shipped configs", check_small_board_quality(batch)});
  checks.push_back({"07 mean cost ordering at n=25 and n=100", check_scaling_order(batch)});
  checks.push_back({"08 evaluation count ordering at every size", check_nfe_order(batch)});
  checks.push_back({"09 rerun reproduces the results file", check_determinism()});
  checks.push_back({"10 solver contracts on random configs", check_solver_contracts()});

  bool all_pass = true;
  for (const Check& check : checks) {
    if (!check.result.pass) all_pass = false;
    std::printf("%s  %s: %s\n", check.result.pass ? "PASS" : "FAIL", check.name,
                check.result.detail.c_str());
  }
  std::printf("%s\n", all_pass ? "acceptance: all checks passed"
                               : "acceptance: FAILURES present");
  return all_pass ? 0 : 1;
}
