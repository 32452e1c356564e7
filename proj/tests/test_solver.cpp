#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "doctest.h"
#include "nqopt/design.hpp"
#include "nqopt/solver.hpp"

using namespace nqopt;

namespace {

// A config with every factor drawn uniformly from its tuning levels.
AlgorithmConfig random_grid_config(Algorithm a, Rng& rng) {
  const FactorGrid grid = tuning_grid(a);
  std::vector<double> values;
  values.reserve(grid.factors.size());
  for (const Factor& f : grid.factors) {
    values.push_back(f.levels[rng.index(f.levels.size())]);
  }
  return config_from_values(a, values);
}

struct Trace {
  std::uint64_t evaluations = 0;
  bool eval_after_solution = false;
  int last_cost = -1;
  std::vector<IterationStats> iterations;
};

RunRecord traced_solve(int n, const AlgorithmConfig& config, std::uint64_t seed,
                       Trace& trace, std::uint64_t nfe_cap = 1'000'000) {
  SolveOptions options;
  options.nfe_cap = nfe_cap;
  options.on_evaluation = [&trace](const Placement&, int cost) {
    if (trace.last_cost == 0) trace.eval_after_solution = true;
    trace.last_cost = cost;
    ++trace.evaluations;
  };
  options.on_iteration = [&trace](const IterationStats& stats) {
    trace.iterations.push_back(stats);
  };
  return solve(n, config, seed, options);
}

int stall_limit(const AlgorithmConfig& config) {
  return std::visit([](const auto& c) { return c.max_stall; }, config);
}

// Longest run of consecutive iteration reports without a strict improvement
// of the best cost.
int longest_flat_stretch(const std::vector<IterationStats>& iterations) {
  int longest = 0, current = 0, best = -1;
  for (const IterationStats& stats : iterations) {
    if (best < 0 || stats.best_cost < best) {
      best = stats.best_cost;
      current = 0;
    } else {
      ++current;
    }
    longest = std::max(longest, current);
  }
  return longest;
}

}  // namespace

TEST_CASE("solver contracts hold for random tuned-grid configs") {
  const int n = 10;
  for (Algorithm a : kAlgorithms) {
    CAPTURE(to_string(a));
    Rng meta(0xABCDEF ^ static_cast<std::uint64_t>(a));
    for (int pair = 0; pair < 100; ++pair) {
      const AlgorithmConfig config = random_grid_config(a, meta);
      const std::uint64_t seed = meta.next_u64();

      Trace trace;
      const RunRecord record = traced_solve(n, config, seed, trace);

      // Counted NFE matches the observer tally exactly.
      CHECK(record.nfe == trace.evaluations);
      CHECK(record.cost >= 0);
      CHECK(record.cost <= max_cost(n));
      CHECK(record.best.size() == static_cast<std::size_t>(n));
      CHECK(evaluate_cost(record.best) == record.cost);

      // Reported best-so-far never increases.
      for (std::size_t i = 1; i < trace.iterations.size(); ++i) {
        CHECK(trace.iterations[i].best_cost <= trace.iterations[i - 1].best_cost);
      }
      if (!trace.iterations.empty()) {
        CHECK(trace.iterations.back().best_cost == record.cost);
      }

      // A run that hits cost zero stops evaluating within that step.
      CHECK(!trace.eval_after_solution);
      if (record.cost == 0) CHECK(!record.capped);

      // Population methods hold their candidate count constant; the stall
      // rule bounds flat stretches of the outer loop.
      if (std::holds_alternative<IlsConfig>(config)) {
        const auto& c = std::get<IlsConfig>(config);
        CHECK(record.iterations <= static_cast<std::uint64_t>(1 + c.restarts));
      } else {
        CHECK(longest_flat_stretch(trace.iterations) <= stall_limit(config));
      }
      if (std::holds_alternative<MlsConfig>(config)) {
        const auto& c = std::get<MlsConfig>(config);
        CHECK(record.iterations <= static_cast<std::uint64_t>(1 + c.restarts));
      }
      for (const IterationStats& stats : trace.iterations) {
        CHECK(stats.population == trace.iterations.front().population);
      }

      CHECK(record.algorithm == a);
      CHECK(record.n == n);
      CHECK(record.seed == seed);
      CHECK(record.iterations == trace.iterations.size());
    }
  }
}

TEST_CASE("identical inputs give identical runs") {
  Rng meta(99);
  for (Algorithm a : kAlgorithms) {
    CAPTURE(to_string(a));
    const AlgorithmConfig config = random_grid_config(a, meta);
    const std::uint64_t seed = meta.next_u64();

    const RunRecord first = solve(10, config, seed);
    const RunRecord second = solve(10, config, seed);
    CHECK(first.cost == second.cost);
    CHECK(first.nfe == second.nfe);
    CHECK(first.iterations == second.iterations);
    CHECK(first.best == second.best);
    CHECK(first.capped == second.capped);
  }
}

TEST_CASE("single-cell boards are solved immediately") {
  for (Algorithm a : kAlgorithms) {
    CAPTURE(to_string(a));
    Rng meta(3);
    const RunRecord record = solve(1, random_grid_config(a, meta), 42);
    CHECK(record.cost == 0);
    CHECK(record.nfe >= 1);
  }
}

TEST_CASE("the evaluation budget is respected and flagged") {
  // A tiny cap forces every algorithm to stop early and report it.
  Rng meta(17);
  for (Algorithm a : kAlgorithms) {
    CAPTURE(to_string(a));
    const AlgorithmConfig config = random_grid_config(a, meta);
    SolveOptions options;
    options.nfe_cap = 7;
    const RunRecord record = solve(30, config, meta.next_u64(), options);
    CHECK(record.nfe <= 7);
    if (record.cost > 0) CHECK(record.capped);
  }
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(solve(0, LsConfig{}, 1), std::invalid_argument);

  LsConfig bad_stall;
  bad_stall.max_stall = 0;
  CHECK_THROWS_AS(solve(8, bad_stall, 1), std::invalid_argument);

  GaConfig tiny_pop;
  tiny_pop.population = 1;
  CHECK_THROWS_AS(solve(8, tiny_pop, 1), std::invalid_argument);

  BradoConfig crowded;
  crowded.countries = 10;
  crowded.population = 5;
  CHECK_THROWS_AS(solve(8, crowded, 1), std::invalid_argument);

  SolveOptions no_budget;
  no_budget.nfe_cap = 0;
  CHECK_THROWS_AS(solve(8, LsConfig{}, 1, no_budget), std::invalid_argument);
}

TEST_CASE("out-of-grid reference values only warn") {
  IcaConfig odd;
  odd.uniting_threshold = 0.1;  // outside the tuning levels, legal per contract
  const ConfigCheck check = validate_config(odd);
  CHECK(check.ok());
  CHECK(!check.warnings.empty());
}
