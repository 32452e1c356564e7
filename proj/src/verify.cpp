#include "nqopt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nqopt/design.hpp"
#include "nqopt/problem.hpp"
#include "nqopt/topsis.hpp"

namespace nqopt {

namespace {

// Independent quadratic-time cost used to cross-check the bucket kernel.
int pairwise_cost(const Placement& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> seen(n, 0);
  int distinct = 0;
  for (int c : p) {
    if (seen[c]++ == 0) ++distinct;
  }
  int clashes = n - distinct;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i + p[i] == j + p[j] || i - p[i] == j - p[j]) ++clashes;
    }
  }
  return clashes;
}

CheckResult check_cost_exhaustive() {
  std::uint64_t checked = 0;
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n);
    Placement p(n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t rest = code;
      for (int i = 0; i < n; ++i) {
        p[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      const int fast = evaluate_cost(p);
      const int slow = pairwise_cost(p);
      if (fast != slow) {
        std::ostringstream what;
        what << "mismatch at n=" << n << " code=" << code << ": kernel " << fast
             << " vs pairwise " << slow;
        return {"cost kernel vs pairwise count, all boards n<=6", false, what.str()};
      }
      ++checked;
    }
  }
  return {"cost kernel vs pairwise count, all boards n<=6", true,
          std::to_string(checked) + " placements checked"};
}

CheckResult check_cost_known_boards() {
  struct Case {
    Placement board;
    int expected;
  };
  const std::vector<Case> cases = {
      {{0, 4, 7, 5, 2, 6, 1, 3}, 0},              // valid 8-queens layout
      {{0, 1, 2, 3, 4, 5, 6, 7}, 56},             // one shared diagonal, 8*7 ordered pairs
      {{3, 3, 3, 3, 3, 3, 3, 3}, 7},              // one shared column
      {{0}, 0},
      {{0, 0}, 1},
      {{0, 1}, 2},
      {{1, 0}, 2},
  };
  for (const Case& c : cases) {
    const int got = evaluate_cost(c.board);
    if (got != c.expected) {
      std::ostringstream what;
      what << "board of size " << c.board.size() << " expected " << c.expected
           << " got " << got;
      return {"cost of hand-checked boards", false, what.str()};
    }
  }
  for (int n = 1; n <= 12; ++n) {
    const int expected = (n - 1) + n * (n - 1);
    if (max_cost(n) != expected) {
      return {"cost of hand-checked boards", false,
              "max_cost(" + std::to_string(n) + ") != " + std::to_string(expected)};
    }
  }
  return {"cost of hand-checked boards", true, ""};
}

CheckResult check_eight_queens_count() {
  Placement p(8);
  std::iota(p.begin(), p.end(), 0);
  int solutions = 0;
  do {
    if (evaluate_cost(p) == 0) ++solutions;
  } while (std::next_permutation(p.begin(), p.end()));
  const bool pass = solutions == 92;
  return {"92 zero-cost permutations on the 8x8 board", pass,
          "found " + std::to_string(solutions)};
}

CheckResult check_array_structure(const OrthogonalArray& array, const std::string& label) {
  const std::string name = label + " balance and pair coverage";
  const std::size_t cols = array.columns();
  const std::size_t rows = array.rows;
  for (std::size_t c = 0; c < cols; ++c) {
    const std::size_t levels = static_cast<std::size_t>(array.level_counts[c]);
    if (levels == 0 || rows % levels != 0) {
      return {name, false, "column " + std::to_string(c) + " level count does not divide rows"};
    }
    std::vector<std::size_t> counts(levels, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      const int v = array.cells[r][c];
      if (v < 0 || static_cast<std::size_t>(v) >= levels) {
        return {name, false, "cell out of range in column " + std::to_string(c)};
      }
      ++counts[static_cast<std::size_t>(v)];
    }
    for (std::size_t v = 0; v < levels; ++v) {
      if (counts[v] != rows / levels) {
        return {name, false,
                "column " + std::to_string(c) + " level " + std::to_string(v) +
                    " appears " + std::to_string(counts[v]) + " times"};
      }
    }
  }
  for (std::size_t a = 0; a < cols; ++a) {
    for (std::size_t b = a + 1; b < cols; ++b) {
      const std::size_t combos = static_cast<std::size_t>(array.level_counts[a]) *
                                 static_cast<std::size_t>(array.level_counts[b]);
      if (rows % combos != 0) {
        return {name, false, "columns " + std::to_string(a) + "," + std::to_string(b) +
                                 " cannot be balanced"};
      }
      const std::size_t want = rows / combos;
      std::map<std::pair<int, int>, std::size_t> seen;
      for (std::size_t r = 0; r < rows; ++r) {
        const int va = array.cells[r][a];
        const int vb = array.cells[r][b];
        ++seen[{va, vb}];
      }
      if (seen.size() != combos) {
        return {name, false, "columns " + std::to_string(a) + "," + std::to_string(b) +
                                 " miss level pairs"};
      }
      for (const auto& [combo, count] : seen) {
        if (count != want) {
          return {name, false,
                  "columns " + std::to_string(a) + "," + std::to_string(b) + " pair (" +
                      std::to_string(combo.first) + "," + std::to_string(combo.second) +
                      ") appears " + std::to_string(count) + " times"};
        }
      }
    }
  }
  return {name, true,
          std::to_string(array.rows) + " rows, " + std::to_string(cols) + " columns"};
}

CheckResult check_design_rows() {
  const std::map<Algorithm, int> expected = {
      {Algorithm::Brado, 32}, {Algorithm::Ga, 16},  {Algorithm::Ica, 32},
      {Algorithm::Ils, 32},   {Algorithm::Ls, 16},  {Algorithm::Mls, 16},
      {Algorithm::Pso, 16},
  };
  for (Algorithm a : kAlgorithms) {
    const FactorGrid grid = tuning_grid(a);
    const OrthogonalArray array = build_design(grid);
    const std::size_t want = static_cast<std::size_t>(expected.at(a));
    if (array.rows != want) {
      return {"tuning design sizes per algorithm", false,
              std::string(to_string(a)) + " produced " + std::to_string(array.rows) +
                  " rows, expected " + std::to_string(want)};
    }
    const std::vector<AlgorithmConfig> configs = expand_design(array, grid);
    if (configs.size() != want) {
      return {"tuning design sizes per algorithm", false,
              std::string(to_string(a)) + " expanded to " +
                  std::to_string(configs.size()) + " configs"};
    }
    for (const AlgorithmConfig& config : configs) {
      if (algorithm_of(config) != a) {
        return {"tuning design sizes per algorithm", false,
                std::string(to_string(a)) + " expanded to a foreign config"};
      }
      const std::vector<double> values = values_of(config);
      if (values.size() != grid.factors.size()) {
        return {"tuning design sizes per algorithm", false,
                std::string(to_string(a)) + " config arity mismatch"};
      }
    }
  }
  return {"tuning design sizes per algorithm", true, ""};
}

bool near(double a, double b) { return std::fabs(a - b) <= 1e-12; }

CheckResult check_topsis_fixtures() {
  const std::string name = "closeness ranking fixtures";
  {
    // Hand-computed two-criteria case.
    DecisionMatrix m;
    m.values = {{1.0, 1.0}, {3.0, 2.0}};
    m.weights = {0.6, 0.4};
    m.directions = {Direction::Maximize, Direction::Minimize};
    const TopsisResult r = topsis_rank(m);
    const double expect_a = 0.4 / (1.2 / std::sqrt(2.0) + 0.4);
    if (!near(r.closeness[0], expect_a) || !near(r.closeness[1], 1.0 - expect_a) ||
        r.ranking != std::vector<std::size_t>{1, 0}) {
      std::ostringstream what;
      what << "mixed-direction case gave closeness " << r.closeness[0] << ", "
           << r.closeness[1];
      return {name, false, what.str()};
    }
  }
  {
    // One alternative is the ideal point, the other the anti-ideal.
    DecisionMatrix m;
    m.values = {{3.0, 4.0}, {0.0, 0.0}};
    m.weights = {1.0, 1.0};
    m.directions = {Direction::Maximize, Direction::Maximize};
    const TopsisResult r = topsis_rank(m);
    if (!near(r.closeness[0], 1.0) || !near(r.closeness[1], 0.0)) {
      return {name, false, "extreme case did not produce closeness 1 and 0"};
    }
  }
  {
    // Dominated alternatives must rank in dominance order.
    DecisionMatrix m;
    m.values = {{1.0, 10.0}, {2.0, 20.0}, {3.0, 30.0}};
    m.weights = {0.5, 0.5};
    m.directions = {Direction::Minimize, Direction::Minimize};
    const TopsisResult r = topsis_rank(m);
    if (r.ranking != std::vector<std::size_t>{0, 1, 2}) {
      return {name, false, "dominance order not preserved"};
    }
  }
  {
    // A constant zero column must not poison the normalization.
    DecisionMatrix m;
    m.values = {{0.0, 1.0}, {0.0, 2.0}};
    m.weights = {1.0, 1.0};
    m.directions = {Direction::Minimize, Direction::Minimize};
    const TopsisResult r = topsis_rank(m);
    if (r.ranking != std::vector<std::size_t>{0, 1}) {
      return {name, false, "zero column changed the expected order"};
    }
  }
  {
    std::vector<ConfigAggregate> aggregates = {{4.0, 40.0}, {1.0, 10.0}, {2.0, 20.0}};
    if (select_config_index(aggregates, 0.5, 0.5) != 1) {
      return {name, false, "aggregate selection missed the dominating config"};
    }
  }
  return {name, true, ""};
}

}  // namespace

std::vector<CheckResult> run_verification_suite() {
  std::vector<CheckResult> results;
  results.push_back(check_cost_exhaustive());
  results.push_back(check_cost_known_boards());
  results.push_back(check_eight_queens_count());
  results.push_back(check_array_structure(embedded_array16(), "16-row array"));
  results.push_back(check_array_structure(embedded_array32(), "32-row array"));
  results.push_back(check_design_rows());
  results.push_back(check_topsis_fixtures());
  return results;
}

}  // namespace nqopt
