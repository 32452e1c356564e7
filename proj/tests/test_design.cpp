#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "nqopt/design.hpp"

using namespace nqopt;

namespace {

// Every level appears equally often in every column.
void check_balance(const OrthogonalArray& a) {
  for (std::size_t c = 0; c < a.columns(); ++c) {
    const int levels = a.level_counts[c];
    REQUIRE(a.rows % static_cast<std::size_t>(levels) == 0);
    const std::size_t expected = a.rows / static_cast<std::size_t>(levels);
    std::map<int, std::size_t> counts;
    for (std::size_t r = 0; r < a.rows; ++r) {
      const int cell = a.cells[r][c];
      REQUIRE(cell >= 0);
      REQUIRE(cell < levels);
      ++counts[cell];
    }
    for (int lv = 0; lv < levels; ++lv) CHECK(counts[lv] == expected);
  }
}

// Strength two: every ordered pair of levels appears equally often in every
// pair of columns.
void check_pair_coverage(const OrthogonalArray& a) {
  for (std::size_t c1 = 0; c1 < a.columns(); ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < a.columns(); ++c2) {
      const std::size_t combos = static_cast<std::size_t>(a.level_counts[c1]) *
                                 static_cast<std::size_t>(a.level_counts[c2]);
      REQUIRE(a.rows % combos == 0);
      const std::size_t expected = a.rows / combos;
      std::map<std::pair<int, int>, std::size_t> counts;
      for (std::size_t r = 0; r < a.rows; ++r) {
        ++counts[{a.cells[r][c1], a.cells[r][c2]}];
      }
      CHECK(counts.size() == combos);
      for (const auto& [combo, count] : counts) CHECK(count == expected);
    }
  }
}

}  // namespace

TEST_CASE("embedded arrays are balanced with full pair coverage") {
  const OrthogonalArray& a16 = embedded_array16();
  CHECK(a16.rows == 16);
  CHECK(a16.columns() == 5);
  for (int levels : a16.level_counts) CHECK(levels == 4);
  check_balance(a16);
  check_pair_coverage(a16);

  const OrthogonalArray& a32 = embedded_array32();
  CHECK(a32.rows == 32);
  CHECK(a32.columns() == 10);
  CHECK(a32.level_counts[0] == 2);
  for (std::size_t c = 1; c < a32.columns(); ++c) CHECK(a32.level_counts[c] == 4);
  check_balance(a32);
  check_pair_coverage(a32);
}

TEST_CASE("design row counts per algorithm") {
  const std::map<Algorithm, std::size_t> expected{
      {Algorithm::Brado, 32}, {Algorithm::Ga, 16}, {Algorithm::Ica, 32},
      {Algorithm::Ils, 32},   {Algorithm::Ls, 16}, {Algorithm::Mls, 16},
      {Algorithm::Pso, 16},
  };
  for (const auto& [a, rows] : expected) {
    const FactorGrid grid = tuning_grid(a);
    const OrthogonalArray design = build_design(grid);
    CHECK(design.rows == rows);
    CHECK(design.columns() == grid.factors.size());
    for (std::size_t c = 0; c < design.columns(); ++c) {
      CHECK(design.level_counts[c] ==
            static_cast<int>(grid.factors[c].levels.size()));
    }
    check_balance(design);
  }
}

TEST_CASE("expanded designs substitute factor levels cell by cell") {
  for (Algorithm a : kAlgorithms) {
    const FactorGrid grid = tuning_grid(a);
    const OrthogonalArray design = build_design(grid);
    const std::vector<AlgorithmConfig> configs = expand_design(design, grid);
    REQUIRE(configs.size() == design.rows);
    for (std::size_t r = 0; r < configs.size(); ++r) {
      CHECK(algorithm_of(configs[r]) == a);
      const std::vector<double> values = values_of(configs[r]);
      REQUIRE(values.size() == grid.factors.size());
      for (std::size_t c = 0; c < values.size(); ++c) {
        const std::size_t level = static_cast<std::size_t>(design.cells[r][c]);
        CHECK(values[c] == grid.factors[c].levels[level]);
      }
    }
  }
}

TEST_CASE("expanded configs are distinct within a design") {
  for (Algorithm a : kAlgorithms) {
    const FactorGrid grid = tuning_grid(a);
    const auto configs = expand_design(build_design(grid), grid);
    std::set<std::vector<double>> rows;
    for (const AlgorithmConfig& config : configs) rows.insert(values_of(config));
    CHECK(rows.size() == configs.size());
  }
}

TEST_CASE("config round trips through its factor values") {
  for (Algorithm a : kAlgorithms) {
    const FactorGrid grid = tuning_grid(a);
    std::vector<double> values;
    values.reserve(grid.factors.size());
    for (const Factor& f : grid.factors) values.push_back(f.levels.back());
    const AlgorithmConfig config = config_from_values(a, values);
    CHECK(algorithm_of(config) == a);
    CHECK(values_of(config) == values);
  }
}

TEST_CASE("impossible factor profiles are rejected") {
  FactorGrid bad;
  bad.algorithm = Algorithm::Ls;
  bad.factors.assign(11, Factor{"f", {1, 2, 3, 4}});  // more columns than any array
  CHECK_THROWS_AS(build_design(bad), std::invalid_argument);

  FactorGrid three_levels;
  three_levels.algorithm = Algorithm::Ls;
  three_levels.factors = {Factor{"f", {1, 2, 3}}};
  CHECK_THROWS_AS(build_design(three_levels), std::invalid_argument);

  CHECK_THROWS_AS(config_from_values(Algorithm::Ls, {1.0}), std::invalid_argument);
}
