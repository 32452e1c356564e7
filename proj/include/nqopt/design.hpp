#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nqopt/solver.hpp"

namespace nqopt {

// One tunable parameter and its candidate levels (two or four of them).
struct Factor {
  std::string name;
  std::vector<double> levels;
};

struct FactorGrid {
  Algorithm algorithm;
  std::vector<Factor> factors;

  std::size_t full_factorial_size() const;
};

// The tuning grid for each algorithm: every parameter with its levels, in
// the same order as the fields of the corresponding config struct.
FactorGrid tuning_grid(Algorithm a);

// Fractional-factorial design: rows x columns matrix of level indices.
struct OrthogonalArray {
  std::size_t rows = 0;
  std::vector<int> level_counts;        // levels per column
  std::vector<std::vector<int>> cells;  // rows x columns

  std::size_t columns() const { return level_counts.size(); }
};

// The two embedded strength-2 arrays: 16 runs x 5 four-level columns, and
// 32 runs x (1 two-level + 9 four-level) columns.
const OrthogonalArray& embedded_array16();
const OrthogonalArray& embedded_array32();

// Design for a grid, built from the embedded arrays. Four-level factors take
// four-level columns; a single two-level factor takes the dedicated two-level
// column of the 32-run array; additional two-level factors fold a four-level
// column (levels 0,1,2,3 -> 0,1,0,1). Column order matches the factor order.
// Throws std::invalid_argument when the factor profile does not fit either
// array.
OrthogonalArray build_design(const FactorGrid& grid);

// One config per design row, with each level index replaced by the factor's
// value at that level.
std::vector<AlgorithmConfig> expand_design(const OrthogonalArray& array,
                                           const FactorGrid& grid);

// Build a config from factor-ordered parameter values; the inverse of
// values_of. Throws std::invalid_argument on a size mismatch.
AlgorithmConfig config_from_values(Algorithm a, const std::vector<double>& values);
std::vector<double> values_of(const AlgorithmConfig& config);

}  // namespace nqopt
