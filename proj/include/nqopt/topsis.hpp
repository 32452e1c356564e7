#pragma once

#include <cstddef>
#include <vector>

namespace nqopt {

enum class Direction { Minimize, Maximize };

struct DecisionMatrix {
  std::vector<std::vector<double>> values;  // alternatives x criteria
  std::vector<double> weights;              // one non-negative weight per criterion
  std::vector<Direction> directions;        // one per criterion
};

struct TopsisResult {
  std::vector<double> closeness;             // per alternative, in [0, 1]
  std::vector<std::size_t> ranking;          // alternative indices, best first
};

// Classical TOPSIS: vector normalisation, weighting, distance to the ideal
// and anti-ideal alternatives, closeness d- / (d+ + d-). An alternative at
// distance zero from both gets closeness 0.5 (only possible when all
// alternatives coincide). Equal closeness ranks by lower index. Throws
// std::invalid_argument on empty input, ragged rows, size mismatches, or
// negative weights.
TopsisResult topsis_rank(const DecisionMatrix& m);

struct ConfigAggregate {
  double mean_cost = 0.0;
  double mean_nfe = 0.0;
};

// TOPSIS pick over (mean cost, mean NFE), both minimised. Returns the index
// of the top-ranked row.
std::size_t select_config_index(const std::vector<ConfigAggregate>& aggregates,
                                double weight_cost = 0.5,
                                double weight_nfe = 0.5);

}  // namespace nqopt
