#pragma once

#include <optional>
#include <vector>

#include "nqopt/solver.hpp"

namespace nqopt {

// Board sizes with pre-tuned reference configurations.
const std::vector<int>& reference_sizes();

// Pre-tuned configuration for one algorithm at one board size, or nullopt if
// the size is not covered. A handful of entries sit outside the tuning grids;
// they are kept as-is and validate_config flags them as warnings.
std::optional<AlgorithmConfig> reference_config(Algorithm a, int n);

}  // namespace nqopt
