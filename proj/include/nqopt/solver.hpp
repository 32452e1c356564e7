#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nqopt/problem.hpp"

namespace nqopt {

enum class Algorithm { Brado, Ga, Ica, Pso, Ils, Ls, Mls };

inline constexpr std::array<Algorithm, 7> kAlgorithms = {
    Algorithm::Brado, Algorithm::Ga,  Algorithm::Ica, Algorithm::Pso,
    Algorithm::Ils,   Algorithm::Ls,  Algorithm::Mls,
};

// Lowercase identifier, used in files and on the command line.
const char* to_string(Algorithm a);
// Uppercase label for report output.
const char* display_name(Algorithm a);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

// Population method with agents grouped into countries over a random
// neighbourhood graph; agents drift toward their country's best member and
// away from its worst, and emigrate when they stagnate.
struct BradoConfig {
  int stagnation_threshold = 15;    // iterations without personal improvement before emigrating
  double best_neighbor_weight = 0.8;
  double worst_repulsion = 0.15;
  int population = 90;
  double edge_probability = 0.6;    // density of the country adjacency graph
  double return_probability = 0.2;  // chance an emigrant returns home next iteration
  int countries = 6;
  int max_stall = 100;
};

struct GaConfig {
  int max_stall = 150;
  int population = 50;
  double crossover_probability = 0.1;
  double survival_rate = 0.6;  // fraction kept as parents each generation
};

struct IcaConfig {
  double revolution_rate = 0.4;
  double uniting_threshold = 0.02;  // fraction of the search-space diagonal
  double zeta = 0.04;               // colony share of an empire's total power
  int population = 90;
  double assimilation_coefficient = 1.0;
  int imperialists = 8;
  int max_stall = 100;
};

struct PsoConfig {
  int max_stall = 30;
  int population = 100;
  double cognitive = 1.5;
  double social = 0.5;
};

struct IlsConfig {
  InitMethod init_method = InitMethod::UniformColumns;
  int max_stall = 100;   // patience of each inner descent
  double radius = 1.0;   // perturbation strength between restarts
  int restarts = 15;
};

struct LsConfig {
  int max_stall = 150;
  double radius = 0.8;
};

struct MlsConfig {
  int max_stall = 150;  // restarts without improvement of the overall best
  double radius = 1.0;
  int restarts = 20;
};

using AlgorithmConfig = std::variant<BradoConfig, GaConfig, IcaConfig,
                                     PsoConfig, IlsConfig, LsConfig, MlsConfig>;

Algorithm algorithm_of(const AlgorithmConfig& config);

struct ConfigCheck {
  std::vector<std::string> errors;    // structural problems, reject the config
  std::vector<std::string> warnings;  // legal but outside the usual tuning ranges
  bool ok() const { return errors.empty(); }
};

ConfigCheck validate_config(const AlgorithmConfig& config);

struct IterationStats {
  std::uint64_t iteration;  // 1-based outer iteration
  int best_cost;            // best seen so far, across the whole run
  int population;           // number of candidate solutions currently held
};

struct SolveOptions {
  std::uint64_t nfe_cap = 1'000'000;
  std::function<void(const IterationStats&)> on_iteration;
  CostEvaluator::Observer on_evaluation;
};

struct RunRecord {
  Algorithm algorithm;
  int n = 0;
  std::uint64_t seed = 0;
  Placement best;
  int cost = 0;
  std::uint64_t nfe = 0;
  std::uint64_t iterations = 0;
  double elapsed_ms = 0.0;
  bool capped = false;  // budget ran out before a solution was found
};

// Runs the configured algorithm on an n-queens instance of size n. Fully
// deterministic in (n, config, seed, nfe_cap). Throws std::invalid_argument
// if n < 1 or validate_config reports errors; warnings are ignored here.
RunRecord solve(int n, const AlgorithmConfig& config, std::uint64_t seed,
                const SolveOptions& options = {});

// Stall bookkeeping shared by the solvers: counts consecutive iterations
// without strict improvement of the best cost.
struct StopState {
  int best_so_far = std::numeric_limits<int>::max();
  int stall = 0;

  // Call once per iteration with the current best; returns true on strict
  // improvement (and resets the stall counter).
  bool note(int best_cost) {
    if (best_cost < best_so_far) {
      best_so_far = best_cost;
      stall = 0;
      return true;
    }
    ++stall;
    return false;
  }

  bool exhausted(int max_stall) const { return stall >= max_stall; }
};

}  // namespace nqopt
