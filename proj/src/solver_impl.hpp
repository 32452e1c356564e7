#pragma once

#include <cstdint>

#include "nqopt/solver.hpp"

namespace nqopt::detail {

// One overload per algorithm; returns the number of outer iterations. The
// evaluator tracks best/nfe/cap, the caller assembles the RunRecord.
std::uint64_t run(int n, const LsConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt);
std::uint64_t run(int n, const IlsConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt);
std::uint64_t run(int n, const MlsConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt);
std::uint64_t run(int n, const GaConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt);
std::uint64_t run(int n, const PsoConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt);
std::uint64_t run(int n, const IcaConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt);
std::uint64_t run(int n, const BradoConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt);

inline void report_iteration(const SolveOptions& opt, std::uint64_t iteration,
                             const CostEvaluator& eval, int population) {
  if (opt.on_iteration) {
    opt.on_iteration(IterationStats{iteration, eval.best_cost(), population});
  }
}

// First-improvement descent from start: each step reassigns one random row to
// a random column and accepts iff strictly better, until max_stall
// consecutive candidates fail (or the evaluator stops). ILS chains these
// between kicks; LS instead draws whole perturb(current, radius) candidates.
void descend(Placement start, int max_stall, Rng& rng, CostEvaluator& eval);

// Steepest descent from start: each step samples n single-row reassignments,
// takes the best of the sample, accepts iff strictly better than the current
// point, and stops at the first step that fails to improve (or when the
// evaluator stops). Used by MLS.
void steepest_descend(Placement start, Rng& rng, CostEvaluator& eval);

}  // namespace nqopt::detail
