#include <utility>

#include "solver_impl.hpp"

namespace nqopt::detail {

// First-improvement walk over single-row reassignments; the kick radius only
// shapes the starting point handed in by the caller.
void descend(Placement start, int max_stall, Rng& rng, CostEvaluator& eval) {
  if (eval.stopped()) return;
  const int n = eval.n();
  Placement cur = std::move(start);
  int cur_cost = eval(cur);
  int stall = 0;
  while (!eval.stopped() && stall < max_stall) {
    const std::size_t row = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
    const int old_col = cur[row];
    cur[row] = rng.uniform_int(0, n - 1);
    const int cand_cost = eval(cur);
    if (cand_cost < cur_cost) {
      cur_cost = cand_cost;
      stall = 0;
    } else {
      cur[row] = old_col;
      ++stall;
    }
  }
}

void steepest_descend(Placement start, Rng& rng, CostEvaluator& eval) {
  if (eval.stopped()) return;
  const int n = eval.n();
  Placement cur = std::move(start);
  int cur_cost = eval(cur);
  Placement cand;
  while (!eval.stopped()) {
    // Sample n single-row reassignments, keep the best (first on ties).
    int best_cost = cur_cost;
    Placement best;
    for (int s = 0; s < n && !eval.stopped(); ++s) {
      cand = cur;
      cand[static_cast<std::size_t>(rng.uniform_int(0, n - 1))] =
          rng.uniform_int(0, n - 1);
      const int cand_cost = eval(cand);
      if (cand_cost < best_cost) {
        best_cost = cand_cost;
        best = cand;
      }
    }
    if (best_cost >= cur_cost) break;  // local optimum of the sampled step
    cur = std::move(best);
    cur_cost = best_cost;
  }
}

std::uint64_t run(int n, const LsConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt) {
  Placement cur = random_placement(n, InitMethod::UniformColumns, rng);
  int cur_cost = eval(cur);
  StopState stop;
  stop.note(cur_cost);
  std::uint64_t iter = 0;
  while (!eval.stopped() && !stop.exhausted(cfg.max_stall)) {
    Placement cand = perturb(cur, cfg.radius, rng);
    const int cand_cost = eval(cand);
    if (cand_cost < cur_cost) {
      cur = std::move(cand);
      cur_cost = cand_cost;
    }
    stop.note(cur_cost);
    ++iter;
    report_iteration(opt, iter, eval, 1);
  }
  return iter;
}

std::uint64_t run(int n, const IlsConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt) {
  descend(random_placement(n, cfg.init_method, rng), cfg.max_stall, rng, eval);
  std::uint64_t iter = 1;
  report_iteration(opt, iter, eval, 1);
  for (int r = 0; r < cfg.restarts && !eval.stopped(); ++r) {
    descend(perturb(eval.best(), cfg.radius, rng), cfg.max_stall, rng, eval);
    ++iter;
    report_iteration(opt, iter, eval, 1);
  }
  return iter;
}

std::uint64_t run(int n, const MlsConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt) {
  steepest_descend(random_placement(n, InitMethod::UniformColumns, rng), rng,
                   eval);
  StopState stop;
  stop.note(eval.best_cost());
  std::uint64_t iter = 1;
  report_iteration(opt, iter, eval, 1);
  // Restart from a perturbed copy of the best; the stall rule only binds when
  // restarts outnumber it, which the tuned grids never do.
  for (int r = 0;
       r < cfg.restarts && !eval.stopped() && !stop.exhausted(cfg.max_stall);
       ++r) {
    steepest_descend(perturb(eval.best(), cfg.radius, rng), rng, eval);
    stop.note(eval.best_cost());
    ++iter;
    report_iteration(opt, iter, eval, 1);
  }
  return iter;
}

}  // namespace nqopt::detail
