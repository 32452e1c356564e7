#include <algorithm>
#include <vector>

#include "solver_impl.hpp"

namespace nqopt::detail {

namespace {

struct Particle {
  std::vector<double> x;
  std::vector<double> v;
  std::vector<double> best_x;
  int best_cost = 0;
};

constexpr double kInertia = 0.7;

}  // namespace

std::uint64_t run(int n, const PsoConfig& cfg, Rng& rng, CostEvaluator& eval,
                  const SolveOptions& opt) {
  const double hi = n - 1.0;
  const double vmax = (n - 1.0) / 2.0;

  std::vector<Particle> swarm;
  swarm.reserve(static_cast<std::size_t>(cfg.population));
  std::vector<double> gbest_x;
  int gbest_cost = max_cost(n) + 1;
  Placement decoded;
  for (int i = 0; i < cfg.population && !eval.stopped(); ++i) {
    Particle p;
    p.x.resize(static_cast<std::size_t>(n));
    for (double& xd : p.x) xd = rng.uniform(0.0, hi);
    p.v.assign(static_cast<std::size_t>(n), 0.0);
    decode_continuous_into(p.x, n, decoded);
    p.best_cost = eval(decoded);
    p.best_x = p.x;
    if (p.best_cost < gbest_cost) {
      gbest_cost = p.best_cost;
      gbest_x = p.x;
    }
    swarm.push_back(std::move(p));
  }

  StopState stop;
  stop.note(eval.best_cost());
  std::uint64_t iter = 0;
  while (!eval.stopped() && !stop.exhausted(cfg.max_stall)) {
    for (Particle& p : swarm) {
      if (eval.stopped()) break;
      for (int d = 0; d < n; ++d) {
        const std::size_t di = static_cast<std::size_t>(d);
        const double r1 = rng.uniform();
        const double r2 = rng.uniform();
        double v = kInertia * p.v[di] + cfg.cognitive * r1 * (p.best_x[di] - p.x[di]) +
                   cfg.social * r2 * (gbest_x[di] - p.x[di]);
        v = std::clamp(v, -vmax, vmax);
        p.v[di] = v;
        p.x[di] = std::clamp(p.x[di] + v, 0.0, hi);
      }
      decode_continuous_into(p.x, n, decoded);
      const int cost = eval(decoded);
      if (cost < p.best_cost) {
        p.best_cost = cost;
        p.best_x = p.x;
      }
      if (cost < gbest_cost) {
        gbest_cost = cost;
        gbest_x = p.x;
      }
    }
    stop.note(eval.best_cost());
    ++iter;
    report_iteration(opt, iter, eval, cfg.population);
  }
  return iter;
}

}  // namespace nqopt::detail
